#include "spp/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spp {

int finite_poset::max_rank() const {
    int m = 0;
    for (int r : rank) m = std::max(m, r);
    return m;
}

namespace {

// Longest-path ranks measured upward from the minimal elements.
std::vector<int> longest_up_ranks(const finite_poset& p) {
    std::vector<int> order(static_cast<std::size_t>(p.n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) below[static_cast<std::size_t>(i)] = p.down[static_cast<std::size_t>(i)].count();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
    std::vector<int> r(static_cast<std::size_t>(p.n), 0);
    for (int x : order)
        for (int c : p.lower_covers[static_cast<std::size_t>(x)])
            r[static_cast<std::size_t>(x)] = std::max(r[static_cast<std::size_t>(x)], r[static_cast<std::size_t>(c)] + 1);
    return r;
}

void finish_poset(finite_poset& p) {
    const auto n = static_cast<std::size_t>(p.n);
    p.down.assign(n, bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = p.up[a].find_first(); b != bitset::npos; b = p.up[a].find_next(b))
            p.down[b].set(a);

    // Hasse covers: b covers a iff a < b with nothing strictly between.
    p.upper_covers.assign(n, {});
    p.lower_covers.assign(n, {});
    p.upper_cover_set.assign(n, bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        bitset strict_up = p.up[a];
        strict_up.reset(a);
        for (std::size_t b = strict_up.find_first(); b != bitset::npos; b = strict_up.find_next(b)) {
            bitset between = strict_up & p.down[b];
            between.reset(b);
            if (between.none()) {
                p.upper_covers[a].push_back(static_cast<int>(b));
                p.lower_covers[b].push_back(static_cast<int>(a));
                p.upper_cover_set[a].set(b);
            }
        }
    }

    p.rank = longest_up_ranks(p);

    p.bottom = p.top = -1;
    for (std::size_t a = 0; a < n; ++a) {
        if (p.up[a].count() == n) p.bottom = static_cast<int>(a);
        if (p.down[a].count() == n) p.top = static_cast<int>(a);
    }

    if (p.labels.empty()) {
        p.labels.resize(n);
        for (std::size_t a = 0; a < n; ++a) p.labels[a] = std::to_string(a);
    }
}

} // namespace

finite_poset make_poset(int n, const std::function<bool(int, int)>& leq_fn, std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("make_poset: negative size");
    finite_poset p;
    p.n = n;
    p.labels = std::move(labels);
    const auto un = static_cast<std::size_t>(n);
    p.up.assign(un, bitset(un));
    for (std::size_t a = 0; a < un; ++a)
        for (std::size_t b = 0; b < un; ++b)
            if (leq_fn(static_cast<int>(a), static_cast<int>(b))) p.up[a].set(b);

    for (std::size_t a = 0; a < un; ++a) {
        if (!p.up[a][a]) throw std::logic_error("make_poset: relation is not reflexive");
        for (std::size_t b = p.up[a].find_first(); b != bitset::npos; b = p.up[a].find_next(b)) {
            if (a != b && p.up[b][a]) throw std::logic_error("make_poset: relation is not antisymmetric");
            if (!p.up[b].is_subset_of(p.up[a])) throw std::logic_error("make_poset: relation is not transitive");
        }
    }

    finish_poset(p);
    return p;
}

finite_poset dual(const finite_poset& p) {
    finite_poset d;
    d.n = p.n;
    d.labels = p.labels;
    d.up = p.down;
    finish_poset(d);
    return d;
}

finite_poset direct_product(const finite_poset& a, const finite_poset& b) {
    finite_poset p;
    p.n = a.n * b.n;
    const auto bn = static_cast<std::size_t>(b.n);
    const auto n = static_cast<std::size_t>(p.n);
    p.up.assign(n, bitset(n));
    p.labels.resize(n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            const auto idx = static_cast<std::size_t>(i) * bn + static_cast<std::size_t>(j);
            p.labels[idx] = "(" + a.labels[static_cast<std::size_t>(i)] + "|" + b.labels[static_cast<std::size_t>(j)] + ")";
            for (int i2 = 0; i2 < a.n; ++i2) {
                if (!a.is_leq(i, i2)) continue;
                for (int j2 = 0; j2 < b.n; ++j2)
                    if (b.is_leq(j, j2)) p.up[idx].set(static_cast<std::size_t>(i2) * bn + static_cast<std::size_t>(j2));
            }
        }
    finish_poset(p);
    return p;
}

finite_poset subposet(const finite_poset& p, const std::vector<int>& keep) {
    finite_poset s;
    s.n = static_cast<int>(keep.size());
    const auto n = static_cast<std::size_t>(s.n);
    s.up.assign(n, bitset(n));
    s.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.labels[i] = p.labels[static_cast<std::size_t>(keep[i])];
        for (std::size_t j = 0; j < n; ++j)
            if (p.is_leq(keep[i], keep[j])) s.up[i].set(j);
    }
    finish_poset(s);
    return s;
}

finite_poset interval(const finite_poset& p, int a, int b) {
    if (!p.is_leq(a, b)) throw std::invalid_argument("interval: endpoints are not comparable");
    std::vector<int> keep;
    bitset between = p.up[static_cast<std::size_t>(a)] & p.down[static_cast<std::size_t>(b)];
    for (std::size_t x = between.find_first(); x != bitset::npos; x = between.find_next(x))
        keep.push_back(static_cast<int>(x));
    return subposet(p, keep);
}

bool is_pure(const finite_poset& p) {
    if (p.n == 0) return true;
    const std::vector<int> up_from_min = p.rank;
    const std::vector<int> down_from_max = longest_up_ranks(dual(p));
    const int total = up_from_min[0] + down_from_max[0];
    for (std::size_t i = 1; i < static_cast<std::size_t>(p.n); ++i)
        if (up_from_min[i] + down_from_max[i] != total) return false;
    return true;
}

bool is_totally_semimodular(const finite_poset& p) {
    for (int z = 0; z < p.n; ++z) {
        const auto& ups = p.upper_covers[static_cast<std::size_t>(z)];
        for (std::size_t i = 0; i < ups.size(); ++i)
            for (std::size_t j = i + 1; j < ups.size(); ++j) {
                const auto x = static_cast<std::size_t>(ups[i]);
                const auto y = static_cast<std::size_t>(ups[j]);
                const bitset common_covers = p.upper_cover_set[x] & p.upper_cover_set[y];
                bitset bounds = p.up[x] & p.up[y];
                for (std::size_t b = bounds.find_first(); b != bitset::npos; b = bounds.find_next(b)) {
                    bitset t = common_covers & p.down[b];
                    if (t.none()) return false;
                }
            }
    }
    return true;
}

namespace {

// Cheap per-element invariant used to prune the isomorphism search.
std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>>
signatures(const finite_poset& p) {
    std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>> sig;
    sig.reserve(static_cast<std::size_t>(p.n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.n); ++i)
        sig.emplace_back(p.rank[i], p.upper_covers[i].size(), p.lower_covers[i].size(), p.up[i].count(),
                         p.down[i].count());
    return sig;
}

} // namespace

bool isomorphic(const finite_poset& a, const finite_poset& b) {
    if (a.n != b.n) return false;
    auto sa = signatures(a);
    auto sb = signatures(b);
    {
        auto ca = sa;
        auto cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    std::vector<int> map_ab(static_cast<std::size_t>(a.n), -1);
    std::vector<char> used_b(static_cast<std::size_t>(b.n), 0);
    const auto compatible = [&](int x, int y) {
        for (int x2 = 0; x2 < a.n; ++x2) {
            const int y2 = map_ab[static_cast<std::size_t>(x2)];
            if (y2 < 0) continue;
            if (a.is_leq(x, x2) != b.is_leq(y, y2)) return false;
            if (a.is_leq(x2, x) != b.is_leq(y2, y)) return false;
        }
        return true;
    };
    std::function<bool(int)> go = [&](int x) -> bool {
        if (x == a.n) return true;
        for (int y = 0; y < b.n; ++y) {
            if (used_b[static_cast<std::size_t>(y)]) continue;
            if (sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(y)]) continue;
            if (!compatible(x, y)) continue;
            map_ab[static_cast<std::size_t>(x)] = y;
            used_b[static_cast<std::size_t>(y)] = 1;
            if (go(x + 1)) return true;
            map_ab[static_cast<std::size_t>(x)] = -1;
            used_b[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    };
    return go(0);
}

std::string to_dot(const finite_poset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < p.n; ++i)
        os << "  n" << i << " [label=\"" << p.labels[static_cast<std::size_t>(i)] << "\"];\n";
    for (int a = 0; a < p.n; ++a)
        for (int b : p.upper_covers[static_cast<std::size_t>(a)]) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------

std::string variant_name(poset_variant v) {
    switch (v) {
        case poset_variant::unbounded: return "unbounded";
        case poset_variant::bounded: return "bounded";
        case poset_variant::pointed_interval: return "pointed";
        case poset_variant::unpointed_interval: return "unpointed";
    }
    throw std::logic_error("variant_name: unknown variant");
}

poset_variant variant_from_name(const std::string& name) {
    if (name == "unbounded") return poset_variant::unbounded;
    if (name == "bounded") return poset_variant::bounded;
    if (name == "pointed") return poset_variant::pointed_interval;
    if (name == "unpointed") return poset_variant::unpointed_interval;
    throw std::invalid_argument("unknown poset variant: " + name);
}

int spp_poset::index_of(const semi_pointed_partition& sp) const {
    const auto end = elements.begin() + (hat0 >= 0 ? hat0 : static_cast<int>(elements.size()));
    const auto it = std::lower_bound(elements.begin(), end, sp);
    if (it != end && *it == sp) return static_cast<int>(it - elements.begin());
    return -1;
}

spp_poset build_poset(const ground_set& gs, poset_variant var) {
    if (gs.size() == 0) throw std::invalid_argument("build_poset: empty ground set");
    if (var == poset_variant::pointed_interval && gs.pointable < 1)
        throw std::invalid_argument("build_poset: pointed interval requires a pointable element");
    if (var == poset_variant::unpointed_interval && gs.nonpointable < 1)
        throw std::invalid_argument("build_poset: unpointed interval requires a non-pointable element");

    spp_poset sp;
    sp.gs = gs;
    sp.var = var;

    std::vector<semi_pointed_partition> all = enumerate_spp(gs);
    switch (var) {
        case poset_variant::unbounded:
        case poset_variant::bounded:
            sp.elements = std::move(all);
            break;
        case poset_variant::pointed_interval: {
            const semi_pointed_partition bottom = one_block(gs, 1);
            for (auto& x : all)
                if (leq(bottom, x)) sp.elements.push_back(std::move(x));
            break;
        }
        case poset_variant::unpointed_interval: {
            const semi_pointed_partition bottom = one_block(gs, 0);
            for (auto& x : all)
                if (leq(bottom, x)) sp.elements.push_back(std::move(x));
            break;
        }
    }

    const int m = static_cast<int>(sp.elements.size());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m) + 1);
    for (const auto& e : sp.elements) labels.push_back(e.to_string());

    if (var == poset_variant::bounded) {
        sp.hat0 = m;
        sp.elements.push_back({}); // marker payload for the adjoined bottom
        labels.push_back("0");
        sp.poset = make_poset(m + 1,
                              [&](int a, int b) {
                                  if (a == m) return true;
                                  if (b == m) return a == m;
                                  return leq(sp.elements[static_cast<std::size_t>(a)],
                                             sp.elements[static_cast<std::size_t>(b)]);
                              },
                              std::move(labels));
    } else {
        sp.poset = make_poset(m,
                              [&](int a, int b) {
                                  return leq(sp.elements[static_cast<std::size_t>(a)],
                                             sp.elements[static_cast<std::size_t>(b)]);
                              },
                              std::move(labels));
    }
    return sp;
}

interval_factorization_result interval_factorization(const spp_poset& sp, int x) {
    if (sp.var != poset_variant::pointed_interval && sp.var != poset_variant::unpointed_interval)
        throw std::invalid_argument("interval_factorization: requires an interval variant");
    const int o = sp.var == poset_variant::pointed_interval ? 1 : 0;
    const auto& e = sp.elements.at(static_cast<std::size_t>(x));
    interval_factorization_result r;
    for (const auto& b : e.parts) {
        int pointable_in_part = 0;
        for (int el : b.elements)
            if (el <= sp.gs.pointable) ++pointable_in_part;
        r.lower.push_back({static_cast<int>(b.elements.size()), pointable_in_part, b.pointed_at != 0 ? 1 : 0});
    }
    r.upper = {e.part_count(), e.pointed_count(), o};
    return r;
}

std::vector<int> induced_element_map(const spp_poset& sp, const std::vector<int>& image) {
    std::vector<int> g(sp.elements.size());
    for (std::size_t i = 0; i < sp.elements.size(); ++i) {
        if (static_cast<int>(i) == sp.hat0) {
            g[i] = static_cast<int>(i);
            continue;
        }
        const int j = sp.index_of(relabel(sp.elements[i], image));
        if (j < 0) throw std::invalid_argument("induced_element_map: relabelling leaves the poset");
        g[i] = j;
    }
    return g;
}

bool is_automorphism(const finite_poset& p, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != p.n) return false;
    std::vector<char> seen(g.size(), 0);
    for (int y : g) {
        if (y < 0 || y >= p.n || seen[static_cast<std::size_t>(y)]) return false;
        seen[static_cast<std::size_t>(y)] = 1;
    }
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
            if (p.is_leq(a, b) != p.is_leq(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

nlohmann::json to_json(const spp_poset& sp) {
    nlohmann::json elems = nlohmann::json::array();
    for (std::size_t i = 0; i < sp.elements.size(); ++i) {
        if (static_cast<int>(i) == sp.hat0)
            elems.push_back("bottom");
        else
            elems.push_back(to_json(sp.elements[i]));
    }
    nlohmann::json covers = nlohmann::json::array();
    for (int a = 0; a < sp.poset.n; ++a)
        for (int b : sp.poset.upper_covers[static_cast<std::size_t>(a)])
            covers.push_back(nlohmann::json::array({a, b}));
    return {{"variant", variant_name(sp.var)},
            {"p", sp.gs.pointable},
            {"l", sp.gs.nonpointable},
            {"size", sp.poset.n},
            {"elements", elems},
            {"cover_edges", covers}};
}

} // namespace spp
