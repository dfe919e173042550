#include "spp/hopf.hpp"

#include "spp/invariants.hpp"
#include "spp/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace spp {

namespace {

std::string rational_to_string(const rational& c) {
    const integer num = boost::multiprecision::numerator(c);
    const integer den = boost::multiprecision::denominator(c);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

} // namespace

std::string hopf_generator::to_string() const {
    return "a" + std::to_string(o) + "_{" + std::to_string(k) + "," + std::to_string(l) + "}";
}

std::vector<hopf_generator> all_generators(int max_grade) {
    std::vector<hopf_generator> out;
    for (int d = 1; d <= max_grade; ++d)
        for (int k = 0; k <= d + 1; ++k)
            for (int o = 0; o <= 1; ++o) {
                const hopf_generator g{k, d + 1 - k, o};
                if (g.valid()) out.push_back(g);
            }
    std::sort(out.begin(), out.end());
    return out;
}

int monomial_grade(const hopf_monomial& m) {
    int grade = 0;
    for (const auto& [g, mult] : m) grade += mult * g.grade();
    return grade;
}

hopf_monomial merge_monomials(const hopf_monomial& a, const hopf_monomial& b) {
    hopf_monomial m = a;
    for (const auto& [g, mult] : b) m[g] += mult;
    return m;
}

std::string monomial_to_string(const hopf_monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [g, mult] : m) {
        if (!s.empty()) s += "*";
        s += g.to_string();
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

hopf_element::hopf_element(const hopf_generator& g) {
    if (!g.valid()) throw std::invalid_argument("hopf_element: invalid interval class");
    if (g.grade() == 0)
        terms_[hopf_monomial{}] = 1;
    else
        terms_[hopf_monomial{{g, 1}}] = 1;
}

rational hopf_element::coeff(const hopf_monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? rational(0) : it->second;
}

void hopf_element::add(const hopf_monomial& m, const rational& c) {
    if (c == 0) return;
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

hopf_element& hopf_element::operator+=(const hopf_element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

hopf_element& hopf_element::operator-=(const hopf_element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

hopf_element hopf_element::operator-() const {
    hopf_element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

std::string hopf_element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (m.empty()) {
            s += rational_to_string(c);
            continue;
        }
        if (c != 1) s += rational_to_string(c) + "*";
        s += monomial_to_string(m);
    }
    return s;
}

hopf_element operator+(hopf_element a, const hopf_element& b) { return a += b; }
hopf_element operator-(hopf_element a, const hopf_element& b) { return a -= b; }

hopf_element operator*(const hopf_element& a, const hopf_element& b) {
    hopf_element r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add(merge_monomials(ma, mb), ca * cb);
    return r;
}

hopf_element operator*(const rational& c, const hopf_element& h) {
    hopf_element r;
    for (const auto& [m, v] : h.terms()) r.add(m, c * v);
    return r;
}

rational counit(const hopf_element& h) { return h.coeff(hopf_monomial{}); }

void tensor_element::add(const hopf_monomial& left, const hopf_monomial& right,
                         const rational& c) {
    if (c == 0) return;
    const auto key = std::make_pair(left, right);
    const auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

tensor_element& tensor_element::operator+=(const tensor_element& o) {
    for (const auto& [lr, c] : o.terms_) add(lr.first, lr.second, c);
    return *this;
}

tensor_element& tensor_element::operator-=(const tensor_element& o) {
    for (const auto& [lr, c] : o.terms_) add(lr.first, lr.second, -c);
    return *this;
}

std::string tensor_element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lr, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += rational_to_string(c) + "*";
        s += monomial_to_string(lr.first) + " (x) " + monomial_to_string(lr.second);
    }
    return s;
}

tensor_element tensor(const hopf_element& a, const hopf_element& b) {
    tensor_element r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add(ma, mb, ca * cb);
    return r;
}

tensor_element operator*(const tensor_element& a, const tensor_element& b) {
    tensor_element r;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            r.add(merge_monomials(la.first, lb.first), merge_monomials(la.second, lb.second),
                  ca * cb);
    return r;
}

hopf_element contract_left(const tensor_element& t) {
    hopf_element r;
    for (const auto& [lr, c] : t.terms())
        if (lr.first.empty()) r.add(lr.second, c);
    return r;
}

hopf_element contract_right(const tensor_element& t) {
    hopf_element r;
    for (const auto& [lr, c] : t.terms())
        if (lr.second.empty()) r.add(lr.first, c);
    return r;
}

tensor_element coproduct(const hopf_generator& g) {
    if (!g.valid()) throw std::invalid_argument("coproduct: invalid interval class");
    tensor_element result;
    if (g.grade() == 0) {
        result.add({}, {}, 1);
        return result;
    }
    const int k = g.k, l = g.l, o = g.o;
    // Lower factors: positions 1..p pointed (k_i >= 1), p+1..p+q unpointed
    // (l_i >= 1).  Upper factor: the class with p pointable and q free
    // elements and the original pointing kind.
    for (int p = o; p <= k; ++p)
        for (int q = (o == 0 ? 1 : 0); q <= l; ++q) {
            const hopf_generator upper{p, q, o};
            if (!upper.valid()) continue;
            hopf_monomial right;
            if (upper.grade() > 0) right[upper] = 1;

            hopf_monomial mono;
            integer denom = 1;
            const std::function<void(int, int, int)> emit = [&](int i, int k_left, int l_left) {
                if (i == p + q) {
                    if (k_left != 0 || l_left != 0) return;
                    result.add(mono, right,
                               rational(factorial(l) * factorial(k - o),
                                        denom * factorial(q) * factorial(p - o)));
                    return;
                }
                const bool pointed = i < p;
                // Leave enough pointable/free elements for the later factors.
                const int k_max = k_left - (pointed ? p - i - 1 : 0);
                const int l_max = l_left - (pointed ? q : p + q - i - 1);
                for (int ki = pointed ? 1 : 0; ki <= k_max; ++ki)
                    for (int li = pointed ? 0 : 1; li <= l_max; ++li) {
                        const hopf_generator f{ki, li, pointed ? 1 : 0};
                        const integer d = factorial(li) * factorial(ki - (pointed ? 1 : 0));
                        denom *= d;
                        if (f.grade() > 0) mono[f] += 1;
                        emit(i + 1, k_left - ki, l_left - li);
                        if (f.grade() > 0) {
                            const auto it = mono.find(f);
                            if (--it->second == 0) mono.erase(it);
                        }
                        denom /= d;
                    }
            };
            emit(0, k, l);
        }
    return result;
}

namespace {

hopf_element monomial_element(const hopf_monomial& m) {
    hopf_element h;
    h.add(m, 1);
    return h;
}

} // namespace

tensor_element coproduct(const hopf_element& h) {
    tensor_element result;
    for (const auto& [m, c] : h.terms()) {
        tensor_element part;
        part.add({}, {}, 1);
        for (const auto& [g, mult] : m) {
            const tensor_element dg = coproduct(g);
            for (int i = 0; i < mult; ++i) part = part * dg;
        }
        for (const auto& [lr, v] : part.terms()) result.add(lr.first, lr.second, c * v);
    }
    return result;
}

tensor_element brute_coproduct(const hopf_generator& g) {
    if (!g.valid()) throw std::invalid_argument("brute_coproduct: invalid interval class");
    tensor_element result;
    if (g.grade() == 0) {
        result.add({}, {}, 1);
        return result;
    }
    const spp_poset sp =
        build_poset({g.k, g.l}, g.o == 1 ? poset_variant::pointed_interval
                                         : poset_variant::unpointed_interval);
    for (int x = 0; x < sp.poset.n; ++x) {
        const interval_factorization_result fact = interval_factorization(sp, x);
        hopf_monomial left;
        for (const interval_class& c : fact.lower) {
            const hopf_generator part{c.p, c.n - c.p, c.o};
            if (part.grade() > 0) left[part] += 1;
        }
        hopf_monomial right;
        const hopf_generator up{fact.upper.p, fact.upper.n - fact.upper.p, fact.upper.o};
        if (up.grade() > 0) right[up] = 1;
        result.add(left, right, 1);
    }
    return result;
}

namespace {

using triple_key = std::tuple<hopf_monomial, hopf_monomial, hopf_monomial>;
using triple_map = std::map<triple_key, rational>;

void add_triple(triple_map& m, triple_key key, const rational& c) {
    if (c == 0) return;
    const auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

} // namespace

bool coassociativity_check(int max_grade) {
    for (const hopf_generator& g : all_generators(max_grade)) {
        const tensor_element d = coproduct(g);
        const hopf_element elem(g);
        if (contract_left(d) != elem || contract_right(d) != elem) return false;
        triple_map lhs, rhs;
        for (const auto& [lr, c] : d.terms()) {
            const tensor_element dl = coproduct(monomial_element(lr.first));
            for (const auto& [ab, v] : dl.terms())
                add_triple(lhs, {ab.first, ab.second, lr.second}, c * v);
            const tensor_element dr = coproduct(monomial_element(lr.second));
            for (const auto& [bc, v] : dr.terms())
                add_triple(rhs, {lr.first, bc.first, bc.second}, c * v);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

nlohmann::json to_json(const hopf_element& h) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : h.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [g, mult] : m)
            mono.push_back({{"k", g.k}, {"l", g.l}, {"o", g.o}, {"mult", mult}});
        terms.push_back({{"monomial", std::move(mono)},
                         {"num", boost::multiprecision::numerator(c).str()},
                         {"den", boost::multiprecision::denominator(c).str()}});
    }
    return terms;
}

nlohmann::json to_json(const tensor_element& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lr, c] : t.terms()) {
        nlohmann::json left = nlohmann::json::array();
        for (const auto& [g, mult] : lr.first)
            left.push_back({{"k", g.k}, {"l", g.l}, {"o", g.o}, {"mult", mult}});
        nlohmann::json right = nlohmann::json::array();
        for (const auto& [g, mult] : lr.second)
            right.push_back({{"k", g.k}, {"l", g.l}, {"o", g.o}, {"mult", mult}});
        terms.push_back({{"left", std::move(left)},
                         {"right", std::move(right)},
                         {"num", boost::multiprecision::numerator(c).str()},
                         {"den", boost::multiprecision::denominator(c).str()}});
    }
    return terms;
}

series_pair identity_pair(int order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    series_pair s{hopf_series(order), hopf_series(order)};
    s.f.set_coeff(1, 0, hopf_element::one());
    s.g.set_coeff(0, 1, hopf_element::one());
    return s;
}

series_pair generator_pair(int order) {
    series_pair s = identity_pair(order);
    for (int k = 0; k <= order; ++k)
        for (int l = 0; k + l <= order; ++l) {
            if (k + l < 2) continue;
            if (l >= 1) s.f.set_coeff(l, k, hopf_element(hopf_generator{k, l, 0}));
            if (k >= 1)
                s.g.set_coeff(l, k, rational(k) * hopf_element(hopf_generator{k, l, 1}));
        }
    return s;
}

series_pair compose_pairs(const series_pair& outer, const series_pair& inner) {
    return {substitute_bivariate(outer.f, inner.f, inner.g),
            substitute_bivariate(outer.g, inner.f, inner.g)};
}

fixed_point_series mobius_series(int order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    const egf x = egf::var_x(order), y = egf::var_y(order), one = egf::one(order);
    egf a(order), b(order);
    // Each joint pass fixes one more total degree: the right sides reach the
    // unknowns only through the degree-raising prefactors y and x.
    for (int pass = 0; pass <= order; ++pass) {
        a = y * exp(-(a + b));
        b = log1p(x * exp(-a));
    }
    if (!((exp(b) - one) * exp(a) - x).is_zero() || !(a * exp(a + b) - y).is_zero())
        throw std::logic_error("mobius series iteration failed to converge");
    return {a, b};
}

std::string charpoly_variant_name(charpoly_variant v) {
    switch (v) {
    case charpoly_variant::pointed: return "pointed";
    case charpoly_variant::unpointed: return "unpointed";
    case charpoly_variant::unbounded: return "unbounded";
    case charpoly_variant::bounded: return "bounded";
    }
    throw std::logic_error("unknown variant");
}

charpoly_variant charpoly_variant_from_name(const std::string& name) {
    if (name == "pointed") return charpoly_variant::pointed;
    if (name == "unpointed") return charpoly_variant::unpointed;
    if (name == "unbounded") return charpoly_variant::unbounded;
    if (name == "bounded") return charpoly_variant::bounded;
    throw std::invalid_argument("unknown characteristic polynomial variant: " + name);
}

namespace {

polynomial falling_product(int from, int to) {
    const polynomial t = polynomial::variable();
    polynomial r(1);
    for (int i = from; i <= to; ++i) r *= t - polynomial(i);
    return r;
}

} // namespace

polynomial charpoly_closed(int p, int l, charpoly_variant which) {
    if (p < 0 || l < 0 || p + l < 1) throw std::invalid_argument("invalid ground set sizes");
    const polynomial t = polynomial::variable();
    switch (which) {
    case charpoly_variant::pointed:
        if (p < 1)
            throw std::invalid_argument("pointed interval requires a pointable element");
        // p == 1: the final factor of the product cancels the negative power.
        if (p == 1)
            return l == 0 ? polynomial(1) : (t - polynomial(1)) * falling_product(2, l);
        return (t - polynomial(1)) * (t - polynomial(p + l)).pow(static_cast<unsigned>(p - 2)) *
               falling_product(p + 1, p + l);
    case charpoly_variant::unbounded:
        // p == 0: classical partition lattice, again after one cancellation.
        if (p == 0) return falling_product(1, l - 1);
        return (t - polynomial(p + l)).pow(static_cast<unsigned>(p - 1)) *
               falling_product(p + 1, p + l);
    case charpoly_variant::bounded: {
        const polynomial chi = charpoly_closed(p, l, charpoly_variant::unbounded);
        return t * chi - polynomial(chi.evaluate(1));
    }
    case charpoly_variant::unpointed:
        throw std::invalid_argument("no product formula for the unpointed interval");
    }
    throw std::logic_error("unknown variant");
}

polynomial charpoly_brute(const ground_set& gs, charpoly_variant which) {
    poset_variant pv = poset_variant::unbounded;
    switch (which) {
    case charpoly_variant::pointed: pv = poset_variant::pointed_interval; break;
    case charpoly_variant::unpointed: pv = poset_variant::unpointed_interval; break;
    case charpoly_variant::unbounded: pv = poset_variant::unbounded; break;
    case charpoly_variant::bounded: pv = poset_variant::bounded; break;
    }
    const spp_poset sp = build_poset(gs, pv);
    const std::vector<integer> mu = mobius_to_top(sp.poset);
    std::vector<rational> coeffs(static_cast<std::size_t>(gs.size()) + 1, rational(0));
    for (int i = 0; i < sp.poset.n; ++i) {
        if (i == sp.hat0) {
            // Moebius number of the whole bounded poset, landing at t^0.
            coeffs[0] += rational(mu[static_cast<std::size_t>(i)]);
            continue;
        }
        const int parts = sp.elements[static_cast<std::size_t>(i)].part_count();
        const int e = which == charpoly_variant::bounded ? parts : parts - 1;
        coeffs[static_cast<std::size_t>(e)] += rational(mu[static_cast<std::size_t>(i)]);
    }
    return polynomial(std::move(coeffs));
}

charpoly_series_report charpoly_series_check(int order, int max_total) {
    if (max_total < 1 || order < max_total)
        throw std::invalid_argument("series order below requested range");
    charpoly_series_report report;
    const fixed_point_series fp = solve_fixed_point(order);
    // Chain-family convention in this function: the first series index counts
    // pointable elements, the second free ones.
    const egf_poly a = to_polynomial_series(fp.a);
    const egf_poly b = to_polynomial_series(fp.b);
    const polynomial t = polynomial::variable();
    const egf_poly one = egf_poly::one(order);
    const auto divide_t = [](const egf_poly& f) {
        egf_poly r(f.order());
        for (int i = 0; i <= f.order(); ++i)
            for (int j = 0; i + j <= f.order(); ++j)
                r.set_coeff(i, j, f.coeff(i, j).divide_by_variable());
        return r;
    };
    const egf_poly e_tab = exp(t * (a + b));
    const egf_poly s = divide_t(e_tab - one);
    const egf_poly chi_pointed = a * e_tab;
    const egf_poly chi_unpointed = divide_t((exp(t * b) - one) * exp(t * a));

    const auto check = [&report](const polynomial& series_value, const polynomial& poset_value,
                                 const char* label, int p, int l) {
        ++report.checked;
        if (series_value == poset_value) return;
        report.mismatches.push_back(std::string(label) + " (" + std::to_string(p) + "," +
                                    std::to_string(l) + "): series " + series_value.to_string() +
                                    " vs poset " + poset_value.to_string());
    };
    for (int p = 0; p <= max_total; ++p)
        for (int l = 0; p + l <= max_total; ++l) {
            if (p + l < 1) continue;
            const ground_set gs{p, l};
            const polynomial sc = s.coeff(p, l);
            check(sc, charpoly_brute(gs, charpoly_variant::unbounded), "unbounded", p, l);
            check(t * sc - polynomial(sc.evaluate(1)),
                  charpoly_brute(gs, charpoly_variant::bounded), "bounded", p, l);
            if (p >= 1)
                check(chi_pointed.coeff(p, l),
                      rational(p) * charpoly_brute(gs, charpoly_variant::pointed), "pointed", p,
                      l);
            if (l >= 1)
                check(chi_unpointed.coeff(p, l),
                      charpoly_brute(gs, charpoly_variant::unpointed), "unpointed", p, l);
        }
    return report;
}

} // namespace spp
