#include "spp/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spp {

integer mobius(const finite_poset& p, int a, int b) {
    if (!p.is_leq(a, b)) throw std::invalid_argument("mobius: a is not below b");
    // mu(a, x) for all x in [a, b], by increasing interval.
    const bitset between = p.up[static_cast<std::size_t>(a)] & p.down[static_cast<std::size_t>(b)];
    std::vector<std::size_t> elems;
    for (std::size_t x = between.find_first(); x != bitset::npos; x = between.find_next(x))
        elems.push_back(x);
    // Order by the number of predecessors inside the interval so that every
    // mu(a, y) with y < x is ready when x is processed.
    std::sort(elems.begin(), elems.end(), [&](std::size_t u, std::size_t v) {
        return (p.down[u] & between).count() < (p.down[v] & between).count();
    });
    std::map<std::size_t, integer> mu;
    for (std::size_t x : elems) {
        if (x == static_cast<std::size_t>(a)) {
            mu[x] = 1;
            continue;
        }
        integer s = 0;
        const bitset lower = p.down[x] & between;
        for (std::size_t y = lower.find_first(); y != bitset::npos; y = lower.find_next(y))
            if (y != x) s += mu[y];
        mu[x] = -s;
    }
    return mu[static_cast<std::size_t>(b)];
}

std::vector<integer> mobius_to_top(const finite_poset& p) {
    if (p.top < 0) throw std::invalid_argument("mobius_to_top: no top element");
    // mu(x, top) by downward recursion: mu(x, top) = -sum_{x < y} mu(y, top).
    std::vector<std::size_t> order;
    for (int i = 0; i < p.n; ++i) order.push_back(static_cast<std::size_t>(i));
    std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
        return p.up[u].count() < p.up[v].count();
    });
    std::vector<integer> mu(static_cast<std::size_t>(p.n), 0);
    for (std::size_t x : order) {
        if (x == static_cast<std::size_t>(p.top)) {
            mu[x] = 1;
            continue;
        }
        if (!p.is_leq(static_cast<int>(x), p.top)) continue;
        integer s = 0;
        for (std::size_t y = p.up[x].find_first(); y != bitset::npos; y = p.up[x].find_next(y))
            if (y != x) s += mu[y];
        mu[x] = -s;
    }
    return mu;
}

integer mobius_number(const finite_poset& p) {
    if (p.bottom < 0 || p.top < 0) throw std::invalid_argument("mobius_number: poset is not bounded");
    return mobius(p, p.bottom, p.top);
}

extremum_case classify_extrema(const finite_poset& p) {
    const int have = (p.bottom >= 0 ? 1 : 0) + (p.top >= 0 ? 1 : 0);
    if (p.n == 1) return extremum_case::both; // bottom == top
    return have == 2 ? extremum_case::both : have == 1 ? extremum_case::one : extremum_case::none;
}

finite_poset proper_part(const finite_poset& p) {
    std::vector<int> keep;
    for (int i = 0; i < p.n; ++i)
        if (i != p.bottom && i != p.top) keep.push_back(i);
    return subposet(p, keep);
}

std::vector<integer> strict_chain_counts(const finite_poset& p) {
    // counts[v] over chains ending at v, by chain length.
    std::vector<integer> s{1}; // the empty chain
    std::vector<integer> ending(static_cast<std::size_t>(p.n), 1);
    while (true) {
        integer level = 0;
        for (const auto& c : ending) level += c;
        if (level == 0) break;
        s.push_back(level);
        std::vector<integer> next(static_cast<std::size_t>(p.n), 0);
        for (int v = 0; v < p.n; ++v) {
            if (ending[static_cast<std::size_t>(v)] == 0) continue;
            const auto& up = p.up[static_cast<std::size_t>(v)];
            for (std::size_t w = up.find_first(); w != bitset::npos; w = up.find_next(w))
                if (static_cast<int>(w) != v) next[w] += ending[static_cast<std::size_t>(v)];
        }
        ending.swap(next);
    }
    return s;
}

namespace {

polynomial binom_poly_shift(int shift, unsigned j) {
    // C(k + shift, j) as a polynomial in k.
    polynomial arg = polynomial::variable() + polynomial(rational(shift));
    return binom(arg, j);
}

} // namespace

polynomial zeta_polynomial(const finite_poset& p) {
    if (p.n == 0) throw std::invalid_argument("zeta_polynomial: empty poset");
    if (p.n == 1) return polynomial(rational(1));
    const auto s = strict_chain_counts(proper_part(p));
    polynomial z;
    switch (classify_extrema(p)) {
    case extremum_case::both:
        // Z(k) = sum_j s_j * C(k+1, j+1)
        for (std::size_t j = 0; j < s.size(); ++j)
            z += rational(s[j]) * binom_poly_shift(1, static_cast<unsigned>(j) + 1);
        break;
    case extremum_case::one:
        // Z(k) = sum_j s_j * C(k, j)
        for (std::size_t j = 0; j < s.size(); ++j)
            z += rational(s[j]) * binom_poly_shift(0, static_cast<unsigned>(j));
        break;
    case extremum_case::none:
        // Z(k) = sum_{j>=1} s_j * C(k-1, j-1)
        for (std::size_t j = 1; j < s.size(); ++j)
            z += rational(s[j]) * binom_poly_shift(-1, static_cast<unsigned>(j) - 1);
        break;
    }
    return z;
}

polynomial multichain_polynomial(const finite_poset& p) {
    const auto s = strict_chain_counts(p);
    polynomial z;
    for (std::size_t j = 1; j < s.size(); ++j)
        z += rational(s[j]) * binom_poly_shift(-1, static_cast<unsigned>(j) - 1);
    return z;
}

namespace {

finite_poset fixed_subposet(const finite_poset& p, const std::vector<int>& g) {
    std::vector<int> keep;
    for (int i = 0; i < p.n; ++i)
        if (g[static_cast<std::size_t>(i)] == i) keep.push_back(i);
    return subposet(p, keep);
}

} // namespace

polynomial fixed_multichain_polynomial(const finite_poset& p, const std::vector<int>& g) {
    return multichain_polynomial(fixed_subposet(p, g));
}

namespace {

integer as_integer(const rational& v) {
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("expected an integer value");
    return boost::multiprecision::numerator(v);
}

integer mu_chi_from(const finite_poset& p, const polynomial& z) {
    switch (classify_extrema(p)) {
    case extremum_case::both:
        return as_integer(z.evaluate(rational(-2)));
    case extremum_case::one:
        return as_integer(-z.evaluate(rational(-1)));
    default:
        return as_integer(z.evaluate(rational(0)) - 1);
    }
}

} // namespace

integer mu_chi(const finite_poset& p) { return mu_chi_from(p, zeta_polynomial(p)); }

integer mu_chi(const finite_poset& p, const std::vector<int>& g) {
    if (!is_automorphism(p, g)) throw std::invalid_argument("mu_chi: g is not an automorphism");
    return mu_chi_from(p, fixed_multichain_polynomial(p, g));
}

int proper_complex_dim(const finite_poset& p) {
    const auto s = strict_chain_counts(proper_part(p));
    return static_cast<int>(s.size()) - 2; // s has entries 0..longest
}

integer multichain_count(const finite_poset& p, int k) {
    if (k < 0) throw std::invalid_argument("multichain_count: negative length");
    if (k == 0) return 1;
    std::vector<integer> f(static_cast<std::size_t>(p.n), 1);
    for (int step = 1; step < k; ++step) {
        std::vector<integer> next(static_cast<std::size_t>(p.n), 0);
        for (int x = 0; x < p.n; ++x) {
            integer s = 0;
            const auto& lower = p.down[static_cast<std::size_t>(x)];
            for (std::size_t y = lower.find_first(); y != bitset::npos; y = lower.find_next(y))
                s += f[y];
            next[static_cast<std::size_t>(x)] = s;
        }
        f.swap(next);
    }
    integer total = 0;
    for (const auto& v : f) total += v;
    return total;
}

integer fixed_multichain_count(const finite_poset& p, const std::vector<int>& g, int k) {
    return multichain_count(fixed_subposet(p, g), k);
}

chain_relation_report verify_chain_relations(const finite_poset& p, int kmax) {
    chain_relation_report r;
    const polynomial z = zeta_polynomial(p);
    r.zeta_matches_counts = true;
    for (int k = 1; k <= kmax; ++k)
        if (z.evaluate(rational(k)) != rational(multichain_count(p, k))) {
            r.zeta_matches_counts = false;
            break;
        }
    r.case_free_agrees = p.n == 1 || z == multichain_polynomial(p);
    if (p.n > 1 && classify_extrema(p) == extremum_case::both)
        r.mu_matches_mobius = rational(mobius_number(p)) == z.evaluate(rational(-2));
    return r;
}

std::vector<std::vector<std::vector<int>>> order_complex_faces(const finite_poset& p) {
    std::vector<std::vector<std::vector<int>>> faces;
    std::vector<std::vector<int>> level;
    for (int v = 0; v < p.n; ++v) level.push_back({v});
    while (!level.empty()) {
        faces.push_back(level);
        std::vector<std::vector<int>> next;
        for (const auto& c : level) {
            const auto& up = p.up[static_cast<std::size_t>(c.back())];
            for (std::size_t w = up.find_first(); w != bitset::npos; w = up.find_next(w))
                if (static_cast<int>(w) != c.back()) {
                    auto nc = c;
                    nc.push_back(static_cast<int>(w));
                    next.push_back(std::move(nc));
                }
        }
        level = std::move(next);
    }
    return faces;
}

namespace {

// Rank of a sparse matrix over the rationals.  Rows are (column, value) lists;
// elimination picks the shortest available row each round to limit fill-in.
int sparse_rank(std::vector<std::map<int, rational>> rows) {
    std::map<int, std::map<int, rational>> pivots; // pivot column -> row
    int rank = 0;
    // Process rows shortest-first (greedy re-sort each round would be costly;
    // a single initial sort works well for boundary matrices).
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& row : rows) {
        // Reduce by existing pivots.
        while (!row.empty()) {
            const int col = row.begin()->first;
            auto it = pivots.find(col);
            if (it == pivots.end()) break;
            const rational factor = row.begin()->second / it->second.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
        if (!row.empty()) {
            pivots.emplace(row.begin()->first, std::move(row));
            ++rank;
        }
    }
    return rank;
}

// Boundary matrix rows for dimension d: one row per d-face, entries indexed by
// (d-1)-face positions with alternating signs.
std::vector<std::map<int, rational>> boundary_rows(const std::vector<std::vector<int>>& faces_d,
                                                   const std::vector<std::vector<int>>& faces_dm1) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < faces_dm1.size(); ++i)
        index[faces_dm1[i]] = static_cast<int>(i);
    std::vector<std::map<int, rational>> rows;
    rows.reserve(faces_d.size());
    for (const auto& c : faces_d) {
        std::map<int, rational> row;
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            auto f = c;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
            row[index.at(f)] += (drop % 2 == 0 ? 1 : -1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::map<int, integer> homology_dims(const finite_poset& p) {
    const finite_poset q = proper_part(p);
    std::map<int, integer> betti;
    if (q.n == 0) {
        betti[-1] = 1; // reduced homology of the empty complex
        return betti;
    }
    const auto faces = order_complex_faces(q);
    const int topdim = static_cast<int>(faces.size()) - 1;
    // rank of the boundary map out of each dimension; d_0 maps onto the empty
    // face, so its rank is 1.
    std::vector<int> rank(static_cast<std::size_t>(topdim) + 2, 0);
    rank[0] = 1;
    for (int d = 1; d <= topdim; ++d)
        rank[static_cast<std::size_t>(d)] = sparse_rank(
            boundary_rows(faces[static_cast<std::size_t>(d)], faces[static_cast<std::size_t>(d) - 1]));
    const integer bm1 = 1 - integer(rank[0]);
    if (bm1 != 0) betti[-1] = bm1;
    for (int m = 0; m <= topdim; ++m) {
        const integer b = integer(faces[static_cast<std::size_t>(m)].size()) - rank[static_cast<std::size_t>(m)] -
                          rank[static_cast<std::size_t>(m) + 1];
        if (b != 0 || m == topdim) betti[m] = b;
    }
    return betti;
}

bool is_homology_concentrated_on_top(const std::map<int, integer>& betti) {
    if (betti.empty()) return true;
    const int top = betti.rbegin()->first;
    for (const auto& [dim, b] : betti)
        if (dim != top && b != 0) return false;
    return true;
}

rational top_homology_trace(const finite_poset& p, const std::vector<int>& g) {
    if (!is_automorphism(p, g)) throw std::invalid_argument("top_homology_trace: not an automorphism");
    const finite_poset q = proper_part(p);
    if (q.n == 0) return 1; // trace on the span of the empty face

    // Map the automorphism of p to the proper part's element indices.
    std::vector<int> orig_of(static_cast<std::size_t>(q.n));
    std::map<int, int> back;
    {
        int j = 0;
        for (int i = 0; i < p.n; ++i)
            if (i != p.bottom && i != p.top) {
                orig_of[static_cast<std::size_t>(j)] = i;
                back[i] = j;
                ++j;
            }
    }
    const auto faces = order_complex_faces(q);
    const int topdim = static_cast<int>(faces.size()) - 1;
    const auto& top_faces = faces[static_cast<std::size_t>(topdim)];

    // Kernel of the boundary map out of the top dimension, as a dense matrix
    // with one column per kernel basis vector.
    std::vector<std::map<int, rational>> rows;
    if (topdim == 0) {
        // d_0 maps every vertex to the empty face.
        for (const auto& c : top_faces) {
            (void)c;
            rows.push_back({{0, rational(1)}});
        }
    } else {
        rows = boundary_rows(top_faces, faces[static_cast<std::size_t>(topdim) - 1]);
    }
    // Transpose into column-major form: columns of the boundary matrix are the
    // top faces; eliminate to find free columns and back-substitute.
    const int ncols = static_cast<int>(top_faces.size());
    // Dense elimination on the transposed system A x = 0 where A has a column
    // per top face: build A as rows over (d-1)-face indices.
    std::map<int, std::map<int, rational>> by_row; // (d-1)-face -> {face col -> coeff}
    for (int c = 0; c < ncols; ++c)
        for (const auto& [r, v] : rows[static_cast<std::size_t>(c)]) by_row[r][c] = v;
    std::vector<std::map<int, rational>> mat;
    mat.reserve(by_row.size());
    for (auto& [r, row] : by_row) mat.push_back(std::move(row));

    // Row-reduce; record pivot columns.
    std::vector<int> pivot_col;
    std::vector<std::map<int, rational>> reduced;
    for (auto& row : mat) {
        while (!row.empty()) {
            const int col = row.begin()->first;
            bool hit = false;
            for (std::size_t i = 0; i < reduced.size(); ++i)
                if (pivot_col[i] == col) {
                    const rational f = row.begin()->second / reduced[i].begin()->second;
                    for (const auto& [c, v] : reduced[i]) {
                        auto jt = row.find(c);
                        if (jt == row.end())
                            row.emplace(c, -f * v);
                        else {
                            jt->second -= f * v;
                            if (jt->second == 0) row.erase(jt);
                        }
                    }
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        if (!row.empty()) {
            pivot_col.push_back(row.begin()->first);
            reduced.push_back(row);
        }
    }
    // Back-substitute so every pivot row has zeros in the other pivot columns.
    for (std::size_t i = reduced.size(); i-- > 0;) {
        for (std::size_t u = 0; u < reduced.size(); ++u) {
            if (u == i) continue;
            auto it = reduced[u].find(pivot_col[i]);
            if (it == reduced[u].end()) continue;
            const rational f = it->second / reduced[i].begin()->second;
            for (const auto& [c, v] : reduced[i]) {
                auto jt = reduced[u].find(c);
                if (jt == reduced[u].end())
                    reduced[u].emplace(c, -f * v);
                else {
                    jt->second -= f * v;
                    if (jt->second == 0) reduced[u].erase(jt);
                }
            }
        }
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
    std::map<int, std::size_t> pivot_row_of;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        is_pivot[static_cast<std::size_t>(pivot_col[i])] = 1;
        pivot_row_of[pivot_col[i]] = i;
    }

    // Kernel basis: one vector per free column f, with x_f = 1 and
    // x_{pivot} = -coef/pivot from the reduced rows.
    std::vector<int> free_cols;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    const std::size_t r = free_cols.size();
    if (r == 0) return 0;
    std::map<int, std::size_t> free_index;
    for (std::size_t i = 0; i < r; ++i) free_index[free_cols[i]] = i;

    auto kernel_vec = [&](std::size_t fi) {
        std::map<int, rational> x;
        const int f = free_cols[fi];
        x[f] = 1;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            auto it = reduced[i].find(f);
            if (it != reduced[i].end()) x[pivot_col[i]] = -it->second / reduced[i].begin()->second;
        }
        return x;
    };

    // Permutation of top faces induced by g.
    std::map<std::vector<int>, int> face_index;
    for (std::size_t i = 0; i < top_faces.size(); ++i) face_index[top_faces[i]] = static_cast<int>(i);
    std::vector<int> perm(top_faces.size());
    for (std::size_t i = 0; i < top_faces.size(); ++i) {
        std::vector<int> image;
        for (int v : top_faces[i])
            image.push_back(back.at(g[static_cast<std::size_t>(orig_of[static_cast<std::size_t>(v)])]));
        std::sort(image.begin(), image.end(), [&](int a, int b) { return q.is_leq(a, b) && a != b; });
        perm[i] = face_index.at(image);
    }

    // trace = sum over kernel basis vectors of the coefficient of vector fi in
    // g . k_fi.  Because the basis is in "free column = unit" form, the
    // coefficient of k_fi in any kernel vector x equals x[free_cols[fi]].
    rational trace = 0;
    for (std::size_t fi = 0; fi < r; ++fi) {
        const auto x = kernel_vec(fi);
        // apply g: (g.x)[perm[c]] += x[c]
        std::map<int, rational> gx;
        for (const auto& [c, v] : x) gx[perm[static_cast<std::size_t>(c)]] += v;
        auto it = gx.find(free_cols[fi]);
        if (it != gx.end()) trace += it->second;
    }
    return trace;
}

} // namespace spp
