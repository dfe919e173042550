#pragma once

#include "spp/polynomial.hpp"
#include "spp/poset.hpp"
#include "spp/rational.hpp"

#include <map>
#include <vector>

namespace spp {

// Moebius function of the closed interval [a, b] (requires a <= b).
integer mobius(const finite_poset& p, int a, int b);
// mu(x, top) for every x (requires a top element).
std::vector<integer> mobius_to_top(const finite_poset& p);
// mu(bottom, top) (requires both extremes).
integer mobius_number(const finite_poset& p);

// Whether the poset has both extremes, exactly one, or none.
enum class extremum_case { both, one, none };
extremum_case classify_extrema(const finite_poset& p);

// The poset with its bottom and top (when present) removed.
finite_poset proper_part(const finite_poset& p);

// s[j] = number of strict chains with exactly j elements, j = 0..longest
// (s[0] = 1 counts the empty chain).
std::vector<integer> strict_chain_counts(const finite_poset& p);

// Multichain-counting polynomial: Z(k) = #{a_1 <= ... <= a_k} for k >= 1,
// extended polynomially.  Computed from the strict-chain counts of the proper
// part through the case-dependent relation (both extremes, one, none); a
// one-element poset gives the constant polynomial 1.
polynomial zeta_polynomial(const finite_poset& p);

// The same polynomial computed by the case-free identity
// Z(k) = sum_j s_j(P) * C(k-1, j-1) over the whole poset.
polynomial multichain_polynomial(const finite_poset& p);

// Multichain-counting polynomial of the subposet fixed pointwise by the
// automorphism g (the identity recovers multichain_polynomial).
polynomial fixed_multichain_polynomial(const finite_poset& p, const std::vector<int>& g);

// Alternating sum of reduced homology dimensions of the proper part, read off
// the zeta polynomial: Z(-2) with both extremes, -Z(-1) with one, Z(0)-1 with
// none.  The overload with g gives the alternating character value at g.
integer mu_chi(const finite_poset& p);
integer mu_chi(const finite_poset& p, const std::vector<int>& g);

// Dimension of the order complex of the proper part (longest proper chain
// minus one; -1 when the proper part is empty).
int proper_complex_dim(const finite_poset& p);

// Brute-force k-multichain count, via dynamic programming over the order.
integer multichain_count(const finite_poset& p, int k);
// Same, restricted to multichains fixed pointwise by g.
integer fixed_multichain_count(const finite_poset& p, const std::vector<int>& g, int k);

// Cross-checks the closed chain relations against brute-force counts.
struct chain_relation_report {
    bool zeta_matches_counts = false;   // Z(k) == DP count for k = 1..kmax
    bool case_free_agrees = false;      // case relation == case-free identity
    bool mu_matches_mobius = true;      // Z(-2) == mu(bottom, top) when bounded
    bool ok() const { return zeta_matches_counts && case_free_agrees && mu_matches_mobius; }
};
chain_relation_report verify_chain_relations(const finite_poset& p, int kmax);

// Faces of the order complex of the given poset, grouped by dimension:
// faces[d] lists the chains with d+1 elements (as increasing element chains).
std::vector<std::vector<std::vector<int>>> order_complex_faces(const finite_poset& p);

// Reduced rational homology of the order complex of the proper part, as
// dimension -> Betti number; an empty proper part yields {{-1, 1}}.
std::map<int, integer> homology_dims(const finite_poset& p);

// All Betti numbers below the top dimension vanish.
bool is_homology_concentrated_on_top(const std::map<int, integer>& betti);

// Trace of the automorphism g of p on the top homology group of the proper
// part, from an explicit kernel basis of the top boundary map.
rational top_homology_trace(const finite_poset& p, const std::vector<int>& g);

} // namespace spp
