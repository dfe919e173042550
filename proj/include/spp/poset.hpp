#pragma once

#include "spp/partition.hpp"

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spp {

using bitset = boost::dynamic_bitset<>;

// An explicit finite poset.  Construction validates the partial-order axioms
// and derives Hasse covers, ranks (longest chain from a minimal element),
// and the bottom/top elements when they exist.
struct finite_poset {
    int n = 0;
    std::vector<bitset> up;   // up[a][b] iff a <= b
    std::vector<bitset> down; // down[b][a] iff a <= b
    std::vector<std::vector<int>> upper_covers;
    std::vector<std::vector<int>> lower_covers;
    std::vector<bitset> upper_cover_set;
    std::vector<int> rank;
    int bottom = -1;
    int top = -1;
    std::vector<std::string> labels;

    int size() const { return n; }
    bool is_leq(int a, int b) const { return up[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int max_rank() const;
};

// Builds a poset from a comparison callback, checking reflexivity,
// antisymmetry and transitivity (throws std::logic_error on violation).
finite_poset make_poset(int n, const std::function<bool(int, int)>& leq_fn,
                        std::vector<std::string> labels = {});

finite_poset dual(const finite_poset& p);
finite_poset direct_product(const finite_poset& a, const finite_poset& b);

// Induced subposet on the given (strictly increasing) element indices.
finite_poset subposet(const finite_poset& p, const std::vector<int>& keep);
// The closed interval [a, b] as an induced subposet.
finite_poset interval(const finite_poset& p, int a, int b);

// All maximal chains have the same cardinality.
bool is_pure(const finite_poset& p);

// For every z with distinct covers x, y and every common upper bound b of
// x and y, some t <= b covers both x and y.  (Quantifying over the bound b
// is equivalent to quantifying over all intervals containing the cover pair.)
bool is_totally_semimodular(const finite_poset& p);

// Brute-force poset isomorphism (intended for small posets).
bool isomorphic(const finite_poset& a, const finite_poset& b);

std::string to_dot(const finite_poset& p);

// ---------------------------------------------------------------------------
// Semi-pointed partition posets.

enum class poset_variant { unbounded, bounded, pointed_interval, unpointed_interval };

std::string variant_name(poset_variant v);
poset_variant variant_from_name(const std::string& name);

// A poset of semi-pointed partitions together with its elements.
//  - unbounded:          all partitions of the ground set;
//  - bounded:            the same plus an adjoined least element (hat0);
//  - pointed_interval:   partitions whose part containing label 1 is pointed
//                        at 1 (maximal interval below a pointed one-block);
//  - unpointed_interval: the unpointed one-block and everything above it.
// In every variant the all-singletons partition is the greatest element.
struct spp_poset {
    ground_set gs;
    poset_variant var = poset_variant::unbounded;
    std::vector<semi_pointed_partition> elements; // aligned with poset indices
    finite_poset poset;
    int hat0 = -1; // index of the adjoined bottom in the bounded variant

    int index_of(const semi_pointed_partition& sp) const; // -1 if absent
};

spp_poset build_poset(const ground_set& gs, poset_variant var);

// Class of a maximal interval of the semi-pointed partition poset, determined
// up to isomorphism by its size, number of pointable elements, and whether the
// bottom one-block is pointed.
struct interval_class {
    int n = 0;
    int p = 0;
    int o = 0; // 1 iff the bottom one-block is pointed
    auto operator<=>(const interval_class&) const = default;
};

// Factorization of a pointed/unpointed interval variant at element x:
// [x, top] is a direct product of one interval per part of x (lower), and
// [bottom, x] is a single interval over the parts of x (upper).
struct interval_factorization_result {
    std::vector<interval_class> lower; // one entry per part of x
    interval_class upper;
};

interval_factorization_result interval_factorization(const spp_poset& sp, int x);

// The permutation of poset elements induced by a ground-set relabelling;
// image[e] is the new label of e.  Throws if some element leaves the poset.
std::vector<int> induced_element_map(const spp_poset& sp, const std::vector<int>& image);

// Does the element permutation g preserve the order relation?
bool is_automorphism(const finite_poset& p, const std::vector<int>& g);

nlohmann::json to_json(const spp_poset& sp);

} // namespace spp
