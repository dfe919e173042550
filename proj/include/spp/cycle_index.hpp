#pragma once

#include "spp/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace spp {

// Cycle multiplicities of a sort-preserving permutation: lambda counts cycles
// on pointable labels, mu on non-pointable ones.  The same pair of maps also
// serves as the exponent vector of a monomial in the two variable families of
// a cycle index series.
struct cycle_type {
    std::map<int, int> lambda; // cycle length -> multiplicity, pointable sort
    std::map<int, int> mu;     // cycle length -> multiplicity, free sort

    int pointable_size() const;
    int free_size() const;
    int total_size() const { return pointable_size() + free_size(); }
    // Total number of cycles; as a monomial, the total degree.
    int cycle_count() const;
    int lambda_at(int m) const;
    int mu_at(int m) const;
    int multiplicity(int m) const { return lambda_at(m) + mu_at(m); }
    // Lengths m with at least one cycle, ascending.
    std::vector<int> active_lengths() const;

    // Sum over divisors d of m of d * (lambda_d + mu_d).
    integer alpha(int m) const;
    // The polynomial (1/m) * sum over divisors d of m of moebius(d) t^(m/d);
    // at positive integers t it counts primitive necklaces of length m over
    // t letters.
    polynomial cycle_counter(int m) const;
    // prod i^{lambda_i} lambda_i! * prod j^{mu_j} mu_j! (centralizer order).
    integer z() const;

    auto operator<=>(const cycle_type&) const = default;
    std::string to_string() const;
};

cycle_type identity_type(int p, int l);
std::vector<cycle_type> all_cycle_types(int p, int l);

// The lexicographically smallest permutation with the given cycle type,
// acting on labels 1..p_size on the pointable sort and the following free
// labels; returned as an image vector with entry 0 unused.
std::vector<int> instantiate_permutation(const cycle_type& ct);

// Truncated series whose monomials are indexed by cycle_type keys; the weight
// of a monomial is the total size of its key.
class cycle_index_series {
public:
    explicit cycle_index_series(int weight);
    static cycle_index_series monomial(int weight, const cycle_type& ct, const rational& c);
    // Cycle index of the species of sets (on the pointable sort only) and its
    // nonempty restriction.
    static cycle_index_series sets(int weight);
    static cycle_index_series nonempty_sets(int weight);

    int weight() const { return weight_; }
    rational coeff(const cycle_type& ct) const;
    void set_coeff(const cycle_type& ct, const rational& c);
    const std::map<cycle_type, rational>& terms() const { return terms_; }

    cycle_index_series& operator+=(const cycle_index_series& o);
    cycle_index_series& operator-=(const cycle_index_series& o);
    bool operator==(const cycle_index_series& o) const = default;

private:
    int weight_ = 0;
    std::map<cycle_type, rational> terms_; // only nonzero coefficients
};

cycle_index_series operator+(cycle_index_series a, const cycle_index_series& b);
cycle_index_series operator-(cycle_index_series a, const cycle_index_series& b);
cycle_index_series operator*(const cycle_index_series& a, const cycle_index_series& b);
cycle_index_series operator*(const rational& c, const cycle_index_series& f);

// f with every p_k replaced by g at index-multiplied variables (p_i -> p_ki,
// q_j -> q_kj); the q-variables of f itself are untouched.
cycle_index_series plethysm(const cycle_index_series& f, const cycle_index_series& g);
// -f(-p_1, -p_2, ..., -q_1, -q_2, ...).
cycle_index_series suspension(const cycle_index_series& f);

// coeff * z: the number of structures fixed by a permutation of this type
// when f is the cycle index of a species.
rational fixed_point_count(const cycle_index_series& f, const cycle_type& ct);

// Closed character formulas.  t_family returns a polynomial in t whose value
// at t = 1 is the bounded-poset character and at t = 0 the all-intervals sum;
// pointed_sum and intervals_sum are its companions for the pointed maximal
// intervals alone and for all maximal intervals.
polynomial character_t_family(const cycle_type& ct);
rational character_pointed_sum(const cycle_type& ct);
rational character_intervals_sum(const cycle_type& ct);

enum class character_formula { pointed_sum, t_family, intervals_sum };
polynomial character_closed(const cycle_type& ct, character_formula which);

// Brute-force character values from fixed multichain counts on the actual
// posets, for the lexicographically smallest permutation of the type (or a
// caller-supplied permutation, to confirm the class-function property).
enum class character_oracle_kind { bounded, intervals_sum, pointed_sum };
rational character_oracle(const cycle_type& ct, character_oracle_kind which);
rational character_oracle_for(const cycle_type& ct, const std::vector<int>& image,
                              character_oracle_kind which);

} // namespace spp
