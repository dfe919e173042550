#pragma once

#include "spp/egf.hpp"
#include "spp/partition.hpp"
#include "spp/polynomial.hpp"
#include "spp/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spp {

// Isomorphism class of a maximal one-block-to-singletons interval of the
// partition order: k pointable and l free elements, bottom one-block pointed
// (o = 1) or unpointed (o = 0).  The grade k + l - 1 counts the splits needed
// to reach the all-singletons partition; grade-0 classes are singleton
// intervals and act as the unit of the reduced incidence algebra.
struct hopf_generator {
    int k = 0;
    int l = 0;
    int o = 0;

    int grade() const { return k + l - 1; }
    bool valid() const {
        return k >= 0 && l >= 0 && (o == 0 || o == 1) && k + l >= 1 &&
               (o == 1 ? k >= 1 : l >= 1);
    }
    auto operator<=>(const hopf_generator&) const = default;
    std::string to_string() const; // e.g. "a1_{1,2}"
};

// All valid classes of grade 1..max_grade, sorted.
std::vector<hopf_generator> all_generators(int max_grade);

// Commutative monomial in the interval classes (class -> multiplicity).
// Grade-0 classes are never stored; the empty monomial is the unit.
using hopf_monomial = std::map<hopf_generator, int>;

int monomial_grade(const hopf_monomial& m);
hopf_monomial merge_monomials(const hopf_monomial& a, const hopf_monomial& b);
std::string monomial_to_string(const hopf_monomial& m);

// Element of the polynomial algebra over Q freely generated by the interval
// classes.  Stored as a zero-free map from monomials to coefficients.
class hopf_element {
public:
    hopf_element() = default;
    explicit hopf_element(int c) : hopf_element(rational(c)) {}
    explicit hopf_element(const rational& c) {
        if (c != 0) terms_[hopf_monomial{}] = c;
    }
    hopf_element(const hopf_generator& g); // the unit when g has grade 0

    static hopf_element one() { return hopf_element(1); }

    bool is_zero() const { return terms_.empty(); }
    rational coeff(const hopf_monomial& m) const;
    const std::map<hopf_monomial, rational>& terms() const { return terms_; }

    void add(const hopf_monomial& m, const rational& c);
    hopf_element& operator+=(const hopf_element& o);
    hopf_element& operator-=(const hopf_element& o);
    hopf_element operator-() const;
    bool operator==(const hopf_element&) const = default;

    std::string to_string() const;

private:
    std::map<hopf_monomial, rational> terms_;
};

hopf_element operator+(hopf_element a, const hopf_element& b);
hopf_element operator-(hopf_element a, const hopf_element& b);
hopf_element operator*(const hopf_element& a, const hopf_element& b);
hopf_element operator*(const rational& c, const hopf_element& h);

// Coefficient of the empty monomial (the algebra counit).
rational counit(const hopf_element& h);

// Element of the tensor square, as a zero-free map on monomial pairs.
class tensor_element {
public:
    tensor_element() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<hopf_monomial, hopf_monomial>, rational>& terms() const {
        return terms_;
    }

    void add(const hopf_monomial& left, const hopf_monomial& right, const rational& c);
    tensor_element& operator+=(const tensor_element& o);
    tensor_element& operator-=(const tensor_element& o);
    bool operator==(const tensor_element&) const = default;

    std::string to_string() const;

private:
    std::map<std::pair<hopf_monomial, hopf_monomial>, rational> terms_;
};

tensor_element tensor(const hopf_element& a, const hopf_element& b);
tensor_element operator*(const tensor_element& a, const tensor_element& b);

// Contract one tensor leg with the counit (epsilon (x) id, id (x) epsilon).
hopf_element contract_left(const tensor_element& t);
hopf_element contract_right(const tensor_element& t);

// Coproduct of an interval class: sum over ordered splittings of the k
// pointable and l free elements into p pointed and q unpointed lower factors,
//   sum_{p >= o, valid (p,q,o)} sum_{tuples} l!(k-o)! /
//     (prod_{i<=p} l_i!(k_i-1)! prod_{i>p} l_i!k_i! q!(p-o)!)
//     a1_{k_1,l_1}...a1_{k_p,l_p} a0_{k_{p+1},l_{p+1}}...a0_{k_{p+q},l_{p+q}}
//       (x) a^o_{p,q},
// with k_i >= 1 on pointed factors and l_i >= 1 on unpointed ones.
tensor_element coproduct(const hopf_generator& g);

// Multiplicative + linear extension to arbitrary elements.
tensor_element coproduct(const hopf_element& h);

// The same coproduct computed from first principles: enumerate the interval
// below the class's one-block, and for each partition x in it multiply the
// classes of the parts of x (lower leg) against the class of the interval
// from x up to the singletons (upper leg).
tensor_element brute_coproduct(const hopf_generator& g);

// (Delta (x) id)Delta == (id (x) Delta)Delta and the counit laws, checked on
// every generator of grade <= max_grade.
bool coassociativity_check(int max_grade);

nlohmann::json to_json(const hopf_element& h);
nlohmann::json to_json(const tensor_element& t);

// ---------------------------------------------------------------------------
// Series encoding of the reduced incidence algebra.
//
// A pair of exponential series in (x, y) with coefficients in the generator
// algebra; throughout this block the FIRST series index counts free elements
// and the SECOND counts pointable ones.  Multiplicative functions on interval
// classes correspond to such pairs, and convolution corresponds to pair
// composition with the left convolution factor substituted innermost.

using hopf_series = bivariate_series<hopf_element>;

struct series_pair {
    hopf_series f; // x + sum over unpointed classes  a0_{k,l} x^l y^k / (l!k!)
    hopf_series g; // y + sum over pointed classes  k a1_{k,l} x^l y^k / (l!k!)
};

series_pair identity_pair(int order); // (x, y)
series_pair generator_pair(int order);

// Substitute (u, v) for the two variables of h; u and v must have zero
// constant term and all three series the same truncation order.
template <typename Ring>
bivariate_series<Ring> substitute_bivariate(const bivariate_series<Ring>& h,
                                            const bivariate_series<Ring>& u,
                                            const bivariate_series<Ring>& v) {
    const int n = h.order();
    if (u.order() != n || v.order() != n)
        throw std::invalid_argument("substitution orders do not match");
    if (!(u.coeff(0, 0) == Ring(0)) || !(v.coeff(0, 0) == Ring(0)))
        throw std::domain_error("substituted series must have zero constant term");
    bivariate_series<Ring> result(n);
    auto u_pow = bivariate_series<Ring>::one(n); // u^a
    for (int a = 0; a <= n; ++a) {
        auto uv = u_pow; // u^a v^b
        for (int b = 0; a + b <= n; ++b) {
            const Ring c = h.coeff(a, b);
            if (!(c == Ring(0)))
                result += (c * Ring(rational(integer(1), factorial(a) * factorial(b)))) * uv;
            if (a + b < n) uv = uv * v;
        }
        if (a < n) u_pow = u_pow * u;
    }
    return result;
}

series_pair compose_pairs(const series_pair& outer, const series_pair& inner);

// The compositional inverse of the all-ones pair ((e^x - 1)e^y, y e^{x+y}):
// the unique pair (A, B) with (e^B - 1)e^A = x and A e^{A+B} = y.  Its
// coefficient at x^i y^j collects, for the ground set with j pointable and
// i free elements, j times the pointed-interval Moebius number (in A) and
// the unpointed-interval Moebius number (in B); equivalently it is the
// chain-family fixed point with the two variable roles exchanged.
fixed_point_series mobius_series(int order);

// ---------------------------------------------------------------------------
// Characteristic polynomials sum t^(corank) against one-block-to-x Moebius
// numbers over a partition poset or one of its maximal intervals.

enum class charpoly_variant { pointed, unpointed, unbounded, bounded };

std::string charpoly_variant_name(charpoly_variant v);
charpoly_variant charpoly_variant_from_name(const std::string& name);

// Product formulas: pointed (t-1)(t-p-l)^{p-2} prod_{i=p+1}^{p+l}(t-i) with
// the p = 1 case reduced by cancellation; unbounded (t-p-l)^{p-1} times the
// same product (p = 0 reduced likewise); bounded t*unbounded(t) minus
// unbounded(1).  The unpointed interval has no product form here and is
// covered by the series identity below.
polynomial charpoly_closed(int p, int l, charpoly_variant which);

// From the poset: sum over elements x of mu(x, all-singletons) t^{parts(x)-1}
// (intervals and the unbounded poset), or t^{parts(x)} plus the Moebius
// number of the whole bounded poset as the constant term (bounded variant).
polynomial charpoly_brute(const ground_set& gs, charpoly_variant which);

// Compare the generating-series forms against the poset sums for every
// ground set with 1 <= p + l <= max_total: with (A, B) the chain-family
// fixed point and S = (e^{t(A+B)} - 1)/t,
//   S encodes the unbounded polynomials, t S(t) - S(1) the bounded ones,
//   A e^{t(A+B)} encodes p times the pointed ones, and
//   (e^{tB} - 1) e^{tA} / t the unpointed ones.
struct charpoly_series_report {
    int checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

charpoly_series_report charpoly_series_check(int order, int max_total);

} // namespace spp
