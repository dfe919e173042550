#pragma once

#include "spp/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spp {

// Truncated bivariate exponential generating function: the entry at (p, l) is
// the coefficient of x^p y^l / (p! l!), kept to total degree <= order.  The
// coefficient ring is either `rational` or `polynomial` (series whose
// coefficients carry a marker variable t).
template <typename Ring>
class bivariate_series {
public:
    explicit bivariate_series(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        rows_.resize(static_cast<std::size_t>(order) + 1);
        for (int p = 0; p <= order; ++p)
            rows_[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(order - p) + 1,
                                                      Ring(0));
    }

    static bivariate_series one(int order) {
        bivariate_series s(order);
        s.set_coeff(0, 0, Ring(1));
        return s;
    }
    static bivariate_series var_x(int order) {
        bivariate_series s(order);
        if (order >= 1) s.set_coeff(1, 0, Ring(1));
        return s;
    }
    static bivariate_series var_y(int order) {
        bivariate_series s(order);
        if (order >= 1) s.set_coeff(0, 1, Ring(1));
        return s;
    }

    int order() const { return order_; }

    // Coefficients beyond the truncation order read as zero.
    Ring coeff(int p, int l) const {
        if (p < 0 || l < 0) throw std::out_of_range("negative series index");
        if (p + l > order_) return Ring(0);
        return rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)];
    }
    void set_coeff(int p, int l, Ring v) {
        if (p < 0 || l < 0 || p + l > order_)
            throw std::out_of_range("series index outside truncation order");
        rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& row : rows_)
            for (const auto& v : row)
                if (!(v == Ring(0))) return false;
        return true;
    }

    bivariate_series truncate(int new_order) const {
        bivariate_series s(new_order);
        for (int p = 0; p <= new_order; ++p)
            for (int l = 0; p + l <= new_order; ++l) s.set_coeff(p, l, coeff(p, l));
        return s;
    }

    bivariate_series& operator+=(const bivariate_series& o) {
        check_same_order(o);
        for (int p = 0; p <= order_; ++p)
            for (int l = 0; p + l <= order_; ++l)
                rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)] += o.coeff(p, l);
        return *this;
    }
    bivariate_series& operator-=(const bivariate_series& o) {
        check_same_order(o);
        for (int p = 0; p <= order_; ++p)
            for (int l = 0; p + l <= order_; ++l)
                rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)] -= o.coeff(p, l);
        return *this;
    }
    bivariate_series operator-() const {
        bivariate_series s(order_);
        for (int p = 0; p <= order_; ++p)
            for (int l = 0; p + l <= order_; ++l) s.set_coeff(p, l, -coeff(p, l));
        return s;
    }

    friend bivariate_series operator+(bivariate_series a, const bivariate_series& b) {
        a += b;
        return a;
    }
    friend bivariate_series operator-(bivariate_series a, const bivariate_series& b) {
        a -= b;
        return a;
    }

    // Product of exponential generating functions: binomial convolution.
    friend bivariate_series operator*(const bivariate_series& a, const bivariate_series& b) {
        a.check_same_order(b);
        bivariate_series s(a.order_);
        for (int p = 0; p <= a.order_; ++p)
            for (int l = 0; p + l <= a.order_; ++l) {
                Ring acc(0);
                for (int i = 0; i <= p; ++i)
                    for (int j = 0; j <= l; ++j) {
                        const Ring term = a.coeff(i, j) * b.coeff(p - i, l - j);
                        if (term == Ring(0)) continue;
                        acc += Ring(rational(binomial(p, i) * binomial(l, j))) * term;
                    }
                s.set_coeff(p, l, std::move(acc));
            }
        return s;
    }
    friend bivariate_series operator*(const Ring& c, const bivariate_series& f) {
        bivariate_series s(f.order_);
        for (int p = 0; p <= f.order_; ++p)
            for (int l = 0; p + l <= f.order_; ++l) s.set_coeff(p, l, c * f.coeff(p, l));
        return s;
    }

    bool operator==(const bivariate_series& o) const {
        return order_ == o.order_ && rows_ == o.rows_;
    }

    // Euler operators x d/dx and y d/dy; these respect the truncation exactly.
    bivariate_series x_dx() const {
        bivariate_series s(order_);
        for (int p = 0; p <= order_; ++p)
            for (int l = 0; p + l <= order_; ++l) s.set_coeff(p, l, Ring(rational(p)) * coeff(p, l));
        return s;
    }
    bivariate_series y_dy() const {
        bivariate_series s(order_);
        for (int p = 0; p <= order_; ++p)
            for (int l = 0; p + l <= order_; ++l) s.set_coeff(p, l, Ring(rational(l)) * coeff(p, l));
        return s;
    }

private:
    void check_same_order(const bivariate_series& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("series truncation orders do not match");
    }

    int order_ = 0;
    std::vector<std::vector<Ring>> rows_; // rows_[p][l]
};

// exp(f) for a series with zero constant term.
template <typename Ring>
bivariate_series<Ring> exp(const bivariate_series<Ring>& f) {
    if (!(f.coeff(0, 0) == Ring(0)))
        throw std::domain_error("exp requires a series with zero constant term");
    auto result = bivariate_series<Ring>::one(f.order());
    auto term = bivariate_series<Ring>::one(f.order()); // f^k / k!
    for (int k = 1; k <= f.order(); ++k) {
        term = Ring(rational(1, k)) * (term * f);
        result += term;
    }
    return result;
}

// log(1 + f) for a series f with zero constant term.
template <typename Ring>
bivariate_series<Ring> log1p(const bivariate_series<Ring>& f) {
    if (!(f.coeff(0, 0) == Ring(0)))
        throw std::domain_error("log1p requires a series with zero constant term");
    bivariate_series<Ring> result(f.order());
    auto power = bivariate_series<Ring>::one(f.order());
    for (int k = 1; k <= f.order(); ++k) {
        power = power * f;
        result += Ring(rational((k % 2 == 1) ? 1 : -1, k)) * power;
    }
    return result;
}

// 1/(1 + f) for a series f with zero constant term.
template <typename Ring>
bivariate_series<Ring> inverse_one_plus(const bivariate_series<Ring>& f) {
    if (!(f.coeff(0, 0) == Ring(0)))
        throw std::domain_error("inverse requires the constant term to be one");
    auto result = bivariate_series<Ring>::one(f.order());
    auto power = bivariate_series<Ring>::one(f.order());
    for (int k = 1; k <= f.order(); ++k) {
        power = power * f;
        result += Ring(rational((k % 2 == 0) ? 1 : -1)) * power;
    }
    return result;
}

// phi(W, y): substitute the series W (zero constant term) for the first
// variable of phi, keeping the second variable.
template <typename Ring>
bivariate_series<Ring> substitute_first(const bivariate_series<Ring>& phi,
                                        const bivariate_series<Ring>& w) {
    if (phi.order() != w.order())
        throw std::invalid_argument("series truncation orders do not match");
    if (!(w.coeff(0, 0) == Ring(0)))
        throw std::domain_error("substituted series must have zero constant term");
    const int n = phi.order();
    bivariate_series<Ring> result(n);
    auto w_power = bivariate_series<Ring>::one(n); // w^a
    for (int a = 0; a <= n; ++a) {
        if (a > 0) w_power = w_power * w;
        for (int b = 0; a + b <= n; ++b) {
            const Ring c = phi.coeff(a, b);
            if (c == Ring(0)) continue;
            // The monomial y^b carries EGF coefficient b!/(a! b!) = 1/a!.
            bivariate_series<Ring> mono(n);
            mono.set_coeff(0, b, Ring(rational(1, factorial(a))));
            result += c * (w_power * mono);
        }
    }
    return result;
}

using egf = bivariate_series<rational>;
using egf_poly = bivariate_series<polynomial>;

// Lift a rational-coefficient series to polynomial coefficients.
egf_poly to_polynomial_series(const egf& f);

// The multichain series family at recursion depth k.  `pm` collects the
// multichains whose coarsest element is a pointed one-block, `um` those with
// an unpointed one-block, `all` the multichains of the full poset, and
// `with_mult` = pm + um the series indexed one step lower (its chain index is
// k - 1).
struct chain_series_family {
    int k = 0;
    egf pm;
    egf um;
    egf all;
    egf with_mult;
};

chain_series_family chain_series(int k, int order);

enum class chain_kind { pm, um, all, with_mult };

// Samples the (p, l) coefficient of the selected series at recursion depths
// 1..depth, interpolates the unique polynomial in the series' own chain index
// (k for pm/um/all, k - 1 for with_mult) and evaluates it at k_eval.
rational extrapolate_coefficient(chain_kind which, int p, int l, int k_eval, int depth);

// Solves x = A (y + e^A) degree by degree and sets B = log(y + e^A) - A.
struct fixed_point_series {
    egf a;
    egf b;
};
fixed_point_series solve_fixed_point(int order);

enum class dimension_family { pointed, bounded, all_intervals };

// Closed form for the total dimension of the top homology of the named family
// of complexes; `in_stated_range` is false when the requested parameters fall
// outside the range where the formula describes this library's construction
// (p = 0 for the bounded family returns the classical value (l-1)!).
struct closed_dimension {
    integer value;
    bool in_stated_range = true;
};
closed_dimension closed_form_dimension(int p, int l, dimension_family which);

// Coefficients of the solution W of W = x * phi(W, y) by Lagrange inversion;
// phi's first variable is the one substituted.
egf lagrange_coefficients(const egf& phi);

nlohmann::json to_json(const egf& f);
std::string to_table_string(const egf& f);

} // namespace spp
