#pragma once

#include "spp/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spp {

// Dense univariate polynomial over the exact rationals.  The indeterminate is
// anonymous; callers choose a display name ("t", "k", ...) when printing.
class polynomial {
public:
    polynomial() = default;
    polynomial(const rational& c);
    polynomial(const integer& c);
    polynomial(int c);
    explicit polynomial(std::vector<rational> coeffs);

    // The monomial of degree one with coefficient one.
    static polynomial variable();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    rational coeff(std::size_t i) const;
    rational constant_term() const { return coeff(0); }
    rational leading_coeff() const;

    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    polynomial& operator*=(const polynomial& o);
    polynomial operator-() const;
    bool operator==(const polynomial& o) const = default;

    polynomial pow(unsigned e) const;
    rational evaluate(const rational& x) const;

    // Exact division by the degree-one monomial; throws std::domain_error if
    // the constant term is non-zero.
    polynomial divide_by_variable() const;

    // The unique polynomial of degree < points.size() through all (x, y) pairs,
    // computed exactly by Newton divided differences.
    static polynomial interpolate(const std::vector<std::pair<rational, rational>>& points);

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<rational> coeffs_; // coeffs_[i] multiplies x^i; no trailing zeros
    void trim();
};

polynomial operator+(polynomial a, const polynomial& b);
polynomial operator-(polynomial a, const polynomial& b);
polynomial operator*(const polynomial& a, const polynomial& b);
polynomial operator*(const rational& c, const polynomial& p);

// Falling-factorial binomial with polynomial top argument: P(P-1)...(P-k+1)/k!.
polynomial binom(const polynomial& p, unsigned k);

std::ostream& operator<<(std::ostream& os, const polynomial& p);

} // namespace spp
