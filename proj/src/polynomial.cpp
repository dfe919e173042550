#include "spp/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spp {

polynomial::polynomial(const rational& c) {
    if (c != 0) coeffs_ = {c};
}

polynomial::polynomial(const integer& c) : polynomial(rational(c)) {}

polynomial::polynomial(int c) : polynomial(rational(c)) {}

polynomial::polynomial(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

polynomial polynomial::variable() {
    polynomial p;
    p.coeffs_ = {rational(0), rational(1)};
    return p;
}

rational polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : rational(0);
}

rational polynomial::leading_coeff() const {
    return coeffs_.empty() ? rational(0) : coeffs_.back();
}

void polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

polynomial& polynomial::operator+=(const polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

polynomial& polynomial::operator*=(const polynomial& o) {
    *this = *this * o;
    return *this;
}

polynomial polynomial::operator-() const {
    polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

polynomial operator+(polynomial a, const polynomial& b) {
    a += b;
    return a;
}

polynomial operator-(polynomial a, const polynomial& b) {
    a -= b;
    return a;
}

polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<rational> prod(static_cast<std::size_t>(a.degree() + b.degree()) + 1, rational(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            prod[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return polynomial(std::move(prod));
}

polynomial operator*(const rational& c, const polynomial& p) {
    if (c == 0) return {};
    std::vector<rational> r;
    r.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) r.push_back(c * p.coeff(i));
    return polynomial(std::move(r));
}

polynomial polynomial::pow(unsigned e) const {
    polynomial r(1);
    polynomial b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

rational polynomial::evaluate(const rational& x) const {
    rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

polynomial polynomial::divide_by_variable() const {
    if (is_zero()) return {};
    if (coeffs_[0] != 0)
        throw std::domain_error("polynomial: not divisible by the variable (non-zero constant term)");
    return polynomial(std::vector<rational>(coeffs_.begin() + 1, coeffs_.end()));
}

polynomial polynomial::interpolate(const std::vector<std::pair<rational, rational>>& points) {
    const std::size_t n = points.size();
    if (n == 0) return {};
    std::vector<rational> dd;
    dd.reserve(n);
    for (const auto& [x, y] : points) {
        (void)x;
        dd.push_back(y);
    }
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            const rational dx = points[i].first - points[i - j].first;
            if (dx == 0) throw std::invalid_argument("interpolate: repeated x value");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    // Horner expansion of the Newton form.
    polynomial p(dd[n - 1]);
    const polynomial t = variable();
    for (std::size_t i = n - 1; i-- > 0;) p = p * (t - polynomial(points[i].first)) + polynomial(dd[i]);
    return p;
}

polynomial binom(const polynomial& p, unsigned k) {
    polynomial num(1);
    for (unsigned i = 0; i < k; ++i) num *= p - polynomial(static_cast<int>(i));
    return rational(1, factorial(k)) * num;
}

std::string polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        rational c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        rational a = c < 0 ? rational(-c) : c;
        const bool unit = a == 1 && i > 0;
        if (!unit) os << a;
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const polynomial& p) {
    return os << p.to_string();
}

} // namespace spp
