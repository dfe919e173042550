#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace spp {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// n! as an exact big integer.
inline integer factorial(unsigned n) {
    integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient with arbitrary (possibly negative) integer top argument,
// via the falling factorial n(n-1)...(n-k+1)/k!.  A product of k consecutive
// integers is always divisible by k!, so the division is exact.
inline integer binomial(const integer& n, unsigned k) {
    integer num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - i;
    return num / factorial(k);
}

inline integer ipow(const integer& base, unsigned e) {
    integer r = 1;
    integer b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline rational rpow(const rational& base, int e) {
    if (e >= 0) {
        rational r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }
    if (base == 0) throw std::domain_error("rpow: zero base with negative exponent");
    return 1 / rpow(base, -e);
}

// Number-theoretic Moebius function.
inline int moebius_int(unsigned n) {
    if (n == 0) throw std::invalid_argument("moebius_int: argument must be positive");
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace spp
