#include "spp/cycle_index.hpp"

#include "spp/invariants.hpp"
#include "spp/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spp {

namespace {

int weighted_size(const std::map<int, int>& part) {
    int n = 0;
    for (const auto& [len, mult] : part) n += len * mult;
    return n;
}

void validate_multiplicities(const std::map<int, int>& part) {
    for (const auto& [len, mult] : part)
        if (len < 1 || mult < 1)
            throw std::invalid_argument("cycle type entries must have positive length and count");
}

} // namespace

int cycle_type::pointable_size() const { return weighted_size(lambda); }
int cycle_type::free_size() const { return weighted_size(mu); }

int cycle_type::cycle_count() const {
    int c = 0;
    for (const auto& [len, mult] : lambda) c += mult;
    for (const auto& [len, mult] : mu) c += mult;
    return c;
}

int cycle_type::lambda_at(int m) const {
    const auto it = lambda.find(m);
    return it == lambda.end() ? 0 : it->second;
}
int cycle_type::mu_at(int m) const {
    const auto it = mu.find(m);
    return it == mu.end() ? 0 : it->second;
}

std::vector<int> cycle_type::active_lengths() const {
    std::set<int> seen;
    for (const auto& [len, mult] : lambda) seen.insert(len);
    for (const auto& [len, mult] : mu) seen.insert(len);
    return {seen.begin(), seen.end()};
}

integer cycle_type::alpha(int m) const {
    integer a = 0;
    for (const unsigned d : divisors(static_cast<unsigned>(m)))
        a += integer(d) * multiplicity(static_cast<int>(d));
    return a;
}

polynomial cycle_counter_poly(int m) {
    std::vector<rational> coeffs(static_cast<std::size_t>(m) + 1, rational(0));
    for (const unsigned d : divisors(static_cast<unsigned>(m)))
        coeffs[static_cast<std::size_t>(m / static_cast<int>(d))] += rational(moebius_int(d), m);
    return polynomial(std::move(coeffs));
}

polynomial cycle_type::cycle_counter(int m) const { return cycle_counter_poly(m); }

integer cycle_type::z() const {
    integer v = 1;
    for (const auto& [len, mult] : lambda) v *= ipow(len, mult) * factorial(mult);
    for (const auto& [len, mult] : mu) v *= ipow(len, mult) * factorial(mult);
    return v;
}

std::string cycle_type::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [len, mult] : lambda) {
        if (!first) os << " ";
        os << "l" << len << "^" << mult;
        first = false;
    }
    for (const auto& [len, mult] : mu) {
        if (!first) os << " ";
        os << "m" << len << "^" << mult;
        first = false;
    }
    if (first) os << "empty";
    os << ")";
    return os.str();
}

cycle_type identity_type(int p, int l) {
    cycle_type ct;
    if (p > 0) ct.lambda[1] = p;
    if (l > 0) ct.mu[1] = l;
    return ct;
}

namespace {

void integer_partitions(int n, int max_part, std::map<int, int>& current,
                        std::vector<std::map<int, int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        ++current[part];
        integer_partitions(n - part, part, current, out);
        if (--current[part] == 0) current.erase(part);
    }
}

std::vector<std::map<int, int>> integer_partitions(int n) {
    std::vector<std::map<int, int>> out;
    std::map<int, int> current;
    integer_partitions(n, n == 0 ? 1 : n, current, out);
    return out;
}

} // namespace

std::vector<cycle_type> all_cycle_types(int p, int l) {
    std::vector<cycle_type> out;
    for (const auto& lam : integer_partitions(p))
        for (const auto& m : integer_partitions(l)) out.push_back(cycle_type{lam, m});
    return out;
}

std::vector<int> instantiate_permutation(const cycle_type& ct) {
    validate_multiplicities(ct.lambda);
    validate_multiplicities(ct.mu);
    std::vector<int> image(static_cast<std::size_t>(ct.total_size()) + 1);
    image[0] = 0;
    int next = 1;
    // Consecutive blocks, shortest cycles first, each cycle shifting its block
    // by one: this is the lexicographically smallest word with the type.
    const auto emit = [&](const std::map<int, int>& part) {
        for (const auto& [len, mult] : part)
            for (int c = 0; c < mult; ++c) {
                for (int i = 0; i < len - 1; ++i)
                    image[static_cast<std::size_t>(next + i)] = next + i + 1;
                image[static_cast<std::size_t>(next + len - 1)] = next;
                next += len;
            }
    };
    emit(ct.lambda);
    emit(ct.mu);
    return image;
}

cycle_index_series::cycle_index_series(int weight) : weight_(weight) {
    if (weight < 0) throw std::invalid_argument("series weight must be nonnegative");
}

cycle_index_series cycle_index_series::monomial(int weight, const cycle_type& ct,
                                                const rational& c) {
    cycle_index_series f(weight);
    f.set_coeff(ct, c);
    return f;
}

cycle_index_series cycle_index_series::sets(int weight) {
    cycle_index_series f(weight);
    for (int n = 0; n <= weight; ++n)
        for (const auto& lam : integer_partitions(n)) {
            const cycle_type ct{lam, {}};
            f.set_coeff(ct, rational(1) / rational(ct.z()));
        }
    return f;
}

cycle_index_series cycle_index_series::nonempty_sets(int weight) {
    cycle_index_series f = sets(weight);
    f.set_coeff(cycle_type{}, 0);
    return f;
}

rational cycle_index_series::coeff(const cycle_type& ct) const {
    const auto it = terms_.find(ct);
    return it == terms_.end() ? rational(0) : it->second;
}

void cycle_index_series::set_coeff(const cycle_type& ct, const rational& c) {
    if (ct.total_size() > weight_)
        throw std::out_of_range("monomial weight exceeds series truncation");
    if (c == 0)
        terms_.erase(ct);
    else
        terms_[ct] = c;
}

cycle_index_series& cycle_index_series::operator+=(const cycle_index_series& o) {
    if (weight_ != o.weight_)
        throw std::invalid_argument("series truncation weights do not match");
    for (const auto& [ct, c] : o.terms_) set_coeff(ct, coeff(ct) + c);
    return *this;
}

cycle_index_series& cycle_index_series::operator-=(const cycle_index_series& o) {
    if (weight_ != o.weight_)
        throw std::invalid_argument("series truncation weights do not match");
    for (const auto& [ct, c] : o.terms_) set_coeff(ct, coeff(ct) - c);
    return *this;
}

cycle_index_series operator+(cycle_index_series a, const cycle_index_series& b) {
    a += b;
    return a;
}
cycle_index_series operator-(cycle_index_series a, const cycle_index_series& b) {
    a -= b;
    return a;
}

cycle_index_series operator*(const cycle_index_series& a, const cycle_index_series& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("series truncation weights do not match");
    cycle_index_series prod(a.weight());
    for (const auto& [cta, ca] : a.terms())
        for (const auto& [ctb, cb] : b.terms()) {
            if (cta.total_size() + ctb.total_size() > a.weight()) continue;
            cycle_type merged = cta;
            for (const auto& [len, mult] : ctb.lambda) merged.lambda[len] += mult;
            for (const auto& [len, mult] : ctb.mu) merged.mu[len] += mult;
            prod.set_coeff(merged, prod.coeff(merged) + ca * cb);
        }
    return prod;
}

cycle_index_series operator*(const rational& c, const cycle_index_series& f) {
    cycle_index_series scaled(f.weight());
    for (const auto& [ct, v] : f.terms()) scaled.set_coeff(ct, c * v);
    return scaled;
}

namespace {

// g with every variable index multiplied by k.
cycle_index_series scale_indices(const cycle_index_series& g, int k) {
    cycle_index_series scaled(g.weight());
    for (const auto& [ct, c] : g.terms()) {
        if (ct.total_size() * k > g.weight()) continue;
        cycle_type stretched;
        for (const auto& [len, mult] : ct.lambda) stretched.lambda[len * k] = mult;
        for (const auto& [len, mult] : ct.mu) stretched.mu[len * k] = mult;
        scaled.set_coeff(stretched, c);
    }
    return scaled;
}

} // namespace

cycle_index_series plethysm(const cycle_index_series& f, const cycle_index_series& g) {
    if (f.weight() != g.weight())
        throw std::invalid_argument("series truncation weights do not match");
    if (!(g.coeff(cycle_type{}) == 0))
        throw std::domain_error("plethysm requires the substituted series to have zero constant term");
    const int n = f.weight();
    cycle_index_series result(n);
    for (const auto& [ct, c] : f.terms()) {
        // Substituting into p_k^e raises the minimum weight to k*e; the
        // q-variables of f pass through unchanged.
        cycle_index_series term =
            cycle_index_series::monomial(n, cycle_type{{}, ct.mu}, c);
        bool dead = false;
        for (const auto& [len, mult] : ct.lambda) {
            const auto gk = scale_indices(g, len);
            for (int e = 0; e < mult && !dead; ++e) {
                term = term * gk;
                dead = term.terms().empty();
            }
            if (dead) break;
        }
        if (!dead) result += term;
    }
    return result;
}

cycle_index_series suspension(const cycle_index_series& f) {
    cycle_index_series out(f.weight());
    for (const auto& [ct, c] : f.terms()) {
        const int sign = (ct.cycle_count() % 2 == 0) ? -1 : 1; // includes the global -1
        out.set_coeff(ct, rational(sign) * c);
    }
    return out;
}

rational fixed_point_count(const cycle_index_series& f, const cycle_type& ct) {
    return f.coeff(ct) * rational(ct.z());
}

namespace {

polynomial binom_poly(const polynomial& top, int k) {
    return binom(top, static_cast<unsigned>(k));
}

polynomial t_power(int m) {
    std::vector<rational> coeffs(static_cast<std::size_t>(m) + 1, rational(0));
    coeffs[static_cast<std::size_t>(m)] = 1;
    return polynomial(std::move(coeffs));
}

} // namespace

polynomial character_t_family(const cycle_type& ct) {
    if (ct.total_size() == 0) throw std::invalid_argument("empty cycle type");
    polynomial product(rational(1));
    for (const int m : ct.active_lengths()) {
        const int lam = ct.lambda_at(m), mu = ct.mu_at(m);
        const polynomial a = polynomial(rational(ct.alpha(m))) - t_power(m);
        const polynomial g = ct.cycle_counter(m);
        const rational scale = rational(ipow(m, mu) * factorial(mu));
        polynomial factor;
        if (lam >= 1) {
            const polynomial top(rational(lam + mu));
            polynomial bracket = rational(m * lam) * binom_poly(top - g, mu) -
                                 a * binom_poly(top - g - polynomial(rational(1)), mu);
            factor = scale * (a.pow(static_cast<unsigned>(lam - 1)) * bracket);
            if ((lam + mu - 1) % 2 == 1) factor = -factor;
        } else {
            factor = scale * binom_poly(g, mu);
        }
        product *= factor;
    }
    // The raw product always vanishes at t = 0; one exact division by t makes
    // the value at 0 the all-intervals character.
    return product.divide_by_variable();
}

rational character_pointed_sum(const cycle_type& ct) {
    if (ct.total_size() == 0) throw std::invalid_argument("empty cycle type");
    const int lam1 = ct.lambda_at(1), mu1 = ct.mu_at(1);
    if (lam1 == 0 && mu1 == 0)
        throw std::domain_error(
            "pointed-sum character: the length-one factor is degenerate (0 to a negative "
            "power) for cycle type " +
            ct.to_string());
    if (lam1 == 0) return 0; // the product over i < mu_1 of (lambda_1 + i) vanishes
    rational value = rational(1);
    for (int i = 0; i < mu1; ++i) value *= rational(lam1 + i);
    value *= rpow(rational(lam1 + mu1), lam1 - 1);
    if ((lam1 + mu1 - 1) % 2 == 1) value = -value;
    for (const int m : ct.active_lengths()) {
        if (m == 1) continue;
        const int lam = ct.lambda_at(m), mu = ct.mu_at(m);
        if (lam == 0) return 0; // the 1/(lambda_m - 1)! factor kills the term
        const rational alpha(ct.alpha(m));
        rational factor = rational(ipow(m, mu)) *
                          rational(factorial(lam + mu - 1), factorial(lam - 1)) *
                          rpow(alpha, lam - 1) *
                          (rational(m) * rational(lam + mu) - alpha);
        if ((lam + mu - 1) % 2 == 1) factor = -factor;
        value *= factor;
    }
    return value;
}

rational character_intervals_sum(const cycle_type& ct) {
    if (ct.total_size() == 0) throw std::invalid_argument("empty cycle type");
    const auto active = ct.active_lengths();
    // The shortest active length always satisfies alpha_m = m (lambda_m+mu_m):
    // no shorter divisor contributes.
    const int n = active.front();
    rational value = rational(1);
    for (const int m : active) {
        const int lam = ct.lambda_at(m), mu = ct.mu_at(m);
        const rational alpha(ct.alpha(m));
        rational factor;
        if (m == n) {
            // This factor of the t-indexed family vanishes at t = 0 (it is
            // built from alpha_n = n(lambda_n+mu_n)), so the product over all
            // lengths divided by t tends to its derivative at 0 times the
            // plain values of the other factors.  For n = 1 both the cycle
            // counter g_1 = t and the power t^1 vary; for n >= 2 only the
            // cycle counter contributes, through g_n'(0) = moebius(n)/n.
            if (m == 1) {
                factor = rpow(alpha, lam - 1) *
                         rational(factorial(lam + mu), factorial(lam));
            } else {
                factor = rational(ipow(m, mu)) * rpow(alpha, lam - 1) *
                         rational(moebius_int(static_cast<unsigned>(m))) *
                         rational(mu) *
                         rational(factorial(lam + mu - 1), factorial(lam));
            }
        } else {
            factor = rational(ipow(m, mu)) * rpow(alpha, lam - 1) *
                     rational(factorial(lam + mu - 1), factorial(lam)) * rational(lam) *
                     (rational(m) * rational(lam + mu) - alpha);
        }
        if ((lam + mu - 1) % 2 == 1) factor = -factor;
        value *= factor;
    }
    return value;
}

polynomial character_closed(const cycle_type& ct, character_formula which) {
    switch (which) {
    case character_formula::pointed_sum: return polynomial(character_pointed_sum(ct));
    case character_formula::t_family: return character_t_family(ct);
    case character_formula::intervals_sum: return polynomial(character_intervals_sum(ct));
    }
    throw std::logic_error("unreachable");
}

rational character_oracle_for(const cycle_type& ct, const std::vector<int>& image,
                              character_oracle_kind which) {
    const int p = ct.pointable_size(), l = ct.free_size();
    if (p + l == 0) throw std::invalid_argument("empty cycle type");
    if (which == character_oracle_kind::bounded) {
        const auto sp = build_poset({p, l}, poset_variant::bounded);
        const auto g = induced_element_map(sp, image);
        return -rational(mu_chi(sp.poset, g));
    }
    const auto sp = build_poset({p, l}, poset_variant::unbounded);
    const auto g = induced_element_map(sp, image);
    // Restrict to the fixed subposet; each fixed one-block minimum contributes
    // the multichain polynomial of its interval to the top, evaluated at -2.
    std::vector<int> keep;
    std::vector<int> position(g.size(), -1);
    for (int i = 0; i < sp.poset.size(); ++i)
        if (g[static_cast<std::size_t>(i)] == i) {
            position[static_cast<std::size_t>(i)] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    const finite_poset fixed = subposet(sp.poset, keep);
    rational total = 0;
    for (int i = 0; i < sp.poset.size(); ++i) {
        if (g[static_cast<std::size_t>(i)] != i) continue;
        const auto& elem = sp.elements[static_cast<std::size_t>(i)];
        if (elem.part_count() != 1) continue;
        if (which == character_oracle_kind::pointed_sum && elem.pointed_count() != 1) continue;
        const auto iv = interval(fixed, position[static_cast<std::size_t>(i)],
                                 position[static_cast<std::size_t>(sp.poset.top)]);
        total += multichain_polynomial(iv).evaluate(rational(-2));
    }
    return total;
}

rational character_oracle(const cycle_type& ct, character_oracle_kind which) {
    return character_oracle_for(ct, instantiate_permutation(ct), which);
}

} // namespace spp
