#include "spp/egf.hpp"

#include <sstream>

namespace spp {

egf_poly to_polynomial_series(const egf& f) {
    egf_poly g(f.order());
    for (int p = 0; p <= f.order(); ++p)
        for (int l = 0; p + l <= f.order(); ++l) g.set_coeff(p, l, polynomial(f.coeff(p, l)));
    return g;
}

namespace {

// One step of the multichain recursion: a multichain at depth k restricted to
// a block of its coarsest element is a depth-(k-1) multichain over that block
// together with the choice of one-block below it.
void advance_chain_step(egf& pm, egf& um) {
    const egf epm = exp(pm);
    const egf eum = exp(um);
    const egf next_pm = pm * (epm * eum);
    const egf next_um = epm * (eum - egf::one(pm.order()));
    pm = next_pm;
    um = next_um;
}

chain_series_family family_from(int k, const egf& pm, const egf& um) {
    chain_series_family fam{k, pm, um, egf(pm.order()), pm + um};
    fam.all = exp(fam.with_mult) - egf::one(pm.order());
    return fam;
}

} // namespace

chain_series_family chain_series(int k, int order) {
    if (k < 0) throw std::invalid_argument("chain series depth must be nonnegative");
    if (k == 0) return family_from(0, egf::var_x(order), egf::var_y(order));
    // Depth one in closed form: a one-element multichain is a single
    // semi-pointed partition, whose blocks are pointed (x e^{x+y} per block
    // ground set) or unpointed with at least one free element (e^{x+y} - e^x).
    const egf xy = egf::var_x(order) + egf::var_y(order);
    const egf exy = exp(xy);
    egf pm = egf::var_x(order) * exy;
    egf um = exy - exp(egf::var_x(order));
    for (int step = 2; step <= k; ++step) advance_chain_step(pm, um);
    return family_from(k, pm, um);
}

rational extrapolate_coefficient(chain_kind which, int p, int l, int k_eval, int depth) {
    if (p < 0 || l < 0) throw std::invalid_argument("negative coefficient index");
    if (depth < p + l + 1)
        throw std::invalid_argument(
            "extrapolation depth must exceed the polynomial degree bound p + l");
    const int order = p + l;
    std::vector<std::pair<rational, rational>> points;
    points.reserve(static_cast<std::size_t>(depth));
    egf pm = egf(order), um = egf(order);
    for (int k = 1; k <= depth; ++k) {
        if (k == 1) {
            const auto fam = chain_series(1, order);
            pm = fam.pm;
            um = fam.um;
        } else {
            advance_chain_step(pm, um);
        }
        rational value;
        switch (which) {
        case chain_kind::pm: value = pm.coeff(p, l); break;
        case chain_kind::um: value = um.coeff(p, l); break;
        case chain_kind::all: {
            value = (exp(pm + um) - egf::one(order)).coeff(p, l);
            break;
        }
        case chain_kind::with_mult: value = (pm + um).coeff(p, l); break;
        }
        const int own_index = (which == chain_kind::with_mult) ? k - 1 : k;
        points.emplace_back(rational(own_index), value);
    }
    return polynomial::interpolate(points).evaluate(rational(k_eval));
}

fixed_point_series solve_fixed_point(int order) {
    if (order < 1) throw std::invalid_argument("fixed point order must be positive");
    const egf x = egf::var_x(order), y = egf::var_y(order), one = egf::one(order);
    egf a(order);
    // Each pass fixes one more total degree: the right side's dependence on A
    // enters through a factor of x.
    for (int pass = 0; pass <= order; ++pass) a = x * inverse_one_plus(y + exp(a) - one);
    if (!(a * (y + exp(a)) - x).is_zero())
        throw std::logic_error("fixed point iteration failed to converge");
    fixed_point_series result{a, log1p(y + exp(a) - one) - a};
    return result;
}

closed_dimension closed_form_dimension(int p, int l, dimension_family which) {
    if (p < 0 || l < 0 || p + l < 1) throw std::domain_error("invalid ground set sizes");
    if (p == 0) {
        if (which != dimension_family::bounded)
            throw std::domain_error(
                "closed dimension formula requires a pointable element for this family");
        // Without pointable elements the adjoined bottom cones the poset off;
        // the formula instead returns the classical partition-lattice value.
        return {factorial(l - 1), false};
    }
    const integer base = factorial(p + l - 1) / factorial(p - 1);
    switch (which) {
    case dimension_family::pointed: return {base * ipow(p + l, p - 1), true};
    case dimension_family::bounded: return {base * ipow(p + l - 1, p - 1), true};
    case dimension_family::all_intervals:
        // Divide last: at l = 0 the quotient (p+l-1)!/p! alone is not integral.
        return {factorial(p + l - 1) * ipow(p + l, p) / factorial(p), true};
    }
    throw std::logic_error("unreachable");
}

egf lagrange_coefficients(const egf& phi) {
    if (phi.coeff(0, 0) == 0)
        throw std::domain_error("Lagrange inversion requires an invertible constant term");
    const int n = phi.order();
    egf w(n);
    auto power = egf::one(n); // phi^k
    for (int k = 1; k <= n; ++k) {
        power = power * phi;
        // EGF-normalised Lagrange formula: the (k, l) entry of the solution
        // is the (k-1, l) entry of phi^k.
        for (int l = 0; k + l <= n; ++l) w.set_coeff(k, l, power.coeff(k - 1, l));
    }
    return w;
}

nlohmann::json to_json(const egf& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int p = 0; p <= f.order(); ++p)
        for (int l = 0; p + l <= f.order(); ++l) {
            const rational c = f.coeff(p, l);
            if (c == 0) continue;
            coeffs.push_back({{"p", p},
                              {"l", l},
                              {"num", boost::multiprecision::numerator(c).str()},
                              {"den", boost::multiprecision::denominator(c).str()}});
        }
    return {{"order", f.order()}, {"coeffs", coeffs}};
}

std::string to_table_string(const egf& f) {
    std::ostringstream os;
    os << "p\\l";
    for (int l = 0; l <= f.order(); ++l) os << '\t' << l;
    os << '\n';
    for (int p = 0; p <= f.order(); ++p) {
        os << p;
        for (int l = 0; p + l <= f.order(); ++l) os << '\t' << f.coeff(p, l);
        os << '\n';
    }
    return os.str();
}

} // namespace spp
