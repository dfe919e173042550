#include "spp/verify.hpp"

#include "spp/cycle_index.hpp"
#include "spp/egf.hpp"
#include "spp/hopf.hpp"
#include "spp/invariants.hpp"
#include "spp/poset.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>

namespace spp {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Runs bodies returning {expected, actual} and records the timed comparison;
// an escaping exception is itself a failing result, never a crash.
struct suite_builder {
    verify_report& rep;

    template <class F>
    void add(const std::string& name, nlohmann::json parameters, F&& body) {
        verify_check c;
        c.name = name;
        c.parameters = std::move(parameters);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const std::pair<std::string, std::string> r = body();
            c.expected = r.first;
            c.actual = r.second;
        } catch (const std::exception& e) {
            c.expected = "computation completes";
            c.actual = std::string("exception: ") + e.what();
        }
        c.pass = c.expected == c.actual;
        c.millis = elapsed_ms(t0);
        rep.checks.push_back(std::move(c));
    }
};

std::vector<poset_variant> variants_for(int p, int l) {
    std::vector<poset_variant> vs{poset_variant::unbounded, poset_variant::bounded};
    if (p >= 1) vs.push_back(poset_variant::pointed_interval);
    if (l >= 1) vs.push_back(poset_variant::unpointed_interval);
    return vs;
}

nlohmann::json ground_params(int p, int l) { return {{"p", p}, {"l", l}}; }

nlohmann::json ground_params(int p, int l, poset_variant v) {
    return {{"p", p}, {"l", l}, {"variant", variant_name(v)}};
}

std::string extremum_name(extremum_case c) {
    switch (c) {
    case extremum_case::both: return "both";
    case extremum_case::one: return "one";
    case extremum_case::none: return "none";
    }
    return "?";
}

std::string yesno(bool b, const char* yes, const char* no) { return b ? yes : no; }

// Enumeration counts, poset axioms, purity, extrema, and the exact total
// semimodularity boundary of the dual posets.
void core_suite(suite_builder& sb, int max_n) {
    const auto c1 = chain_series(1, max_n);
    for (int p = 0; p <= max_n; ++p)
        for (int l = p == 0 ? 1 : 0; p + l <= max_n; ++l)
            sb.add("partition count: depth-one series vs enumeration", ground_params(p, l),
                   [&, p, l] {
                       const rational series = c1.all.coeff(p, l);
                       const auto listed = enumerate_spp({p, l});
                       return std::pair{series.str(), integer(listed.size()).str()};
                   });

    for (int p = 0; p <= max_n; ++p)
        for (int l = p == 0 ? 1 : 0; p + l <= max_n; ++l)
            for (const poset_variant v : variants_for(p, l)) {
                std::shared_ptr<spp_poset> sp;
                sb.add("poset order axioms", ground_params(p, l, v), [&] {
                    sp = std::make_shared<spp_poset>(build_poset({p, l}, v));
                    return std::pair{std::string("valid partial order"),
                                     std::string("valid partial order")};
                });
                if (!sp) continue;
                sb.add("poset purity", ground_params(p, l, v), [&] {
                    return std::pair{std::string("pure"),
                                     yesno(is_pure(sp->poset), "pure", "not pure")};
                });
                sb.add("extrema classification", ground_params(p, l, v), [&, p, l, v] {
                    const int one_blocks = p + (l >= 1 ? 1 : 0);
                    const std::string expected =
                        v == poset_variant::unbounded && one_blocks > 1 ? "one" : "both";
                    return std::pair{expected, extremum_name(classify_extrema(sp->poset))};
                });
                sb.add("dual total semimodularity boundary", ground_params(p, l, v),
                       [&, p, l, v] {
                           const bool predicted = v == poset_variant::pointed_interval
                                                      ? (p <= 2 || l <= 1)
                                                      : (p <= 1 || l <= 1);
                           const bool found = is_totally_semimodular(dual(sp->poset));
                           return std::pair{
                               yesno(predicted, "totally semimodular", "not totally semimodular"),
                               yesno(found, "totally semimodular", "not totally semimodular")};
                       });
            }
}

// Expected total dimension of the unique nonvanishing reduced homology group,
// per variant, from the closed product formulas.
integer expected_top_dimension(int p, int l, poset_variant v) {
    switch (v) {
    case poset_variant::pointed_interval:
        // The closed form sums over the p isomorphic pointed maximal
        // intervals; one interval carries a p-th of the total.
        return closed_form_dimension(p, l, dimension_family::pointed).value / p;
    case poset_variant::unpointed_interval:
        // All maximal intervals minus the pointed ones leaves the single
        // unpointed interval; with no pointable element it is the classical
        // partition lattice.
        if (p == 0) return closed_form_dimension(p, l, dimension_family::bounded).value;
        return closed_form_dimension(p, l, dimension_family::all_intervals).value -
               closed_form_dimension(p, l, dimension_family::pointed).value;
    case poset_variant::unbounded:
        // Removing the extrema of the bounded poset and removing the top of
        // the unbounded one leave the same order complex.
        return closed_form_dimension(p, l, dimension_family::bounded).value;
    case poset_variant::bounded:
        // Without pointable elements the adjoined bottom cones the lattice
        // off; only the empty proper part at l = 1 carries (reduced) homology.
        if (p == 0) return l == 1 ? integer(1) : integer(0);
        return closed_form_dimension(p, l, dimension_family::bounded).value;
    }
    throw std::logic_error("unreachable");
}

// Homology concentration in top degree and the closed dimension formulas.
void homology_suite(suite_builder& sb, int max_n) {
    for (int p = 0; p <= max_n; ++p)
        for (int l = p == 0 ? 1 : 0; p + l <= max_n; ++l)
            for (const poset_variant v : variants_for(p, l)) {
                std::shared_ptr<std::map<int, integer>> betti;
                sb.add("homology concentrated in top degree", ground_params(p, l, v), [&, p, l,
                                                                                       v] {
                    const auto sp = build_poset({p, l}, v);
                    betti = std::make_shared<std::map<int, integer>>(homology_dims(sp.poset));
                    return std::pair{std::string("concentrated"),
                                     yesno(is_homology_concentrated_on_top(*betti),
                                           "concentrated", "homology below top degree")};
                });
                if (!betti) continue;
                sb.add("top homology dimension vs closed form", ground_params(p, l, v),
                       [&, p, l, v] {
                           integer actual = 0;
                           for (const auto& [d, b] : *betti)
                               if (b != 0) actual = b; // ascending: last nonzero is the top
                           return std::pair{expected_top_dimension(p, l, v).str(), actual.str()};
                       });
            }
}

// The three closed character formulas against the fixed-point oracles.
void characters_suite(suite_builder& sb, int max_n) {
    for (int p = 0; p <= max_n; ++p)
        for (int l = p == 0 ? 1 : 0; p + l <= max_n; ++l)
            for (const cycle_type& ct : all_cycle_types(p, l)) {
                nlohmann::json prm = ground_params(p, l);
                prm["cycle_type"] = ct.to_string();
                sb.add("pointed-intervals character formula vs oracle", prm, [&] {
                    const rational oracle =
                        character_oracle(ct, character_oracle_kind::pointed_sum);
                    if (ct.lambda_at(1) + ct.mu_at(1) == 0) {
                        // Without fixed points the closed product degenerates
                        // and the fixed-point sum is empty.
                        std::string actual = "degenerate product, oracle " + oracle.str();
                        try {
                            character_pointed_sum(ct);
                            actual = "product unexpectedly defined";
                        } catch (const std::domain_error&) {
                        }
                        return std::pair{std::string("degenerate product, oracle 0"), actual};
                    }
                    return std::pair{oracle.str(), character_pointed_sum(ct).str()};
                });
                sb.add("t-family character at t=1 vs bounded-poset oracle", prm, [&] {
                    return std::pair{character_oracle(ct, character_oracle_kind::bounded).str(),
                                     character_t_family(ct).evaluate(1).str()};
                });
                sb.add("t-family character at t=0 vs all-intervals oracle", prm, [&] {
                    return std::pair{
                        character_oracle(ct, character_oracle_kind::intervals_sum).str(),
                        character_t_family(ct).evaluate(0).str()};
                });
                sb.add("all-intervals character formula vs oracle", prm, [&] {
                    return std::pair{
                        character_oracle(ct, character_oracle_kind::intervals_sum).str(),
                        character_intervals_sum(ct).str()};
                });
            }
}

std::pair<std::string, std::string> composition_associativity(int order, int reps) {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    const auto random_pair = [&] {
        std::pair<egf, egf> s{egf::var_x(order), egf::var_y(order)};
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) {
                if (i + j < 2) continue;
                s.first.set_coeff(i, j, rational(num(rng), den(rng)));
                s.second.set_coeff(i, j, rational(num(rng), den(rng)));
            }
        return s;
    };
    const auto compose = [](const std::pair<egf, egf>& outer, const std::pair<egf, egf>& inner) {
        return std::pair<egf, egf>{substitute_bivariate(outer.first, inner.first, inner.second),
                                   substitute_bivariate(outer.second, inner.first, inner.second)};
    };
    bool ok = true;
    for (int rep = 0; rep < reps && ok; ++rep) {
        const auto a = random_pair(), b = random_pair(), c = random_pair();
        const auto ab_c = compose(compose(a, b), c);
        const auto a_bc = compose(a, compose(b, c));
        ok = ab_c.first == a_bc.first && ab_c.second == a_bc.second;
    }
    return {std::string("associative"), yesno(ok, "associative", "associativity violated")};
}

// Coproduct formulas, coassociativity, composition duality partners, the
// moebius inverse pair, and the characteristic polynomials.
void hopf_suite(suite_builder& sb, int max_n) {
    for (const hopf_generator& g : all_generators(std::max(0, max_n - 1)))
        sb.add("coproduct formula vs brute force", nlohmann::json{{"generator", g.to_string()}},
               [&, g] {
                   return std::pair{brute_coproduct(g).to_string(), coproduct(g).to_string()};
               });

    sb.add("coassociativity and counit laws", nlohmann::json{{"max_grade", max_n}}, [max_n] {
        return std::pair{std::string("hold"),
                         yesno(coassociativity_check(max_n), "hold", "violated")};
    });

    sb.add("pair composition associativity", nlohmann::json{{"order", 6}, {"samples", 2}},
           [] { return composition_associativity(6, 2); });

    sb.add("moebius pair matches the chain fixed point", nlohmann::json{{"order", 10}}, [] {
        const fixed_point_series m = mobius_series(10);
        const fixed_point_series fp = solve_fixed_point(10);
        bool ok = true;
        for (int i = 0; i <= 10 && ok; ++i)
            for (int j = 0; i + j <= 10 && ok; ++j)
                ok = m.a.coeff(i, j) == fp.a.coeff(j, i) && m.b.coeff(i, j) == fp.b.coeff(j, i);
        return std::pair{std::string("equal with variables exchanged"),
                         yesno(ok, "equal with variables exchanged", "mismatch")};
    });

    for (int p = 0; p <= max_n; ++p)
        for (int l = p == 0 ? 1 : 0; p + l <= max_n; ++l)
            for (const charpoly_variant v : {charpoly_variant::pointed, charpoly_variant::unbounded,
                                             charpoly_variant::bounded}) {
                if (v == charpoly_variant::pointed && p == 0) continue;
                nlohmann::json prm = ground_params(p, l);
                prm["family"] = charpoly_variant_name(v);
                sb.add("characteristic polynomial closed vs brute force", prm, [p, l, v] {
                    return std::pair{charpoly_closed(p, l, v).to_string(),
                                     charpoly_brute({p, l}, v).to_string()};
                });
            }

    sb.add("characteristic polynomial generating series",
           nlohmann::json{{"order", max_n}, {"max_total", max_n}}, [max_n] {
               const charpoly_series_report r = charpoly_series_check(max_n, max_n);
               std::string actual = r.ok() ? "all coefficients match"
                                           : "mismatch: " + r.mismatches.front();
               return std::pair{std::string("all coefficients match"), actual};
           });
}

} // namespace

void finalize_report(verify_report& r) {
    r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const verify_check& c) { return c.pass; });
    r.total_millis = 0.0;
    for (const verify_check& c : r.checks) r.total_millis += c.millis;
}

void zero_timings(verify_report& r) {
    for (verify_check& c : r.checks) c.millis = 0.0;
    r.total_millis = 0.0;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"core", "homology", "characters", "hopf"};
    return names;
}

verify_report run_verify_suite(const std::string& suite, int max_n) {
    if (max_n < 1) throw std::invalid_argument("verification requires max_n >= 1");
    verify_report rep;
    rep.suite = suite;
    rep.max_n = max_n;
    suite_builder sb{rep};
    if (suite == "core") {
        core_suite(sb, max_n);
    } else if (suite == "homology") {
        homology_suite(sb, max_n);
    } else if (suite == "characters") {
        characters_suite(sb, max_n);
    } else if (suite == "hopf") {
        hopf_suite(sb, max_n);
    } else if (suite == "all") {
        core_suite(sb, max_n);
        homology_suite(sb, max_n);
        characters_suite(sb, max_n);
        hopf_suite(sb, max_n);
    } else {
        throw std::invalid_argument("unknown verification suite: " + suite);
    }
    finalize_report(rep);
    return rep;
}

nlohmann::json to_json(const verify_check& c) {
    return {{"name", c.name},   {"parameters", c.parameters}, {"expected", c.expected},
            {"actual", c.actual}, {"pass", c.pass},           {"millis", c.millis}};
}

nlohmann::json to_json(const verify_report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const verify_check& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite},
            {"max_n", r.max_n},
            {"checks", std::move(checks)},
            {"total_millis", r.total_millis},
            {"pass", r.pass}};
}

verify_check check_from_json(const nlohmann::json& j) {
    verify_check c;
    c.name = j.at("name").get<std::string>();
    c.parameters = j.at("parameters");
    c.expected = j.at("expected").get<std::string>();
    c.actual = j.at("actual").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    c.millis = j.at("millis").get<double>();
    return c;
}

verify_report report_from_json(const nlohmann::json& j) {
    verify_report r;
    r.suite = j.at("suite").get<std::string>();
    r.max_n = j.at("max_n").get<int>();
    for (const nlohmann::json& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    r.total_millis = j.at("total_millis").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

} // namespace spp
