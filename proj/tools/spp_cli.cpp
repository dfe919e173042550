#include "spp/cycle_index.hpp"
#include "spp/egf.hpp"
#include "spp/hopf.hpp"
#include "spp/invariants.hpp"
#include "spp/partition.hpp"
#include "spp/poset.hpp"
#include "spp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace spp;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage_error = 2;

// Safety caps against factorial blowup.  SPP_MAX_N or the global --cap flag
// override every cap at once (a warning is printed when a default is raised).
struct caps_config {
    int posets = 6;   // ground sets built or enumerated explicitly, p + l
    int homology = 5; // homology computations, p + l
    int hopf = 5;     // hopf generators and their brute-force posets, k + l
    int table = 9;    // series route of the table command, p + l
};

caps_config effective_caps(int cap_flag) {
    caps_config caps;
    int override_value = 0;
    std::string source;
    if (cap_flag > 0) {
        override_value = cap_flag;
        source = "--cap";
    } else if (const char* env = std::getenv("SPP_MAX_N")) {
        try {
            override_value = std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SPP_MAX_N must be a positive integer");
        }
        if (override_value < 1) throw std::invalid_argument("SPP_MAX_N must be a positive integer");
        source = "SPP_MAX_N";
    }
    if (override_value > 0) {
        const caps_config defaults;
        if (override_value > defaults.posets || override_value > defaults.homology ||
            override_value > defaults.hopf || override_value > defaults.table)
            std::cerr << "warning: " << source << "=" << override_value
                      << " raises the default caps; instance sizes grow factorially\n";
        caps.posets = caps.homology = caps.hopf = caps.table = override_value;
    }
    return caps;
}

bool check_cap(int n, int cap, const std::string& what) {
    if (n <= cap) return true;
    std::cerr << "error: " << what << " " << n << " exceeds the cap " << cap
              << " (override with --cap or SPP_MAX_N)\n";
    return false;
}

std::string extremum_name(extremum_case c) {
    switch (c) {
    case extremum_case::both: return "both";
    case extremum_case::one: return "one";
    case extremum_case::none: return "none";
    }
    return "?";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Multiplicity list "1,0,2" -> {length 1: 1, length 3: 2}.
std::map<int, int> parse_multiplicities(const std::string& csv, const std::string& what) {
    std::map<int, int> m;
    if (csv.empty()) return m;
    std::stringstream ss(csv);
    std::string item;
    int length = 1;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument(what + ": empty entry in multiplicity list");
        const std::string tok = item.substr(a, b - a + 1);
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw std::invalid_argument(what + ": entries must be nonnegative integers");
        const int v = std::stoi(tok);
        if (v > 0) m[length] = v;
        ++length;
    }
    return m;
}

// --------------------------------------------------------------- enumerate

int cmd_enumerate(int p, int l, const std::string& format, const caps_config& caps) {
    if (!check_cap(p + l, caps.posets, "ground set size")) return exit_usage_error;
    const auto list = enumerate_spp({p, l});
    if (format == "json") {
        json j{{"p", p}, {"l", l}, {"count", list.size()}};
        json arr = json::array();
        for (const auto& sp : list) arr.push_back(to_json(sp));
        j["partitions"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "index,partition,parts,pointed_parts\n";
        for (std::size_t i = 0; i < list.size(); ++i)
            std::cout << i << ",\"" << list[i].to_string() << "\"," << list[i].part_count() << ','
                      << list[i].pointed_count() << '\n';
    } else {
        for (const auto& sp : list) std::cout << sp.to_string() << '\n';
        std::cout << "total: " << list.size() << '\n';
    }
    return exit_ok;
}

// ------------------------------------------------------------------- poset

int cmd_poset(int p, int l, const std::string& variant, const std::string& format,
              const caps_config& caps) {
    if (!check_cap(p + l, caps.posets, "ground set size")) return exit_usage_error;
    const auto sp = build_poset({p, l}, variant_from_name(variant));
    const finite_poset& P = sp.poset;
    if (format == "dot") {
        std::cout << to_dot(P);
        return exit_ok;
    }
    if (format == "json") {
        std::cout << to_json(sp).dump(2) << '\n';
        return exit_ok;
    }
    std::size_t covers = 0;
    for (const auto& ups : P.upper_covers) covers += ups.size();
    std::cout << "variant: " << variant_name(sp.var) << '\n'
              << "ground set: " << p << " pointable + " << l << " free\n"
              << "elements: " << P.n << '\n'
              << "cover relations: " << covers << '\n'
              << "height: " << P.max_rank() << '\n'
              << "bottom: " << (P.bottom >= 0 ? P.labels[static_cast<std::size_t>(P.bottom)] : "(none)")
              << '\n'
              << "top: " << (P.top >= 0 ? P.labels[static_cast<std::size_t>(P.top)] : "(none)") << '\n';
    for (int a = 0; a < P.n; ++a)
        for (const int b : P.upper_covers[static_cast<std::size_t>(a)])
            std::cout << P.labels[static_cast<std::size_t>(a)] << " < "
                      << P.labels[static_cast<std::size_t>(b)] << '\n';
    return exit_ok;
}

// -------------------------------------------------------------- invariants

int cmd_invariants(int p, int l, const std::string& variant, const std::string& format,
                   const caps_config& caps) {
    if (!check_cap(p + l, caps.posets, "ground set size")) return exit_usage_error;
    const auto sp = build_poset({p, l}, variant_from_name(variant));
    const finite_poset& P = sp.poset;

    json j;
    j["p"] = p;
    j["l"] = l;
    j["variant"] = variant_name(sp.var);
    j["elements"] = P.n;
    j["extrema"] = extremum_name(classify_extrema(P));
    j["height"] = P.max_rank();
    j["pure"] = is_pure(P);
    j["proper_complex_dim"] = proper_complex_dim(P);
    const auto s = strict_chain_counts(proper_part(P));
    json chain_counts = json::array();
    for (const auto& c : s) chain_counts.push_back(c.str());
    j["proper_strict_chain_counts"] = std::move(chain_counts);
    j["zeta_polynomial"] = zeta_polynomial(P).to_string("k");
    j["mu_chi"] = mu_chi(P).str();
    j["moebius_number"] =
        P.bottom >= 0 && P.top >= 0 ? json(mobius_number(P).str()) : json(nullptr);
    j["dual_totally_semimodular"] = is_totally_semimodular(dual(P));
    if (p + l <= caps.homology) {
        const auto betti = homology_dims(P);
        json hs = json::array();
        for (const auto& [d, b] : betti) hs.push_back(json{{"degree", d}, {"betti", b.str()}});
        j["homology"] = std::move(hs);
        j["cohen_macaulay"] = is_pure(P) && is_homology_concentrated_on_top(betti);
    } else {
        j["homology"] = nullptr;
        j["cohen_macaulay"] = nullptr;
    }

    if (format == "json") {
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    std::cout << "variant: " << j["variant"].get<std::string>() << " (p=" << p << ", l=" << l
              << ")\n"
              << "elements: " << P.n << '\n'
              << "extrema: " << j["extrema"].get<std::string>() << '\n'
              << "height: " << P.max_rank() << '\n'
              << "pure: " << (j["pure"].get<bool>() ? "yes" : "no") << '\n'
              << "proper complex dimension: " << proper_complex_dim(P) << '\n';
    std::cout << "strict chain counts of the proper part:";
    for (const auto& c : s) std::cout << ' ' << c;
    std::cout << '\n';
    std::cout << "zeta polynomial: " << j["zeta_polynomial"].get<std::string>() << '\n'
              << "mu-chi (reduced Euler characteristic): " << j["mu_chi"].get<std::string>()
              << '\n';
    std::cout << "moebius number: "
              << (j["moebius_number"].is_null() ? "(needs both extrema)"
                                                : j["moebius_number"].get<std::string>())
              << '\n';
    std::cout << "dual totally semimodular: "
              << (j["dual_totally_semimodular"].get<bool>() ? "yes" : "no") << '\n';
    if (j["homology"].is_null()) {
        std::cout << "homology: skipped (p+l exceeds the homology cap " << caps.homology
                  << "; override with --cap or SPP_MAX_N)\n";
    } else {
        std::cout << "reduced homology of the proper part:";
        for (const auto& h : j["homology"])
            std::cout << " dim " << h["degree"].get<int>() << ": "
                      << h["betti"].get<std::string>() << ";";
        std::cout << '\n'
                  << "Cohen-Macaulay: " << (j["cohen_macaulay"].get<bool>() ? "yes" : "no")
                  << '\n';
    }
    return exit_ok;
}

// ------------------------------------------------------------------- table

int cmd_table(int max_n, const std::string& format, const caps_config& caps) {
    if (max_n < 1) {
        std::cerr << "error: --max-n must be at least 1\n";
        return exit_usage_error;
    }
    if (!check_cap(max_n, caps.table, "table size")) return exit_usage_error;
    const auto c1 = chain_series(1, max_n);
    const int enum_limit = std::min(max_n, caps.posets);

    struct entry {
        int p, l;
        integer count;
        std::optional<integer> enumerated;
    };
    std::vector<entry> entries;
    bool all_match = true;
    for (int p = 0; p <= max_n; ++p)
        for (int l = 0; p + l <= max_n; ++l) {
            entry e{p, l, numerator(c1.all.coeff(p, l)), std::nullopt};
            if (p + l >= 1 && p + l <= enum_limit) {
                e.enumerated = integer(enumerate_spp({p, l}).size());
                if (*e.enumerated != e.count) all_match = false;
            }
            entries.push_back(std::move(e));
        }

    if (format == "json") {
        json arr = json::array();
        for (const auto& e : entries) {
            json je{{"p", e.p}, {"l", e.l}, {"count", e.count.str()}};
            je["enumerated"] = e.enumerated ? json(e.enumerated->str()) : json(nullptr);
            je["match"] = e.enumerated ? json(*e.enumerated == e.count) : json(nullptr);
            arr.push_back(std::move(je));
        }
        json j{{"max_n", max_n}, {"entries", std::move(arr)}, {"pass", all_match}};
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "p,l,count,enumerated,match\n";
        for (const auto& e : entries) {
            std::cout << e.p << ',' << e.l << ',' << e.count << ',';
            if (e.enumerated)
                std::cout << *e.enumerated << ',' << (*e.enumerated == e.count ? "yes" : "NO");
            else
                std::cout << ',';
            std::cout << '\n';
        }
    } else {
        std::cout << "p\\l";
        for (int l = 0; l <= max_n; ++l) std::cout << '\t' << l;
        std::cout << '\n';
        for (int p = 0; p <= max_n; ++p) {
            std::cout << p;
            for (int l = 0; p + l <= max_n; ++l)
                std::cout << '\t' << entries[static_cast<std::size_t>(p * (2 * max_n + 3 - p) / 2 + l)].count;
            std::cout << '\n';
        }
        if (all_match)
            std::cout << "enumeration agrees with the series for 1 <= p+l <= " << enum_limit
                      << '\n';
        for (const auto& e : entries)
            if (e.enumerated && *e.enumerated != e.count)
                std::cout << "MISMATCH at (p=" << e.p << ", l=" << e.l << "): series " << e.count
                          << ", enumeration " << *e.enumerated << '\n';
    }
    return all_match ? exit_ok : exit_verification_failure;
}

// ------------------------------------------------------------------ series

int cmd_series(const std::string& which, int k, int order, const std::string& format) {
    if (order < 0) {
        std::cerr << "error: --order must be nonnegative\n";
        return exit_usage_error;
    }
    if (which == "ck") {
        if (k < 0) {
            std::cerr << "error: --k must be nonnegative for the depth-k family (use cminus1 for "
                         "the depth -1 extrapolation)\n";
            return exit_usage_error;
        }
        const auto fam = chain_series(k, order);
        if (format == "json") {
            json j{{"which", "ck"},        {"k", k},
                   {"order", order},       {"pm", to_json(fam.pm)},
                   {"um", to_json(fam.um)}, {"all", to_json(fam.all)},
                   {"with_mult", to_json(fam.with_mult)}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "depth-" << k << " multichain family, order " << order << "\n\n"
                      << "pm (coarsest element a pointed one-block):\n" << to_table_string(fam.pm)
                      << "\num (coarsest element the unpointed one-block):\n"
                      << to_table_string(fam.um) << "\nall (every multichain):\n"
                      << to_table_string(fam.all) << "\nwith_mult = pm + um (depth " << k - 1
                      << " index):\n"
                      << to_table_string(fam.with_mult);
        }
        return exit_ok;
    }
    // which == "cminus1"
    const auto fp = solve_fixed_point(order);
    if (format == "json") {
        json j{{"which", "cminus1"}, {"order", order}, {"a", to_json(fp.a)}, {"b", to_json(fp.b)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "depth -1 extrapolation (fixed point of the chain recursion), order " << order
                  << "\n\nA (pointed-root family; coefficients are signed homology dimension "
                     "sums):\n"
                  << to_table_string(fp.a)
                  << "\nB (unpointed-root family; coefficients are moebius numbers):\n"
                  << to_table_string(fp.b);
    }
    return exit_ok;
}

// --------------------------------------------------------------- character

int cmd_character(const std::string& lambda_csv, const std::string& mu_csv,
                  const std::string& variant, const std::string& format,
                  const caps_config& caps) {
    cycle_type ct;
    ct.lambda = parse_multiplicities(lambda_csv, "--lambda");
    ct.mu = parse_multiplicities(mu_csv, "--mu");
    if (ct.total_size() < 1) {
        std::cerr << "error: the cycle type must move at least one element\n";
        return exit_usage_error;
    }
    if (!check_cap(ct.total_size(), caps.posets, "cycle type total size")) return exit_usage_error;

    struct row {
        std::string formula;
        rational closed;
        rational oracle;
    };
    std::vector<row> rows;
    const polynomial tf = character_t_family(ct);
    if (variant == "pointed" || variant == "all")
        rows.push_back({"pointed intervals closed sum", character_pointed_sum(ct),
                        character_oracle(ct, character_oracle_kind::pointed_sum)});
    if (variant == "bounded" || variant == "all")
        rows.push_back({"t-family at t=1 (bounded poset)", tf.evaluate(1),
                        character_oracle(ct, character_oracle_kind::bounded)});
    if (variant == "intervals" || variant == "all") {
        rows.push_back({"t-family at t=0 (all maximal intervals)", tf.evaluate(0),
                        character_oracle(ct, character_oracle_kind::intervals_sum)});
        rows.push_back({"all-intervals closed sum", character_intervals_sum(ct),
                        character_oracle(ct, character_oracle_kind::intervals_sum)});
    }
    bool all_match = true;
    for (const auto& r : rows) all_match = all_match && r.closed == r.oracle;

    if (format == "json") {
        json checks = json::array();
        for (const auto& r : rows)
            checks.push_back(json{{"formula", r.formula},
                                  {"closed", r.closed.str()},
                                  {"oracle", r.oracle.str()},
                                  {"match", r.closed == r.oracle}});
        json j{{"cycle_type", ct.to_string()},
               {"total_size", ct.total_size()},
               {"t_family", tf.to_string()},
               {"checks", std::move(checks)},
               {"match", all_match}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "cycle type: " << ct.to_string() << " (total size " << ct.total_size()
                  << ")\n"
                  << "t-family polynomial: " << tf.to_string() << '\n';
        for (const auto& r : rows)
            std::cout << r.formula << ": closed " << r.closed << ", oracle " << r.oracle << " -> "
                      << (r.closed == r.oracle ? "match" : "MISMATCH") << '\n';
    }
    return all_match ? exit_ok : exit_verification_failure;
}

// ---------------------------------------------------------------- charpoly

int cmd_charpoly(int p, int l, const std::string& variant, const std::string& format,
                 const caps_config& caps) {
    if (p + l < 1) {
        std::cerr << "error: the ground set must be nonempty\n";
        return exit_usage_error;
    }
    if (!check_cap(p + l, caps.posets, "ground set size")) return exit_usage_error;
    const charpoly_variant v = charpoly_variant_from_name(variant);
    const polynomial brute = charpoly_brute({p, l}, v);
    std::optional<polynomial> closed;
    try {
        closed = charpoly_closed(p, l, v);
    } catch (const std::invalid_argument&) {
        // No product formula for this family; the brute-force value stands alone.
    }
    const bool match = !closed || *closed == brute;

    if (format == "json") {
        json j{{"p", p},
               {"l", l},
               {"variant", variant},
               {"brute", brute.to_string()},
               {"closed", closed ? json(closed->to_string()) : json(nullptr)},
               {"match", closed ? json(match) : json(nullptr)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "variant: " << variant << " (p=" << p << ", l=" << l << ")\n"
                  << "brute force: " << brute.to_string() << '\n';
        if (closed)
            std::cout << "closed form: " << closed->to_string() << '\n'
                      << (match ? "match" : "MISMATCH") << '\n';
        else
            std::cout << "closed form: (none for this family)\n";
    }
    return match ? exit_ok : exit_verification_failure;
}

// ------------------------------------------------------------------ verify

std::string render_params(const json& prm) {
    std::string s;
    for (auto it = prm.begin(); it != prm.end(); ++it) {
        if (!s.empty()) s += ", ";
        s += it.key();
        s += '=';
        s += it->is_string() ? it->get<std::string>() : it->dump();
    }
    return s;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& report_path,
               bool no_timestamp, const std::string& format, const caps_config& caps) {
    int cap = caps.posets;
    if (suite == "homology") cap = caps.homology;
    if (suite == "hopf") cap = caps.hopf;
    if (suite == "all") cap = std::min({caps.posets, caps.homology, caps.hopf});
    if (max_n < 1) {
        std::cerr << "error: --max-n must be at least 1\n";
        return exit_usage_error;
    }
    if (!check_cap(max_n, cap, "--max-n for suite '" + suite + "'")) return exit_usage_error;

    verify_report rep = run_verify_suite(suite, max_n);
    if (no_timestamp) zero_timings(rep);
    json j = to_json(rep);
    if (!no_timestamp) j["generated_at"] = utc_timestamp();

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << '\n';
            return exit_usage_error;
        }
        out << j.dump(2) << '\n';
    }

    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        int passed = 0;
        for (const verify_check& c : rep.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            const std::string prm = render_params(c.parameters);
            if (!prm.empty()) std::cout << " (" << prm << ")";
            if (!c.pass) std::cout << ": expected " << c.expected << ", got " << c.actual;
            std::cout << '\n';
            if (c.pass) ++passed;
        }
        std::cout << "suite '" << rep.suite << "' (max n " << rep.max_n << "): " << passed << '/'
                  << rep.checks.size() << " checks passed";
        if (!no_timestamp) std::cout << " in " << rep.total_millis << " ms";
        std::cout << '\n';
    }
    return rep.pass ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of semi-pointed partition posets: enumeration, poset "
                 "export, invariants, multichain series, characters, characteristic polynomials "
                 "and self-verification.",
                 "spp"};
    app.require_subcommand(1);
    int cap_flag = 0;
    app.add_option("--cap", cap_flag,
                   "override all safety caps (default: posets 6, homology 5, hopf 5, table 9); "
                   "the SPP_MAX_N environment variable does the same")
        ->check(CLI::PositiveNumber);

    // enumerate
    auto* c_enum = app.add_subcommand("enumerate", "list the semi-pointed partitions of a ground set");
    int ep = 0, el = 0;
    std::string e_fmt = "text";
    c_enum->add_option("--p", ep, "pointable elements")->required()->check(CLI::NonNegativeNumber);
    c_enum->add_option("--l", el, "free (non-pointable) elements")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_enum->add_option("--format", e_fmt, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // poset
    auto* c_poset = app.add_subcommand("poset", "build a partition poset and export it");
    int pp = 0, pl = 0;
    std::string p_variant = "unbounded", p_fmt = "text";
    c_poset->add_option("--p", pp, "pointable elements")->required()->check(CLI::NonNegativeNumber);
    c_poset->add_option("--l", pl, "free elements")->required()->check(CLI::NonNegativeNumber);
    c_poset->add_option("--variant", p_variant, "poset variant")
        ->check(CLI::IsMember({"unbounded", "bounded", "pointed", "unpointed"}));
    c_poset->add_option("--format", p_fmt, "output format")
        ->check(CLI::IsMember({"text", "dot", "json"}));

    // invariants
    auto* c_inv = app.add_subcommand("invariants",
                                     "moebius number, zeta polynomial, homology and order "
                                     "properties of one poset");
    int ip = 0, il = 0;
    std::string i_variant = "unbounded", i_fmt = "text";
    c_inv->add_option("--p", ip, "pointable elements")->required()->check(CLI::NonNegativeNumber);
    c_inv->add_option("--l", il, "free elements")->required()->check(CLI::NonNegativeNumber);
    c_inv->add_option("--variant", i_variant, "poset variant")
        ->check(CLI::IsMember({"unbounded", "bounded", "pointed", "unpointed"}));
    c_inv->add_option("--format", i_fmt, "output format")->check(CLI::IsMember({"text", "json"}));

    // table
    auto* c_table = app.add_subcommand(
        "table", "partition counts by (p, l): depth-one series cross-checked against enumeration");
    int t_max_n = 7;
    std::string t_fmt = "text";
    c_table->add_option("--max-n", t_max_n, "largest total size p+l (series cap 9)");
    c_table->add_option("--format", t_fmt, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // series
    auto* c_series = app.add_subcommand("series", "multichain generating series");
    std::string s_which, s_fmt = "text";
    int s_k = 1, s_order = 8;
    c_series->add_option("--which", s_which,
                         "ck: the depth-k family; cminus1: the depth -1 fixed point")
        ->required()
        ->check(CLI::IsMember({"ck", "cminus1"}));
    c_series->add_option("--k", s_k, "recursion depth for --which ck");
    c_series->add_option("--order", s_order, "truncation order");
    c_series->add_option("--format", s_fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // character
    auto* c_char = app.add_subcommand(
        "character", "symmetric-group character values: closed formulas vs fixed-point oracles");
    std::string ch_lambda, ch_mu, ch_variant = "all", ch_fmt = "text";
    c_char->add_option("--lambda", ch_lambda,
                       "cycle multiplicities on the pointable sort, e.g. 1,0,1 for one 1-cycle "
                       "and one 3-cycle");
    c_char->add_option("--mu", ch_mu, "cycle multiplicities on the free sort");
    c_char->add_option("--variant", ch_variant, "which formula to evaluate")
        ->check(CLI::IsMember({"pointed", "bounded", "intervals", "all"}));
    c_char->add_option("--format", ch_fmt, "output format")->check(CLI::IsMember({"text", "json"}));

    // charpoly
    auto* c_cp = app.add_subcommand("charpoly",
                                    "characteristic polynomial: closed product formula vs brute "
                                    "force");
    int cp_p = 0, cp_l = 0;
    std::string cp_variant = "pointed", cp_fmt = "text";
    c_cp->add_option("--p", cp_p, "pointable elements")->required()->check(CLI::NonNegativeNumber);
    c_cp->add_option("--l", cp_l, "free elements")->required()->check(CLI::NonNegativeNumber);
    c_cp->add_option("--variant", cp_variant, "interval family")
        ->check(CLI::IsMember({"pointed", "unpointed", "unbounded", "bounded"}));
    c_cp->add_option("--format", cp_fmt, "output format")->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a verification suite and emit a report");
    std::string v_suite, v_report, v_fmt = "text";
    int v_max_n = 5;
    bool v_no_timestamp = false;
    c_verify->add_option("--suite", v_suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"core", "homology", "characters", "hopf", "all"}));
    c_verify->add_option("--max-n", v_max_n, "largest total ground set size");
    c_verify->add_option("--report", v_report, "write the JSON report to this path");
    c_verify->add_flag("--no-timestamp", v_no_timestamp,
                       "omit the timestamp and zero all wall times, making the output "
                       "byte-identical across runs");
    c_verify->add_option("--format", v_fmt, "stdout format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        const caps_config caps = effective_caps(cap_flag);
        if (c_enum->parsed()) return cmd_enumerate(ep, el, e_fmt, caps);
        if (c_poset->parsed()) return cmd_poset(pp, pl, p_variant, p_fmt, caps);
        if (c_inv->parsed()) return cmd_invariants(ip, il, i_variant, i_fmt, caps);
        if (c_table->parsed()) return cmd_table(t_max_n, t_fmt, caps);
        if (c_series->parsed()) return cmd_series(s_which, s_k, s_order, s_fmt);
        if (c_char->parsed()) return cmd_character(ch_lambda, ch_mu, ch_variant, ch_fmt, caps);
        if (c_cp->parsed()) return cmd_charpoly(cp_p, cp_l, cp_variant, cp_fmt, caps);
        if (c_verify->parsed())
            return cmd_verify(v_suite, v_max_n, v_report, v_no_timestamp, v_fmt, caps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    return exit_usage_error;
}
