#pragma once

#include "spp/rational.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace spp {

// One named comparison inside a verification run.  `parameters` is a JSON
// object identifying the instance (ground set sizes, variant, ...), and
// expected/actual are the printable forms of the two sides.
struct verify_check {
    std::string name;
    nlohmann::json parameters;
    std::string expected;
    std::string actual;
    bool pass = false;
    double millis = 0.0;
};

// Result of a verification suite.  `pass` is maintained as the conjunction of
// the individual check results by finalize_report / run_verify_suite.
struct verify_report {
    std::string suite;
    int max_n = 0;
    std::vector<verify_check> checks;
    double total_millis = 0.0;
    bool pass = false;
};

// Recomputes the aggregate fields from the checks.
void finalize_report(verify_report& r);

// Sets every wall-time field to zero, making the report reproducible
// byte-for-byte across runs.
void zero_timings(verify_report& r);

// Known suite names, in execution order for "all".
const std::vector<std::string>& verify_suite_names();

// Runs one suite ("core", "homology", "characters", "hopf") or "all" up to
// ground sets of total size max_n; check order is deterministic.  Throws
// std::invalid_argument for an unknown suite name.
verify_report run_verify_suite(const std::string& suite, int max_n);

nlohmann::json to_json(const verify_check& c);
nlohmann::json to_json(const verify_report& r);
verify_check check_from_json(const nlohmann::json& j);
verify_report report_from_json(const nlohmann::json& j);

} // namespace spp
