#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spp/verify.hpp"

#include <stdexcept>

using namespace spp;

TEST_CASE("suites pass on small instances and order deterministically") {
    verify_report a = run_verify_suite("core", 3);
    CHECK(a.pass);
    CHECK(!a.checks.empty());
    bool all = true;
    for (const auto& c : a.checks) all = all && c.pass;
    CHECK(a.pass == all);

    // Identical runs produce identical reports once wall times are zeroed.
    verify_report b = run_verify_suite("core", 3);
    zero_timings(a);
    zero_timings(b);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
}

TEST_CASE("every named suite runs green at scale 2") {
    for (const std::string& name : verify_suite_names()) {
        CAPTURE(name);
        const verify_report r = run_verify_suite(name, 2);
        CHECK(r.pass);
        CHECK(!r.checks.empty());
    }
}

TEST_CASE("the all suite concatenates the component suites in order") {
    const verify_report all = run_verify_suite("all", 2);
    std::size_t total = 0;
    std::vector<std::string> first_names;
    for (const std::string& name : verify_suite_names()) {
        const verify_report r = run_verify_suite(name, 2);
        first_names.push_back(r.checks.front().name);
        total += r.checks.size();
    }
    CHECK(all.checks.size() == total);
    CHECK(all.pass);
    // The component suites appear in declaration order.
    CHECK(all.checks.front().name == first_names.front());
}

TEST_CASE("report serialization round-trips") {
    verify_report r = run_verify_suite("hopf", 2);
    const nlohmann::json j = to_json(r);
    const verify_report back = report_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.pass == r.pass);
    CHECK(back.suite == r.suite);
    CHECK(back.max_n == r.max_n);
    CHECK(back.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(back.checks[i].name == r.checks[i].name);
        CHECK(back.checks[i].expected == r.checks[i].expected);
        CHECK(back.checks[i].millis == r.checks[i].millis);
    }
    // Text round trip is byte-stable as well.
    CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}

TEST_CASE("overall pass is the conjunction of the check results") {
    verify_report r = run_verify_suite("characters", 2);
    CHECK(r.pass);
    verify_check bad;
    bad.name = "forced failure";
    bad.parameters = nlohmann::json::object();
    bad.expected = "1";
    bad.actual = "2";
    bad.pass = false;
    r.checks.push_back(bad);
    finalize_report(r);
    CHECK(!r.pass);
    r.checks.pop_back();
    finalize_report(r);
    CHECK(r.pass);
}

TEST_CASE("unknown suites and invalid scales are rejected") {
    CHECK_THROWS_AS(run_verify_suite("bogus", 3), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_suite("core", 0), std::invalid_argument);
}
