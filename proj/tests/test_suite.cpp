#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "freenij/error.hpp"
#include "freenij/suite.hpp"

using namespace freenij;

namespace {

const AxiomOutcome &outcome_named(const SuiteReport &report, const std::string &name)
{
    for (const AxiomOutcome &a : report.axioms) {
        if (a.name == name) return a;
    }
    FAIL("axiom not in report: ", name);
    static AxiomOutcome dummy;
    return dummy;
}

bool contains(const std::string &haystack, const std::string &needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("the registry is well formed")
{
    const auto names = axiom_names();
    CHECK(names.size() == 31);
    CHECK(names.front() == "base-product-laws");
    CHECK(names.back() == "parse-render-roundtrip");
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    for (const char *key : {"nijenhuis-equation", "cocycle", "left-counicity",
                            "right-counicity", "antipode-right-law", "binomial-hopf",
                            "stuffle-vs-nijenhuis", "coproduct-filtration"}) {
        CHECK(std::find(names.begin(), names.end(), key) != names.end());
    }
}

TEST_CASE("the full suite passes on the trivial base")
{
    SuiteConfig cfg;
    cfg.base = "trivial";
    cfg.max_u = 4;
    cfg.trials = 30;
    cfg.seed = 7;
    const SuiteReport report = run_axiom_suite(cfg);

    CHECK(report.verdict_pass());
    CHECK(report.axioms.size() == axiom_names().size());
    for (const AxiomOutcome &a : report.axioms) CHECK(a.satisfied());

    const AxiomOutcome &rc = outcome_named(report, "right-counicity");
    CHECK(rc.expected_failure);
    CHECK(rc.passes < rc.instances);
    REQUIRE(rc.counterexample.has_value());
    CHECK(contains(*rc.counterexample, "1|1")); // the first failing word is u_1

    // no trivial-base axiom is skipped except the admissibility-independent none
    for (const AxiomOutcome &a : report.axioms) CHECK_FALSE(a.skipped.has_value());
}

TEST_CASE("right counicity fails deterministically on the binomial base")
{
    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.axioms = {"right-counicity"};
    const SuiteReport report = run_axiom_suite(cfg);

    REQUIRE(report.axioms.size() == 1);
    const AxiomOutcome &rc = report.axioms.front();
    CHECK(rc.expected_failure);
    CHECK(rc.instances == 39); // 3 letters, lengths 1..3
    CHECK(rc.passes == 3);     // exactly the length-1 words collapse correctly
    CHECK(rc.satisfied());
    REQUIRE(rc.counterexample.has_value());
    CHECK(*rc.counterexample == "w = x^2|x^2; (id (x) eps_T)Delta_T(w) = x^4");
    CHECK(report.verdict_pass());
    CHECK(report.config.axioms == std::vector<std::string>{"right-counicity"});
}

TEST_CASE("the antipode law runs and holds on the one-sided base")
{
    SuiteConfig cfg;
    cfg.base = "onesided";
    cfg.axioms = {"antipode-right-law"};
    const SuiteReport report = run_axiom_suite(cfg);

    const AxiomOutcome &a = report.axioms.front();
    CHECK_FALSE(a.skipped.has_value());
    CHECK_FALSE(a.expected_failure);
    CHECK(a.instances == 39);
    CHECK(a.passes == a.instances);
    CHECK(report.verdict_pass());
}

TEST_CASE("inadmissible-base axioms are skipped by default")
{
    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.max_len = 2;
    cfg.trials = 20;
    cfg.seed = 3;
    const SuiteReport report = run_axiom_suite(cfg);

    CHECK(report.verdict_pass());
    for (const char *name : {"antipode-right-law", "reduced-coproduct-degree-drop"}) {
        const AxiomOutcome &a = outcome_named(report, name);
        REQUIRE(a.skipped.has_value());
        CHECK(contains(*a.skipped, "not admissible"));
        CHECK(a.satisfied());
    }
    const AxiomOutcome &filt = outcome_named(report, "coproduct-filtration");
    REQUIRE(filt.skipped.has_value());
    CHECK(contains(*filt.skipped, "filtration"));

    const AxiomOutcome &uwords = outcome_named(report, "u-closed-form");
    REQUIRE(uwords.skipped.has_value());
    CHECK(contains(*uwords.skipped, "trivial"));
}

TEST_CASE("allow-inadmissible unlocks the antipode but not the filtration claim")
{
    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.max_len = 2;
    cfg.allow_inadmissible = true;
    cfg.axioms = {"antipode-right-law", "reduced-coproduct-degree-drop",
                  "coproduct-filtration"};
    const SuiteReport report = run_axiom_suite(cfg);

    const AxiomOutcome &law = outcome_named(report, "antipode-right-law");
    CHECK_FALSE(law.skipped.has_value());
    CHECK(law.instances == 12);
    CHECK(law.passes == 12);

    const AxiomOutcome &drop = outcome_named(report, "reduced-coproduct-degree-drop");
    CHECK_FALSE(drop.skipped.has_value());
    CHECK(drop.passes == drop.instances);

    CHECK(outcome_named(report, "coproduct-filtration").skipped.has_value());
    CHECK(report.verdict_pass());
}

TEST_CASE("reports are deterministic across runs and modes")
{
    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.max_len = 2;
    cfg.trials = 25;
    cfg.seed = 42;
    cfg.axioms = {"right-counicity", "dr-associativity", "parse-render-roundtrip"};

    const SuiteReport r1 = run_axiom_suite(cfg);
    const SuiteReport r2 = run_axiom_suite(cfg);
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.to_text() == r2.to_text());

    const ExecMode saved = exec_mode();
    set_exec_mode(ExecMode::serial);
    const SuiteReport serial = run_axiom_suite(cfg);
    set_exec_mode(ExecMode::parallel);
    const SuiteReport parallel = run_axiom_suite(cfg);
    set_exec_mode(saved);
    CHECK(serial.to_json() == parallel.to_json());
    CHECK(serial.to_text() == parallel.to_text());
}

TEST_CASE("selections are echoed back in registry order")
{
    SuiteConfig cfg;
    cfg.base = "trivial";
    cfg.axioms = {"right-counicity", "nijenhuis-equation"};
    const SuiteReport report = run_axiom_suite(cfg);
    CHECK(report.config.axioms ==
          std::vector<std::string>{"nijenhuis-equation", "right-counicity"});
    REQUIRE(report.axioms.size() == 2);
    CHECK(report.axioms[0].name == "nijenhuis-equation");
    CHECK(report.axioms[1].name == "right-counicity");
}

TEST_CASE("unknown names are rejected")
{
    SuiteConfig cfg;
    cfg.axioms = {"no-such-axiom"};
    CHECK_THROWS_AS((void)run_axiom_suite(cfg), Error);

    SuiteConfig bad_base;
    bad_base.base = "septonion";
    CHECK_THROWS_AS((void)run_axiom_suite(bad_base), Error);
}

TEST_CASE("the base coproduct one-sidedness registers as expected failure")
{
    SuiteConfig cfg;
    cfg.base = "onesided";
    cfg.axioms = {"base-right-counicity"};
    const SuiteReport report = run_axiom_suite(cfg);
    const AxiomOutcome &a = report.axioms.front();
    CHECK(a.expected_failure);
    CHECK(a.passes < a.instances);
    REQUIRE(a.counterexample.has_value());
    CHECK(*a.counterexample == "a = x; (id (x) eps_A)Delta_A(a) = 0");
    CHECK(a.satisfied());
    CHECK(report.verdict_pass());
}

TEST_CASE("the JSON report carries the full schema")
{
    SuiteConfig cfg;
    cfg.base = "onesided";
    cfg.max_len = 2;
    cfg.trials = 10;
    cfg.seed = 5;
    cfg.output = OutputMode::json;
    cfg.axioms = {"cocycle", "right-counicity"};
    const SuiteReport report = run_axiom_suite(cfg);

    const auto j = nlohmann::json::parse(report.to_json());
    CHECK(j.at("version") == "1");
    CHECK(j.at("config").at("base") == "onesided");
    CHECK(j.at("config").at("max_len") == 2);
    CHECK(j.at("config").at("seed") == 5);
    CHECK(j.at("config").at("output") == "json");
    CHECK(j.at("config").at("axioms") ==
          nlohmann::json::array({"cocycle", "right-counicity"}));
    REQUIRE(j.at("axioms").size() == 2);
    for (const auto &entry : j.at("axioms")) {
        CHECK(entry.contains("name"));
        CHECK(entry.contains("anchor"));
        CHECK(entry.contains("instances"));
        CHECK(entry.contains("passes"));
        CHECK(entry.contains("expected_failure"));
        CHECK(entry.contains("satisfied"));
    }
    CHECK(j.at("axioms").at(1).contains("counterexample"));
    CHECK(j.at("verdict") == "pass");

    // text rendering states the expectation explicitly
    CHECK(contains(report.to_text(), "failure expected and observed"));
    CHECK(contains(report.to_text(), "verdict: pass"));
}
