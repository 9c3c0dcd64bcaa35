#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freenij/exec.hpp"

namespace freenij {

enum class OutputMode { text, json };

/// Everything a suite run depends on. Two runs with equal configs produce
/// byte-identical reports, regardless of thread count or execution mode.
struct SuiteConfig {
    std::string base = "trivial";
    std::size_t max_len = 3;    // word length bound for exhaustive axioms
    std::uint32_t max_exp = 2;  // letter exponent bound
    std::size_t max_u = 6;      // u-word index bound
    std::size_t trials = 200;   // instance count for randomized axioms
    std::uint64_t seed = 0;
    std::vector<std::string> axioms; // empty selects the whole registry
    OutputMode output = OutputMode::text;
    bool allow_inadmissible = false;
};

struct AxiomOutcome {
    std::string name;
    std::string anchor; // the statement the axiom checks, in ASCII math
    std::size_t instances = 0;
    std::size_t passes = 0;
    bool expected_failure = false;
    std::optional<std::string> counterexample; // first in enumeration order
    std::optional<std::string> skipped;        // reason, when not run

    /// Skipped axioms are satisfied vacuously; expected-failure axioms are
    /// satisfied only when a counterexample was actually found.
    bool satisfied() const
    {
        if (skipped) return true;
        if (expected_failure) return passes < instances;
        return passes == instances;
    }
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<AxiomOutcome> axioms;

    bool verdict_pass() const;
    std::string to_text() const;
    std::string to_json() const; // stable field order, deterministic bytes
};

/// Registry names in report order.
std::vector<std::string> axiom_names();

/// Run the selected axioms (all, if config.axioms is empty) against the
/// configured base and bounds. Throws Error on an unknown base or axiom name.
SuiteReport run_axiom_suite(const SuiteConfig &config);

} // namespace freenij
