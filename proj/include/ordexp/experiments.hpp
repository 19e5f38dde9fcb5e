#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ordexp/cohomology.hpp"

namespace ordexp {

// ---------------------------------------------------------------------------
// Experiment runner behind the CLI.  Configs are JSON documents (see
// docs/config-format.md); the runner executes one experiment and reports
// a machine-parsable status line plus a human-readable report and an
// optional CSV of convergence data.
// ---------------------------------------------------------------------------

struct RunResult {
    int exit_code = 0;          // 0 ok, 2 tolerance-fail, 3 config-error, 4 domain-error
    std::string status;         // "ok" | "tolerance-fail" | "config-error" | "domain-error"
    std::string report;         // full text report (first line: "STATUS: <status>")
    std::string csv;            // non-empty when the experiment produced levels
};

RunResult run_config_text(const std::string& json_text);
RunResult run_config_file(const std::string& path);
RunResult validate_config_file(const std::string& path);
RunResult validate_config_text(const std::string& json_text);

// JSON schema of the config format (printed by `ordexp schema`).
std::string config_schema_json();

// Deterministic generator of a random periodic pair (f, f') as expression
// strings: f is a trigonometric polynomial of the given degree with
// coefficient magnitudes <= scale, f' its derivative.
std::pair<std::string, std::string> random_periodic_pair(std::uint64_t seed, int degree,
                                                         double scale);

// Random unimodular 2x2 group element: exp of a traceless real matrix.
GroupElement random_unimodular2(std::uint64_t seed, double scale);

} // namespace ordexp
