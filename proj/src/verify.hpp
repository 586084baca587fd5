#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsx {

// Outcome of one randomized identity-verification run. Re-running with the
// same seed reproduces the identical report except for elapsed_ms.
struct VerifyReport {
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::uint64_t elapsed_ms = 0;
    std::optional<std::string> first_failure;  // present iff failures > 0
};

struct VerifyOptions {
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    // Overrides for the suite's default node-count and degree ranges.
    // Lower bounds may not go below the suite's own minimum.
    std::optional<std::pair<int, int>> n_range;
    std::optional<std::pair<int, int>> d_range;
};

// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();

// One line per suite: "name: what it checks". Used by the CLI help text.
std::vector<std::pair<std::string, std::string>> suite_descriptions();

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

// Single-line JSON with keys in sorted order.
std::string report_json(const VerifyReport& r);

}  // namespace hsx
