#pragma once

// Property-test suites runnable from the CLI and the acceptance harness.
// Every suite is deterministic under a fixed seed and reports the number of
// checks performed plus a serialized counterexample on failure.

#include <cstdint>
#include <string>
#include <vector>

namespace fg {

struct SuiteOptions {
    std::uint64_t seed = 7;
    long samples = 0; // 0 = suite default
};

struct SuiteReport {
    std::string suite;
    bool passed = false;
    long long checks = 0;
    std::string detail;
};

// n22, nochord, layer, peeling, dist, match, theorem1
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace fg
