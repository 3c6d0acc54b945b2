#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nott/equivalence.hpp>

namespace nott::suites {

struct SuiteConfig {
    u32 p = 3;
    std::optional<u32> m;
    u64 seed = 42;
    OrbitOptions orbit;
};

std::vector<std::string> names();

// Runs a named suite, printing one PASS/FAIL line per assertion to stdout
// (witnesses on failure). Returns the number of failed assertions; throws
// std::invalid_argument for an unknown suite, budget_exceeded when the
// configured budget is too small.
int run(const std::string& name, const SuiteConfig& config);

} // namespace nott::suites
