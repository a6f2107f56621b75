#ifndef CARLITZ_VERIFY_HPP
#define CARLITZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

struct VerifyConfig {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t cap = kDefaultEnumCap;
};

struct CheckResult {
    std::string name;    // "module/operation/property"
    bool pass = false;
    std::string detail;  // first counterexample on failure
    std::int64_t millis = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Suite names accepted by run_suites; "all" expands to every one of these.
const std::vector<std::string>& suite_names();

// Runs one named suite, or all of them.  Throws usage_error on an unknown
// name.  The seed pins every randomized choice; thread count never changes
// any reported value.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyConfig& cfg);

}  // namespace carlitz

#endif
