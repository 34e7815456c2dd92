#pragma once

#include <string>
#include <vector>

#include "cfdyn/config.hpp"

namespace cfdyn {

struct SuiteCheck {
    std::string check;
    std::string status; // pass | fail | inconclusive
    std::vector<std::string> witnesses;
    long samples = 0;
    std::uint64_t seed = 0;

    static SuiteCheck pass(std::string name, long samples, std::uint64_t seed) {
        return {std::move(name), "pass", {}, samples, seed};
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    long elapsed_ms = 0;

    bool all_passed() const;
    /// 0 all pass, 1 any fail, 3 inconclusive only.
    int exit_code() const;
    std::string to_json() const;
};

/// suite in {identities, partition, bijectivity, psi, trapping}.
/// Throws ParseError on an unknown suite name.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();

} // namespace cfdyn
