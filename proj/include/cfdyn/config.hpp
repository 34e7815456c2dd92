#pragma once

#include <cstdint>
#include <string>

namespace cfdyn {

/// Defaults for the verification suites. Loaded from a key = value file
/// (verify.toml) so repeated runs are reproducible without flag soup.
struct VerifyConfig {
    int samples = 10000;
    std::uint64_t seed = 1;
    double epsilon = 1e-9;
    int grid = 600;
};

/// Parses `key = value` lines; `#` and `;` start comments, `[section]`
/// headers and unknown keys are ignored. Throws ParseError on a malformed
/// line or value, IoError if the file cannot be read.
VerifyConfig load_config(const std::string& path);

/// $CFDYN_CONFIG if set, else ./verify.toml if present, else defaults.
VerifyConfig load_default_config();

} // namespace cfdyn
