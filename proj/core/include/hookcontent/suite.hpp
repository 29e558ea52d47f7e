#pragma once

#include "hookcontent/identities.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookcontent {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key-value suite configuration:
///
///   # comment
///   seed = 2024
///   n_max = 9
///   jobs = 4
///   identity = k1-skew mu=3,1 n=0..9
///
/// With no identity lines the full default suite runs. n_max caps every
/// range except poly-detect, whose sample size is fixed by the detector.
struct SuiteConfig {
    std::uint64_t seed = 20240101;
    std::optional<int> n_max;
    int jobs = 1;
    std::vector<IdentityCheck> checks;
};

/// Throws ConfigError ("line N: ...") on malformed input or unknown identities.
SuiteConfig parse_suite_config(std::istream& in);
SuiteConfig load_suite_config(const std::string& path);

/// Parses "a..b" or "n" into [first, last].
std::pair<int, int> parse_range(const std::string& text);

/// Parses "name key=value ..." as on an identity line.
IdentityCheck parse_check(const std::string& line, std::uint64_t default_seed);

/// The checks a config resolves to: explicit lines, or the default suite.
std::vector<IdentityCheck> resolve_checks(const SuiteConfig& config);

/// Every registered identity over its default range.
std::vector<IdentityCheck> default_suite(std::uint64_t seed);

struct SuiteResult {
    std::vector<IdentityReport> reports;  ///< in config order
    int exit_code = 0;                    ///< 0 all pass, 1 any failure
};

SuiteResult run_suite(const SuiteConfig& config);

}  // namespace hookcontent
