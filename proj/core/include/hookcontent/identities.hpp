#pragma once

#include "hookcontent/partition.hpp"
#include "hookcontent/polynomial_fit.hpp"
#include "hookcontent/rational.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookcontent {

/// Unknown identity name or parameters that do not fit the identity.
class IdentityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Registered identity names, in registry order.
const std::vector<std::string>& identity_names();
bool is_registered_identity(std::string_view name);

struct IdentityCheck {
    std::string name;
    StrictPartition mu;
    int k = 0;                    ///< content-binomial order, partial-fraction moment
    std::vector<int> exponents;   ///< poly-detect: Q = prod_t p_{r_t}
    Partition nu;                 ///< poly-detect: q_nu factor
    int n_min = 0;
    int n_max = 0;
    std::uint64_t seed = 0;       ///< partial-fraction: point generator seed
    int max_m = 5;                ///< partial-fraction: largest m

    /// Throws IdentityError for an unknown name or bad parameters.
    void validate() const;

    /// "mu=2,1 k=1 n=0..9", only the parameters the identity uses.
    std::string describe() const;
};

/// Default range and parameters for a registered identity.
IdentityCheck default_check(const std::string& name);

struct IdentityRow {
    int n = 0;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct IdentityReport {
    IdentityCheck check;
    std::vector<IdentityRow> rows;
    std::optional<PolynomialFit> fit;  ///< poly-detect only
    std::chrono::nanoseconds elapsed{0};
    bool pass = false;
};

/// Evaluates lhs by enumeration and rhs from the closed form for each n.
IdentityReport run_identity(const IdentityCheck& check);

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_format(const std::string& text);

/// Lossless rendering; elapsed time is not part of the output.
std::string to_json(const IdentityReport& report);
std::string to_text(const IdentityReport& report);
std::string csv_header();
std::string to_csv(const IdentityReport& report);
std::string render(const std::vector<IdentityReport>& reports, ReportFormat format);

}  // namespace hookcontent
