#pragma once

#include "hookcontent/partition.hpp"
#include "hookcontent/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hookcontent {

/// Points a_0..a_m and b_1..b_m. Only distinctness of the a_i is required;
/// the weights are rational functions of the points.
struct RationalPoint {
    std::vector<Rational> a;
    std::vector<Rational> b;

    /// Throws std::invalid_argument unless a.size() == b.size() + 1 and the a_i are distinct.
    RationalPoint(std::vector<Rational> a_, std::vector<Rational> b_);

    int m() const noexcept { return static_cast<int>(b.size()); }
};

/// sum_i a_i^k - sum_j b_j^k
Rational q_k(const RationalPoint& p, unsigned k);
Rational q_nu(const RationalPoint& p, const Partition& nu);

/// prod_j (a_i - b_j) / prod_{j != i} (a_i - a_j)
Rational pf_kernel(const RationalPoint& p, int i);

/// sum_i pf_kernel(p, i) * a_i^k
Rational pf_moment(const RationalPoint& p, unsigned k);

/// Coefficients xi_nu keyed by nu.
using CoefficientTable = std::map<Partition, Rational>;

/// Coefficient of z^k in exp(sum_{j>=1} q_j z^j / j), as a polynomial in the
/// formal variables q_1, q_2, ... (q_j of weight j). Every monomial has
/// weight exactly k.
CoefficientTable pf_expand(unsigned k);

/// sum_nu xi_nu q_nu(p)
Rational evaluate(const CoefficientTable& table, const RationalPoint& p);

/// {"1,1": "1/2", "2": "1/2"}; the empty nu is keyed "-".
std::string to_json(const CoefficientTable& table);

/// Reproducible random point: m drawn uniformly from 0..max_m, then 2m+1
/// distinct rationals num/den with |num| <= 20, 1 <= den <= 6, split into
/// sorted a (m+1 values) and sorted b (m values).
RationalPoint random_point(std::uint64_t seed, std::uint64_t index, int max_m);

}  // namespace hookcontent
