#pragma once

#include "hookcontent/partition.hpp"
#include "hookcontent/rational.hpp"

#include <utility>
#include <vector>

namespace hookcontent {

/// Corner decomposition of a strict partition.
///
/// Outer corners (alpha_j, beta_j), j = 1..m, are the removable boxes with
/// alpha_1 > ... > alpha_m. With alpha_{m+1} = 0 and beta_0 = l(lambda) + 1 the
/// inner corners are (alpha_{i+1}, beta_i), i = 0..m. Contents interlace:
///   1 = x_0 <= y_1 < x_1 < y_2 < ... < y_m < x_m.
struct CornerProfile {
    int m = 0;
    std::vector<std::pair<int, int>> outer_coords;  ///< (alpha_j, beta_j), j = 1..m
    std::vector<std::pair<int, int>> inner_coords;  ///< (alpha_{i+1}, beta_i), i = 0..m
    std::vector<int> xs;                            ///< x_0..x_m
    std::vector<int> ys;                            ///< y_1..y_m, stored 0-based

    int x(int i) const { return xs.at(static_cast<std::size_t>(i)); }
    int y(int j) const { return ys.at(static_cast<std::size_t>(j - 1)); }

    /// True when a new row of length one may be appended (y_1 > 1, or lambda empty).
    bool admits_new_row() const noexcept { return m == 0 || ys.front() > 1; }
};

CornerProfile corner_profile(const StrictPartition& lambda);

/// q_k(lambda) = sum_i binom(x_i,2)^k - sum_j binom(y_j,2)^k, with 0^0 = 1.
Integer q_k(const StrictPartition& lambda, unsigned k);
Integer q_k(const CornerProfile& profile, unsigned k);

/// Product of q_{nu_j}(lambda); 1 for the empty nu.
Integer q_nu(const StrictPartition& lambda, const Partition& nu);

/// lambda^{i+}: lambda plus the box of content x_i.
struct Transition {
    int index = 0;
    StrictPartition result;
    int multiplicity = 0;  ///< 1 when the length grows (i = 0), 2 otherwise
    int content = 0;
};

/// lambda^{i+} for i = 1..m, plus lambda^{0+} when a new row is admissible.
/// Ordered by corner index.
std::vector<Transition> add_box_transitions(const StrictPartition& lambda);
std::vector<Transition> add_box_transitions(const StrictPartition& lambda, const CornerProfile& profile);

/// Partial-fraction weight at a_i = binom(x_i,2), b_j = binom(y_j,2):
///   prod_j (a_i - b_j) / prod_{j != i} (a_i - a_j).
/// Defined for every 0 <= i <= m; for i = 0 it vanishes when y_1 = 1.
Rational corner_weight(const CornerProfile& profile, int i);

/// H_lambda / H_{lambda^{i+}} from corner contents alone (no hook lengths).
/// Throws std::invalid_argument for an index with no corresponding transition.
Rational hook_ratio(const StrictPartition& lambda, int i);

/// binom(x_i+1,2)^k + binom(x_i-1,2)^k - 2 binom(x_i,2)^k, which equals
/// q_k(lambda^{i+}) - q_k(lambda).
Integer q_shift(const StrictPartition& lambda, int i, unsigned k);

}  // namespace hookcontent
