#pragma once

#include "hookcontent/partition.hpp"
#include "hookcontent/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hookcontent {

/// A cell (row, col) of a shifted diagram, both 1-based. Row i occupies
/// columns i+1 .. i+lambda_i, so content = col - row starts at 1 in every row.
struct ShiftedBox {
    int row = 0;
    int col = 0;
    int content = 0;
    int hook = 0;

    friend bool operator==(const ShiftedBox&, const ShiftedBox&) = default;
};

/// Boxes of the shifted diagram of lambda in row-major order. The hook of
/// (i, j) is arm + leg + 1 + lambda_j, with lambda_j = 0 past the last part.
std::vector<ShiftedBox> boxes(const StrictPartition& lambda);

/// H_lambda, the product of all hook lengths (1 for the empty partition).
Integer hook_product(const StrictPartition& lambda);

/// f_lambda = |lambda|! / H_lambda. Throws std::logic_error if the division
/// is not exact.
Integer count_ssyt(const StrictPartition& lambda);

/// Memoized count of standard shifted skew tableaux, recursing on the last
/// entry: f_{lambda/mu} = sum over lambda^- containing mu of f_{lambda^-/mu}.
/// One instance is one cache; share it across calls within a run.
class SkewTableauCounter {
public:
    Integer count(const SkewShape& shape);
    /// 2^{|lambda|-|mu|-l(lambda)+l(mu)} f_{lambda/mu}.
    Integer scaled(const SkewShape& shape);

    std::size_t cache_size() const noexcept { return cache_.size(); }

private:
    Integer count_unchecked(const StrictPartition& outer, const StrictPartition& inner);

    std::map<std::pair<StrictPartition, StrictPartition>, Integer> cache_;
};

Integer count_ssyt_skew(const SkewShape& shape);

/// f'_{lambda/mu}; see SkewTableauCounter::scaled.
Integer scaled_count(const SkewShape& shape);

inline constexpr int kBruteForceCap = 12;

/// Exhaustive backtracking count of fillings of lambda/mu by 1..n with rows
/// and columns increasing. Independent of the hook formula and of the
/// memoized recursion. Throws std::invalid_argument above the cap.
Integer count_ssyt_bruteforce(const SkewShape& shape, int cap = kBruteForceCap);

/// Sum over boxes of binom(c, 2)^r.
Integer content_power_sum(const StrictPartition& lambda, unsigned r);

}  // namespace hookcontent
