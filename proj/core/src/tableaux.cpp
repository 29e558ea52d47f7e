#include "hookcontent/tableaux.hpp"

#include <stdexcept>

namespace hookcontent {

std::vector<ShiftedBox> boxes(const StrictPartition& lambda) {
    std::vector<ShiftedBox> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    const int len = lambda.length();
    for (int i = 1; i <= len; ++i) {
        const int last_col = i + lambda.part(i);
        for (int j = i + 1; j <= last_col; ++j) {
            int arm = last_col - j;
            int leg = 0;
            for (int k = i + 1; k <= len && k + 1 <= j; ++k)
                if (j <= k + lambda.part(k)) ++leg;
            out.push_back({i, j, j - i, arm + leg + 1 + lambda.part(j)});
        }
    }
    return out;
}

Integer hook_product(const StrictPartition& lambda) {
    Integer h = 1;
    for (const auto& box : boxes(lambda)) h *= box.hook;
    return h;
}

Integer count_ssyt(const StrictPartition& lambda) {
    Integer n_fact = factorial(lambda.size());
    Integer h = hook_product(lambda);
    if (!mpz_divisible_p(n_fact.get_mpz_t(), h.get_mpz_t()))
        throw std::logic_error("hook product of " + format(lambda) + " does not divide |lambda|!");
    Integer f;
    mpz_divexact(f.get_mpz_t(), n_fact.get_mpz_t(), h.get_mpz_t());
    return f;
}

Integer SkewTableauCounter::count(const SkewShape& shape) { return count_unchecked(shape.outer, shape.inner); }

Integer SkewTableauCounter::count_unchecked(const StrictPartition& outer, const StrictPartition& inner) {
    if (outer == inner) return 1;
    if (!outer.contains(inner)) return 0;
    auto key = std::make_pair(outer, inner);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Integer total = 0;
    for (const auto& smaller : one_box_removals(outer))
        if (smaller.contains(inner)) total += count_unchecked(smaller, inner);
    cache_.emplace(std::move(key), total);
    return total;
}

Integer SkewTableauCounter::scaled(const SkewShape& shape) {
    const int exponent = shape.outer.size() - shape.inner.size() - shape.outer.length() + shape.inner.length();
    return two_pow(static_cast<unsigned>(exponent)) * count(shape);
}

Integer count_ssyt_skew(const SkewShape& shape) {
    SkewTableauCounter counter;
    return counter.count(shape);
}

Integer scaled_count(const SkewShape& shape) {
    SkewTableauCounter counter;
    return counter.scaled(shape);
}

namespace {

struct Filling {
    // grid[row][col], 0 = inner box or not yet filled, -1 = outside the shape
    std::vector<std::vector<int>> grid;
    std::vector<std::pair<int, int>> cells;
    std::vector<bool> used;
    long long count = 0;

    bool fits(int row, int col, int value) const {
        int left = grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)];
        int up = grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
        return (left < 0 || left < value) && (up < 0 || up < value);
    }

    void place(std::size_t index) {
        if (index == cells.size()) {
            ++count;
            return;
        }
        auto [row, col] = cells[index];
        for (std::size_t v = 1; v < used.size(); ++v) {
            int value = static_cast<int>(v);
            if (used[v] || !fits(row, col, value)) continue;
            used[v] = true;
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
            place(index + 1);
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
            used[v] = false;
        }
    }
};

}  // namespace

Integer count_ssyt_bruteforce(const SkewShape& shape, int cap) {
    const int n = shape.size();
    if (n > cap)
        throw std::invalid_argument("brute-force tableau count refuses " + std::to_string(n) + " boxes (cap " +
                                    std::to_string(cap) + ")");
    const auto& outer = shape.outer;
    const auto& inner = shape.inner;
    const int rows = outer.length();
    const int cols = outer.part(1) + 1;
    Filling f;
    f.grid.assign(static_cast<std::size_t>(rows + 1), std::vector<int>(static_cast<std::size_t>(cols + 1), -1));
    for (int i = 1; i <= rows; ++i) {
        for (int j = i + 1; j <= i + outer.part(i); ++j) {
            f.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
            if (j > i + inner.part(i)) f.cells.emplace_back(i, j);
        }
    }
    f.used.assign(static_cast<std::size_t>(n + 1), false);
    f.place(0);
    return Integer(static_cast<long>(f.count));
}

Integer content_power_sum(const StrictPartition& lambda, unsigned r) {
    Integer total = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int c = 1; c <= lambda.part(i); ++c) total += pow(binom(c, 2), r);
    return total;
}

}  // namespace hookcontent
