#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace hookcontent {

/// A strict partition: strictly decreasing positive parts. The empty
/// partition is valid. Parts beyond the length read as 0.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Throws std::invalid_argument unless parts are strictly decreasing and positive.
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts)
        : StrictPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part lookup; 0 for i > length().
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// lambda_i >= mu_i for all i.
    bool contains(const StrictPartition& mu) const noexcept;

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// An ordinary partition (weakly decreasing positive parts), used to index
/// products q_nu = q_{nu_1} q_{nu_2} ...
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// lambda / mu with lambda containing mu.
struct SkewShape {
    StrictPartition outer;
    StrictPartition inner;

    /// Throws std::invalid_argument if outer does not contain inner.
    SkewShape(StrictPartition outer_, StrictPartition inner_ = {});

    int size() const noexcept { return outer.size() - inner.size(); }
};

/// "7,5,4,1"; the empty partition formats as "-".
std::string format(const StrictPartition& lambda);
std::string format(const Partition& nu);

/// Accepts "7,5,4,1", "" and "-". Throws std::invalid_argument on anything else.
StrictPartition parse_strict(const std::string& text);
Partition parse_partition(const std::string& text);

std::ostream& operator<<(std::ostream& os, const StrictPartition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& nu);

/// All strict partitions of n, lexicographically descending.
std::vector<StrictPartition> enumerate_strict(int n);

/// All strict lambda containing mu with |lambda/mu| = n, lexicographically descending.
std::vector<StrictPartition> enumerate_extensions(const StrictPartition& mu, int n);

/// Every strict partition obtained from lambda by deleting one box, ordered by row.
std::vector<StrictPartition> one_box_removals(const StrictPartition& lambda);

/// All ordinary partitions of n, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n);

struct StrictPartitionHash {
    std::size_t operator()(const StrictPartition& lambda) const noexcept;
};

}  // namespace hookcontent
