#include "hookcontent/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookcontent {

namespace {

std::vector<int> split_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
            throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

template <class Parts>
std::string join_parts(const Parts& parts) {
    if (parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

void extend(const StrictPartition& mu, int index, int remaining, int max_part, std::vector<int>& prefix,
            std::vector<StrictPartition>& out) {
    int floor = std::max(mu.part(index), 1);
    if (remaining == 0) {
        if (index > mu.length()) out.emplace_back(prefix);
        return;
    }
    for (int v = std::min(remaining, max_part); v >= floor; --v) {
        prefix.push_back(v);
        extend(mu, index + 1, remaining - v, v - 1, prefix, out);
        prefix.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        prefix.push_back(v);
        partitions_rec(remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::contains(const StrictPartition& mu) const noexcept {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

SkewShape::SkewShape(StrictPartition outer_, StrictPartition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape " + format(outer) + "/" + format(inner) +
                                    ": outer does not contain inner");
}

std::string format(const StrictPartition& lambda) { return join_parts(lambda.parts()); }
std::string format(const Partition& nu) { return join_parts(nu.parts()); }

StrictPartition parse_strict(const std::string& text) { return StrictPartition(split_parts(text)); }
Partition parse_partition(const std::string& text) { return Partition(split_parts(text)); }

std::ostream& operator<<(std::ostream& os, const StrictPartition& lambda) { return os << '(' << format(lambda) << ')'; }
std::ostream& operator<<(std::ostream& os, const Partition& nu) { return os << '(' << format(nu) << ')'; }

std::vector<StrictPartition> enumerate_strict(int n) { return enumerate_extensions({}, n); }

std::vector<StrictPartition> enumerate_extensions(const StrictPartition& mu, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_extensions: negative size");
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    extend(mu, 1, mu.size() + n, mu.size() + n, prefix, out);
    return out;
}

std::vector<StrictPartition> one_box_removals(const StrictPartition& lambda) {
    std::vector<StrictPartition> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        int shrunk = lambda.part(i) - 1;
        if (shrunk > lambda.part(i + 1) || (shrunk == 0 && i == lambda.length())) {
            std::vector<int> parts = lambda.parts();
            if (shrunk == 0)
                parts.pop_back();
            else
                parts[static_cast<std::size_t>(i - 1)] = shrunk;
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::size_t StrictPartitionHash::operator()(const StrictPartition& lambda) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int p : lambda.parts()) {
        h ^= static_cast<std::size_t>(p);
        h *= 0x100000001b3ULL;
    }
    return h ^ lambda.parts().size();
}

}  // namespace hookcontent
