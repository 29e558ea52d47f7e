#include "hookcontent/corners.hpp"

#include <stdexcept>
#include <string>

namespace hookcontent {

CornerProfile corner_profile(const StrictPartition& lambda) {
    CornerProfile p;
    const int len = lambda.length();
    // Removable boxes sit at the end of row i; scan bottom-up so alpha decreases.
    for (int i = len; i >= 1; --i) {
        int shrunk = lambda.part(i) - 1;
        if (shrunk > lambda.part(i + 1) || (shrunk == 0 && i == len))
            p.outer_coords.emplace_back(i, i + lambda.part(i));
    }
    p.m = static_cast<int>(p.outer_coords.size());
    for (int i = 0; i <= p.m; ++i) {
        int alpha_next = i < p.m ? p.outer_coords[static_cast<std::size_t>(i)].first : 0;
        int beta = i == 0 ? len + 1 : p.outer_coords[static_cast<std::size_t>(i - 1)].second;
        p.inner_coords.emplace_back(alpha_next, beta);
        p.xs.push_back(beta - alpha_next);
    }
    for (const auto& [alpha, beta] : p.outer_coords) p.ys.push_back(beta - alpha);
    return p;
}

Integer q_k(const CornerProfile& profile, unsigned k) {
    Integer total = 0;
    for (int x : profile.xs) total += pow(binom(x, 2), k);
    for (int y : profile.ys) total -= pow(binom(y, 2), k);
    return total;
}

Integer q_k(const StrictPartition& lambda, unsigned k) { return q_k(corner_profile(lambda), k); }

Integer q_nu(const StrictPartition& lambda, const Partition& nu) {
    const auto profile = corner_profile(lambda);
    Integer product = 1;
    for (int part : nu.parts()) product *= q_k(profile, static_cast<unsigned>(part));
    return product;
}

std::vector<Transition> add_box_transitions(const StrictPartition& lambda, const CornerProfile& profile) {
    std::vector<Transition> out;
    if (profile.admits_new_row()) {
        std::vector<int> parts = lambda.parts();
        parts.push_back(1);
        out.push_back({0, StrictPartition(std::move(parts)), 1, profile.x(0)});
    }
    for (int i = 1; i <= profile.m; ++i) {
        // The box of content x_i lands at the end of row alpha_{i+1} + 1.
        int row = profile.inner_coords[static_cast<std::size_t>(i)].first + 1;
        std::vector<int> parts = lambda.parts();
        ++parts[static_cast<std::size_t>(row - 1)];
        out.push_back({i, StrictPartition(std::move(parts)), 2, profile.x(i)});
    }
    return out;
}

std::vector<Transition> add_box_transitions(const StrictPartition& lambda) {
    return add_box_transitions(lambda, corner_profile(lambda));
}

Rational corner_weight(const CornerProfile& profile, int i) {
    if (i < 0 || i > profile.m) throw std::invalid_argument("corner index out of range");
    const Integer a_i = binom(profile.x(i), 2);
    Integer num = 1;
    Integer den = 1;
    for (int y : profile.ys) num *= a_i - binom(y, 2);
    for (int j = 0; j <= profile.m; ++j)
        if (j != i) den *= a_i - binom(profile.x(j), 2);
    Rational w(num, den);
    w.canonicalize();
    return w;
}

Rational hook_ratio(const StrictPartition& lambda, int i) {
    const auto profile = corner_profile(lambda);
    if (i < 0 || i > profile.m)
        throw std::invalid_argument("corner index " + std::to_string(i) + " out of range for " + format(lambda));
    if (i == 0) {
        if (!profile.admits_new_row())
            throw std::invalid_argument("no length-increasing transition for " + format(lambda) + " (y_1 = 1)");
        return corner_weight(profile, 0);
    }
    return corner_weight(profile, i) / 2;
}

Integer q_shift(const StrictPartition& lambda, int i, unsigned k) {
    const auto profile = corner_profile(lambda);
    if (i < 0 || i > profile.m)
        throw std::invalid_argument("corner index " + std::to_string(i) + " out of range for " + format(lambda));
    if (i == 0 && !profile.admits_new_row())
        throw std::invalid_argument("no length-increasing transition for " + format(lambda) + " (y_1 = 1)");
    const int x = profile.x(i);
    return pow(binom(x + 1, 2), k) + pow(binom(x - 1, 2), k) - 2 * pow(binom(x, 2), k);
}

}  // namespace hookcontent
