#include "hookcontent/display.hpp"

#include "hookcontent/corners.hpp"
#include "hookcontent/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace hookcontent {

namespace {

template <class Field>
std::string shifted_table(const StrictPartition& lambda, Field&& field) {
    const auto cells = boxes(lambda);
    std::size_t width = 1;
    for (const auto& box : cells) width = std::max(width, std::to_string(field(box)).size());
    std::ostringstream os;
    int current_row = 0;
    for (const auto& box : cells) {
        if (box.row != current_row) {
            if (current_row) os << '\n';
            current_row = box.row;
            os << std::string(static_cast<std::size_t>(box.row - 1) * (width + 1), ' ');
        } else {
            os << ' ';
        }
        std::string text = std::to_string(field(box));
        os << std::string(width - text.size(), ' ') << text;
    }
    if (current_row) os << '\n';
    return os.str();
}

}  // namespace

std::string render_hooks(const StrictPartition& lambda) {
    return shifted_table(lambda, [](const ShiftedBox& box) { return box.hook; });
}

std::string render_contents(const StrictPartition& lambda) {
    return shifted_table(lambda, [](const ShiftedBox& box) { return box.content; });
}

std::string render_corners(const StrictPartition& lambda) {
    const auto p = corner_profile(lambda);
    std::ostringstream os;
    auto coords = [&os](const std::vector<std::pair<int, int>>& list) {
        for (std::size_t i = 0; i < list.size(); ++i)
            os << (i ? " " : "") << '(' << list[i].first << ',' << list[i].second << ')';
    };
    auto ints = [&os](const std::vector<int>& list) {
        for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
    };
    os << "m=" << p.m << '\n' << "outer: ";
    coords(p.outer_coords);
    os << '\n' << "inner: ";
    coords(p.inner_coords);
    os << '\n' << "x: ";
    ints(p.xs);
    os << '\n' << "y: ";
    ints(p.ys);
    os << '\n';
    return os.str();
}

std::string render_q(const StrictPartition& lambda, unsigned k_max) {
    const auto p = corner_profile(lambda);
    std::ostringstream os;
    for (unsigned k = 0; k <= k_max; ++k) os << "q_" << k << '=' << q_k(p, k).get_str() << '\n';
    return os.str();
}

}  // namespace hookcontent
