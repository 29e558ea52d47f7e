#pragma once

#include "hookcontent/partition.hpp"

#include <string>

namespace hookcontent {

/// Shifted-diagram tables, one line per row, top row first; row i is
/// indented by i-1 cells.
std::string render_hooks(const StrictPartition& lambda);
std::string render_contents(const StrictPartition& lambda);

/// Corner coordinates and the x/y content lists.
std::string render_corners(const StrictPartition& lambda);

/// q_0 .. q_{k_max}, one per line.
std::string render_q(const StrictPartition& lambda, unsigned k_max);

}  // namespace hookcontent
