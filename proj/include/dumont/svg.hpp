#pragma once

#include <string>

#include "dumont/dyck.hpp"
#include "dumont/permutation.hpp"

namespace dumont {

// Deterministic SVG 1.1 documents: integer-only coordinates, no timestamps.

// The path drawn over a light grid, one unit per step.
std::string svg_dyck(const DyckPath& path);

// n x n board with a dot per column; when the permutation is a lower or
// upper board the admissible cells are shaded, and a lower board gets its
// greedy northwest path overlaid.
std::string svg_board(const Permutation& p);

}  // namespace dumont
