#pragma once

#include "diagseq/partition.hpp"

#include <string>
#include <vector>

namespace diagseq {

enum class RenderMode {
    Index,   // each cell shows its position along its anti-diagonal
    Letter,  // cells on anti-diagonal k all show 'a' + (k-1) mod 26
};

inline constexpr Int kMaxRenderCells = 2000;

/// One string per Young-diagram row. In index mode the cell in row i,
/// column j shows how many of rows 1..i meet anti-diagonal i+j-1; cells
/// wider than one digit are right-aligned to a common width and separated
/// by single spaces. Refuses diagrams with more than kMaxRenderCells
/// cells.
std::vector<std::string> render_young(const Partition& p, RenderMode mode);

}  // namespace diagseq
