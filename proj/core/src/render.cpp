#include "diagseq/render.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <string>

namespace diagseq {

std::vector<std::string> render_young(const Partition& p, RenderMode mode) {
    if (p.weight() > kMaxRenderCells)
        fail(ErrorKind::BoundExceeded, "diagram too large: " + std::to_string(p.weight()) +
                                           " cells exceed the " +
                                           std::to_string(kMaxRenderCells) + "-cell limit");
    const auto parts = p.parts();
    std::vector<std::string> rows;
    rows.reserve(parts.size());

    if (mode == RenderMode::Letter) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::string row;
            row.reserve(static_cast<std::size_t>(parts[i]));
            for (Int j = 1; j <= parts[i]; ++j) {
                const Int diag = static_cast<Int>(i) + j;  // i + j - 1, 1-based
                row.push_back(static_cast<char>('a' + (diag - 1) % 26));
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    // Index mode: cell (i, j) shows how many of rows 1..i reach its
    // anti-diagonal, i.e. the cell's position along that diagonal.
    std::vector<std::vector<Int>> cells(parts.size());
    Int widest = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        cells[i].resize(static_cast<std::size_t>(parts[i]));
        for (Int j = 1; j <= parts[i]; ++j) {
            const Int diag = static_cast<Int>(i) + j;
            Int position = 0;
            for (std::size_t r = 0; r <= i; ++r)
                if (parts[r] + static_cast<Int>(r) >= diag) ++position;
            cells[i][static_cast<std::size_t>(j - 1)] = position;
            widest = std::max(widest, position);
        }
    }
    const std::size_t width = std::to_string(widest).size();
    for (const std::vector<Int>& row_cells : cells) {
        std::string row;
        for (std::size_t j = 0; j < row_cells.size(); ++j) {
            std::string digits = std::to_string(row_cells[j]);
            if (width > 1 && j > 0) row.push_back(' ');
            row.append(width - digits.size(), ' ');
            row += digits;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace diagseq
