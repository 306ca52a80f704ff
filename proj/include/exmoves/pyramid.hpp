#pragma once

#include <vector>

#include "exmoves/geometry.hpp"

namespace exmoves {

// Recursive octree subdivision of a video into pooling cells: level L splits
// every axis into 2^(L-1) parts, so 3 levels give 1 + 8 + 64 = 73 cells.
// Integer splits put the remainder in the last cell along each axis, so the
// cells of one level tile the video exactly.
class PyramidSpec {
public:
    PyramidSpec(const Size3& dims, int levels,
                std::vector<double> scales = {1.0, 0.75, 0.5});

    const Size3& dims() const { return dims_; }
    int levels() const { return levels_; }
    const std::vector<double>& scales() const { return scales_; }

    // Cells in level-major order, row/col/time-major within a level.
    const std::vector<Volume>& cells() const { return cells_; }
    std::size_t cell_count() const { return cells_.size(); }

    // Index of the cell containing the voxel at the given level (1-based).
    std::size_t cell_containing(int level, const Coord3& voxel) const;

private:
    struct LevelInfo {
        int splits = 1;          // per axis
        Size3 base;              // quotient cell size per axis
        std::size_t cell_base = 0;
    };

    Size3 dims_;
    int levels_ = 1;
    std::vector<double> scales_;
    std::vector<Volume> cells_;
    std::vector<LevelInfo> level_info_;
};

PyramidSpec build_pyramid(const Size3& dims, int levels,
                          std::vector<double> scales = {1.0, 0.75, 0.5});

// Exemplar extent shrunk by a scale fraction, each side rounded to the nearest
// integer but never below 1, preserving the exemplar's shape ratio.
Size3 scaled_extent(const Size3& exemplar_extent, double scale);

} // namespace exmoves
