#include "exmoves/pyramid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "exmoves/errors.hpp"

namespace exmoves {

PyramidSpec::PyramidSpec(const Size3& dims, int levels, std::vector<double> scales)
    : dims_(dims), levels_(levels), scales_(std::move(scales)) {
    if (!dims.positive())
        throw DimensionError("PyramidSpec: dims must be positive");
    if (levels < 1)
        throw DimensionError("PyramidSpec: levels must be >= 1");
    if (scales_.empty())
        throw ContractError("PyramidSpec: need at least one scale");
    for (double s : scales_)
        if (!(s > 0.0 && s <= 1.0))
            throw ContractError("PyramidSpec: scales must lie in (0, 1]");

    for (int level = 1; level <= levels; ++level) {
        LevelInfo info;
        info.splits = 1 << (level - 1);
        info.cell_base = cells_.size();
        const int n = info.splits;
        if (dims.r < n || dims.c < n || dims.t < n)
            throw DimensionError("PyramidSpec: dims too small to subdivide into " +
                                 std::to_string(n) + " parts per axis");
        info.base = Size3{dims.r / n, dims.c / n, dims.t / n};

        auto side = [n](int ir, int q, int dim) {
            return ir == n - 1 ? dim - (n - 1) * q : q;
        };
        for (int ir = 0; ir < n; ++ir) {
            for (int ic = 0; ic < n; ++ic) {
                for (int it = 0; it < n; ++it) {
                    Volume cell;
                    cell.origin = {ir * info.base.r, ic * info.base.c, it * info.base.t};
                    cell.extent = {side(ir, info.base.r, dims.r), side(ic, info.base.c, dims.c),
                                   side(it, info.base.t, dims.t)};
                    cells_.push_back(cell);
                }
            }
        }
        level_info_.push_back(info);
    }
}

std::size_t PyramidSpec::cell_containing(int level, const Coord3& voxel) const {
    const LevelInfo& info = level_info_.at(static_cast<std::size_t>(level - 1));
    const int n = info.splits;
    const int ir = std::min(voxel.r / info.base.r, n - 1);
    const int ic = std::min(voxel.c / info.base.c, n - 1);
    const int it = std::min(voxel.t / info.base.t, n - 1);
    return info.cell_base + (static_cast<std::size_t>(ir) * n + ic) * n + it;
}

PyramidSpec build_pyramid(const Size3& dims, int levels, std::vector<double> scales) {
    return PyramidSpec(dims, levels, std::move(scales));
}

Size3 scaled_extent(const Size3& exemplar_extent, double scale) {
    if (!(scale > 0.0 && scale <= 1.0))
        throw ContractError("scaled_extent: scale must lie in (0, 1]");
    auto one = [scale](int side) {
        return std::max(1, static_cast<int>(std::lround(side * scale)));
    };
    return Size3{one(exemplar_extent.r), one(exemplar_extent.c), one(exemplar_extent.t)};
}

} // namespace exmoves
