#include "exmoves/geometry.hpp"

#include <algorithm>

#include "exmoves/errors.hpp"

namespace exmoves {

long long intersection_voxels(const Volume& a, const Volume& b) {
    const Coord3 ae = a.end();
    const Coord3 be = b.end();
    const long long dr = std::max(0, std::min(ae.r, be.r) - std::max(a.origin.r, b.origin.r));
    const long long dc = std::max(0, std::min(ae.c, be.c) - std::max(a.origin.c, b.origin.c));
    const long long dt = std::max(0, std::min(ae.t, be.t) - std::max(a.origin.t, b.origin.t));
    return dr * dc * dt;
}

double overlap_ratio(const Volume& a, const Volume& b) {
    if (!a.extent.positive() || !b.extent.positive())
        throw DimensionError("overlap_ratio: volumes must have positive extent");
    return static_cast<double>(intersection_voxels(a, b)) /
           static_cast<double>(b.voxel_count());
}

namespace {

int axis_count(int dim, int extent, int stride) {
    if (extent > dim)
        return 0;
    // ceil((dim - extent + 1) / stride)
    return (dim - extent + stride) / stride;
}

} // namespace

PositionLattice::PositionLattice(const Size3& dims, const Size3& extent, const Stride3& stride)
    : dims_(dims), extent_(extent), stride_(stride) {
    if (!dims.positive() || !extent.positive())
        throw DimensionError("PositionLattice: dims and extent must be positive");
    if (stride.r < 1 || stride.c < 1 || stride.t < 1)
        throw DimensionError("PositionLattice: stride must be >= 1 per axis");
    nr_ = axis_count(dims.r, extent.r, stride.r);
    nc_ = axis_count(dims.c, extent.c, stride.c);
    nt_ = axis_count(dims.t, extent.t, stride.t);
    if (nr_ == 0 || nc_ == 0 || nt_ == 0)
        nr_ = nc_ = nt_ = 0;
}

Volume PositionLattice::at(std::size_t index) const {
    const std::size_t per_r = static_cast<std::size_t>(nc_) * nt_;
    const int ir = static_cast<int>(index / per_r);
    const int ic = static_cast<int>((index % per_r) / nt_);
    const int it = static_cast<int>(index % nt_);
    return Volume{{ir * stride_.r, ic * stride_.c, it * stride_.t}, extent_};
}

std::vector<Volume> enumerate_positions(const Size3& dims, const Size3& extent,
                                        const Stride3& stride) {
    PositionLattice lattice(dims, extent, stride);
    std::vector<Volume> out;
    out.reserve(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i)
        out.push_back(lattice.at(i));
    return out;
}

} // namespace exmoves
