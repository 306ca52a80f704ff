#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace exmoves {

// Voxel coordinate (row, column, frame).
struct Coord3 {
    int r = 0;
    int c = 0;
    int t = 0;

    friend bool operator==(const Coord3&, const Coord3&) = default;
};

// Side lengths along (rows, columns, frames). Used both for video dimensions
// and for volume extents.
struct Size3 {
    int r = 0;
    int c = 0;
    int t = 0;

    bool positive() const { return r > 0 && c > 0 && t > 0; }
    long long voxels() const {
        return static_cast<long long>(r) * c * t;
    }
    bool fits_within(const Size3& outer) const {
        return r <= outer.r && c <= outer.c && t <= outer.t;
    }

    friend bool operator==(const Size3&, const Size3&) = default;
};

// Axis-aligned space-time box. Origin is the lowest-index voxel it covers,
// extent its side lengths (always >= 1 per axis for a usable volume).
struct Volume {
    Coord3 origin;
    Size3 extent;

    bool valid_for(const Size3& dims) const {
        return extent.positive() &&
               origin.r >= 0 && origin.c >= 0 && origin.t >= 0 &&
               origin.r + extent.r <= dims.r &&
               origin.c + extent.c <= dims.c &&
               origin.t + extent.t <= dims.t;
    }

    long long voxel_count() const { return extent.voxels(); }

    // Exclusive upper corner.
    Coord3 end() const {
        return {origin.r + extent.r, origin.c + extent.c, origin.t + extent.t};
    }

    bool contains(const Coord3& p) const {
        return p.r >= origin.r && p.r < origin.r + extent.r &&
               p.c >= origin.c && p.c < origin.c + extent.c &&
               p.t >= origin.t && p.t < origin.t + extent.t;
    }

    Coord3 center() const {
        return {origin.r + extent.r / 2, origin.c + extent.c / 2, origin.t + extent.t / 2};
    }

    friend bool operator==(const Volume&, const Volume&) = default;
};

// Voxel count of the box intersection of a and b.
long long intersection_voxels(const Volume& a, const Volume& b);

// |a ∩ b| / |b|, in [0, 1]. Intersection is the full 3D box intersection.
// Not symmetric: the denominator is always b.
double overlap_ratio(const Volume& a, const Volume& b);

// Sliding-window step per axis.
struct Stride3 {
    int r = 1;
    int c = 1;
    int t = 1;

    friend bool operator==(const Stride3&, const Stride3&) = default;
};

// The lattice of sliding positions for a fixed extent inside dims: origins at
// multiples of the stride starting from (0,0,0), keeping only volumes that fit.
// Iteration order is row-major, then column, then frame (frame fastest).
class PositionLattice {
public:
    PositionLattice(const Size3& dims, const Size3& extent, const Stride3& stride);

    std::size_t size() const {
        return static_cast<std::size_t>(nr_) * nc_ * nt_;
    }
    bool empty() const { return size() == 0; }

    Volume at(std::size_t index) const;

    const Size3& dims() const { return dims_; }
    const Size3& extent() const { return extent_; }
    const Stride3& stride() const { return stride_; }
    int count_r() const { return nr_; }
    int count_c() const { return nc_; }
    int count_t() const { return nt_; }

private:
    Size3 dims_;
    Size3 extent_;
    Stride3 stride_;
    int nr_ = 0, nc_ = 0, nt_ = 0;
};

// Materialized lattice in deterministic order. An extent larger than dims
// yields an empty list, so multi-scale loops degrade gracefully on short clips.
std::vector<Volume> enumerate_positions(const Size3& dims, const Size3& extent,
                                        const Stride3& stride);

} // namespace exmoves
