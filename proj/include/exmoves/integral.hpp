#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exmoves/geometry.hpp"
#include "exmoves/video.hpp"

namespace exmoves {

// 3D prefix-sum buffer: entry (r,c,t) holds the sum of per-voxel contributions
// over all voxels (r',c',t') with r'<=r, c'<=c, t'<=t. Any axis-aligned box
// sum is then 8 corner lookups.
class IntegralGrid {
public:
    IntegralGrid(Size3 dims, std::vector<double> prefix);

    // Builds the prefix sums in one pass from raw per-voxel contributions
    // (layout: index = (r*C + c)*T + t).
    static IntegralGrid from_contributions(Size3 dims, std::vector<double> cells);

    const Size3& dims() const { return dims_; }

    // Prefix value; indices of -1 read as 0.
    double at(int r, int c, int t) const {
        if (r < 0 || c < 0 || t < 0)
            return 0.0;
        return v_[(static_cast<std::size_t>(r) * dims_.c + c) * dims_.t + t];
    }

    double box_sum(const Volume& vol) const;

    const std::vector<double>& raw() const { return v_; }

private:
    Size3 dims_;
    std::vector<double> v_;
};

// Sum of the grid's contribution function over vol, via 3D inclusion-exclusion.
double subvolume_sum(const IntegralGrid& grid, const Volume& vol);

// Per-model accumulation buffers: one numerator grid per channel (summing the
// weight of each point's codeword) and one denominator grid shared by every
// model over the same video (counting points). Immutable; concurrent queries
// are safe.
struct IntegralStack {
    Size3 dims;
    std::vector<IntegralGrid> numerators;
    std::shared_ptr<const IntegralGrid> denominator;
    std::string model_id;
};

// Denominator grid alone; weight-independent, so callers evaluating many
// models over one video build it once and pass it to build_integral_stack.
std::shared_ptr<const IntegralGrid> build_denominator(const QuantizedVideo& video);

// weights[k] must have length d_k. Passing a prebuilt denominator shares it;
// otherwise one is built here.
IntegralStack build_integral_stack(const QuantizedVideo& video,
                                   const std::vector<std::vector<double>>& weights,
                                   std::string model_id = "",
                                   std::shared_ptr<const IntegralGrid> shared_denominator = nullptr);

// (Σ_k numerator_k over vol) / (denominator over vol) + bias. A point-free
// volume has no histogram; its score is bias alone, keeping the field finite.
double raw_score(const IntegralStack& stack, double bias, const Volume& vol);

// Raw scores over a full sliding lattice, in lattice order.
struct ScoreField {
    PositionLattice lattice;
    std::vector<double> scores;

    std::size_t size() const { return scores.size(); }
    Volume position(std::size_t i) const { return lattice.at(i); }
};

ScoreField sliding_scores(const IntegralStack& stack, double bias, const Size3& extent,
                          const Stride3& stride);

} // namespace exmoves
