#pragma once

#include <cstddef>
#include <vector>

#include "exmoves/geometry.hpp"
#include "exmoves/video.hpp"

namespace exmoves {

struct SlidingBenchResult {
    std::size_t positions = 0;
    double mean_points_per_volume = 0.0;
    double naive_seconds = 0.0;
    double integral_seconds = 0.0;
    double speedup = 0.0;
    double max_abs_diff = 0.0; // between the two score fields
};

// Times dense sliding evaluation twice: once rescanning the point list per
// position, once through the integral stack (including its build). Both paths
// compute (Σ w_{i_p}) / |P(x)| + bias per position.
SlidingBenchResult run_sliding_bench(const QuantizedVideo& video,
                                     const std::vector<std::vector<double>>& weights,
                                     double bias, const Size3& extent, const Stride3& stride);

} // namespace exmoves
