#include "exmoves/bench.hpp"

#include <chrono>
#include <cmath>

#include "exmoves/integral.hpp"

namespace exmoves {

SlidingBenchResult run_sliding_bench(const QuantizedVideo& video,
                                     const std::vector<std::vector<double>>& weights,
                                     double bias, const Size3& extent, const Stride3& stride) {
    using clock = std::chrono::steady_clock;
    SlidingBenchResult result;

    const PositionLattice lattice(video.dims(), extent, stride);
    result.positions = lattice.size();
    if (result.positions == 0)
        return result;

    std::vector<double> naive(lattice.size());
    long long total_in_volume = 0;
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Volume vol = lattice.at(i);
        double sum = 0.0;
        long long count = 0;
        for (const auto& p : video.points()) {
            if (!vol.contains({p.r, p.c, p.t}))
                continue;
            sum += weights[p.channel][p.codeword];
            ++count;
        }
        total_in_volume += count;
        naive[i] = count == 0 ? bias : sum / static_cast<double>(count) + bias;
    }
    const auto t1 = clock::now();

    const IntegralStack stack = build_integral_stack(video, weights);
    const ScoreField field = sliding_scores(stack, bias, extent, stride);
    const auto t2 = clock::now();

    result.naive_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.integral_seconds = std::chrono::duration<double>(t2 - t1).count();
    result.speedup =
        result.integral_seconds > 0.0 ? result.naive_seconds / result.integral_seconds : 0.0;
    result.mean_points_per_volume =
        static_cast<double>(total_in_volume) / static_cast<double>(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i)
        result.max_abs_diff = std::max(result.max_abs_diff, std::abs(naive[i] - field.scores[i]));
    return result;
}

} // namespace exmoves
