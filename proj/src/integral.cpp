#include "exmoves/integral.hpp"

#include <utility>

#include "exmoves/errors.hpp"

namespace exmoves {

IntegralGrid::IntegralGrid(Size3 dims, std::vector<double> prefix)
    : dims_(dims), v_(std::move(prefix)) {
    if (!dims_.positive())
        throw DimensionError("IntegralGrid: dims must be positive");
    if (v_.size() != static_cast<std::size_t>(dims_.voxels()))
        throw DimensionError("IntegralGrid: buffer size does not match dims");
}

IntegralGrid IntegralGrid::from_contributions(Size3 dims, std::vector<double> cells) {
    if (!dims.positive())
        throw DimensionError("IntegralGrid: dims must be positive");
    if (cells.size() != static_cast<std::size_t>(dims.voxels()))
        throw DimensionError("IntegralGrid: cell buffer size does not match dims");

    const int C = dims.c, T = dims.t;
    auto idx = [C, T](int r, int c, int t) {
        return (static_cast<std::size_t>(r) * C + c) * T + t;
    };
    // B(r,c,t) = h + B(r-1) + B(c-1) + B(t-1) - B(r-1,c-1) - B(r-1,t-1)
    //              - B(c-1,t-1) + B(r-1,c-1,t-1), missing indices read as 0.
    std::vector<double>& b = cells;
    for (int r = 0; r < dims.r; ++r) {
        for (int c = 0; c < C; ++c) {
            for (int t = 0; t < T; ++t) {
                double acc = b[idx(r, c, t)];
                if (r > 0) acc += b[idx(r - 1, c, t)];
                if (c > 0) acc += b[idx(r, c - 1, t)];
                if (t > 0) acc += b[idx(r, c, t - 1)];
                if (r > 0 && c > 0) acc -= b[idx(r - 1, c - 1, t)];
                if (r > 0 && t > 0) acc -= b[idx(r - 1, c, t - 1)];
                if (c > 0 && t > 0) acc -= b[idx(r, c - 1, t - 1)];
                if (r > 0 && c > 0 && t > 0) acc += b[idx(r - 1, c - 1, t - 1)];
                b[idx(r, c, t)] = acc;
            }
        }
    }
    return IntegralGrid(dims, std::move(b));
}

double IntegralGrid::box_sum(const Volume& vol) const {
    const int r0 = vol.origin.r - 1, c0 = vol.origin.c - 1, t0 = vol.origin.t - 1;
    const int r1 = vol.origin.r + vol.extent.r - 1;
    const int c1 = vol.origin.c + vol.extent.c - 1;
    const int t1 = vol.origin.t + vol.extent.t - 1;
    return at(r1, c1, t1) - at(r0, c1, t1) - at(r1, c0, t1) - at(r1, c1, t0) +
           at(r0, c0, t1) + at(r0, c1, t0) + at(r1, c0, t0) - at(r0, c0, t0);
}

double subvolume_sum(const IntegralGrid& grid, const Volume& vol) {
    if (!vol.valid_for(grid.dims()))
        throw DimensionError("subvolume_sum: volume not inside buffer");
    return grid.box_sum(vol);
}

std::shared_ptr<const IntegralGrid> build_denominator(const QuantizedVideo& video) {
    std::vector<double> cells(static_cast<std::size_t>(video.dims().voxels()), 0.0);
    const int C = video.dims().c, T = video.dims().t;
    for (const auto& p : video.points())
        cells[(static_cast<std::size_t>(p.r) * C + p.c) * T + p.t] += 1.0;
    return std::make_shared<IntegralGrid>(
        IntegralGrid::from_contributions(video.dims(), std::move(cells)));
}

IntegralStack build_integral_stack(const QuantizedVideo& video,
                                   const std::vector<std::vector<double>>& weights,
                                   std::string model_id,
                                   std::shared_ptr<const IntegralGrid> shared_denominator) {
    const int K = video.channels();
    if (static_cast<int>(weights.size()) != K)
        throw IncompatibilityError("build_integral_stack: model has " +
                                   std::to_string(weights.size()) + " weight vectors, video has " +
                                   std::to_string(K) + " channels");
    for (int k = 0; k < K; ++k)
        if (static_cast<int>(weights[k].size()) != video.codebook_sizes()[k])
            throw IncompatibilityError(
                "build_integral_stack: weight length mismatch on channel " + std::to_string(k));

    if (shared_denominator && shared_denominator->dims() != video.dims())
        throw IncompatibilityError("build_integral_stack: shared denominator dims mismatch");

    const int C = video.dims().c, T = video.dims().t;
    const std::size_t n = static_cast<std::size_t>(video.dims().voxels());
    std::vector<std::vector<double>> num_cells(K);
    for (auto& cells : num_cells)
        cells.assign(n, 0.0);
    for (const auto& p : video.points()) {
        const std::size_t i = (static_cast<std::size_t>(p.r) * C + p.c) * T + p.t;
        num_cells[p.channel][i] += weights[p.channel][p.codeword];
    }

    IntegralStack stack;
    stack.dims = video.dims();
    stack.model_id = std::move(model_id);
    stack.numerators.reserve(K);
    for (int k = 0; k < K; ++k)
        stack.numerators.push_back(
            IntegralGrid::from_contributions(video.dims(), std::move(num_cells[k])));
    stack.denominator = shared_denominator ? std::move(shared_denominator)
                                           : build_denominator(video);
    return stack;
}

double raw_score(const IntegralStack& stack, double bias, const Volume& vol) {
    if (!vol.valid_for(stack.dims))
        throw DimensionError("raw_score: volume not inside video");
    const double den = stack.denominator->box_sum(vol);
    if (den == 0.0)
        return bias;
    double num = 0.0;
    for (const auto& grid : stack.numerators)
        num += grid.box_sum(vol);
    return num / den + bias;
}

ScoreField sliding_scores(const IntegralStack& stack, double bias, const Size3& extent,
                          const Stride3& stride) {
    PositionLattice lattice(stack.dims, extent, stride);
    std::vector<double> scores(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Volume vol = lattice.at(i);
        const double den = stack.denominator->box_sum(vol);
        if (den == 0.0) {
            scores[i] = bias;
            continue;
        }
        double num = 0.0;
        for (const auto& grid : stack.numerators)
            num += grid.box_sum(vol);
        scores[i] = num / den + bias;
    }
    return ScoreField{std::move(lattice), std::move(scores)};
}

} // namespace exmoves
