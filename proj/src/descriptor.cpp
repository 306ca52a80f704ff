#include "exmoves/descriptor.hpp"

#include <algorithm>

#include "exmoves/errors.hpp"
#include "exmoves/integral.hpp"
#include "exmoves/parallel.hpp"

namespace exmoves {

ExmoveDescriptor extract_descriptor(const QuantizedVideo& video,
                                    std::span<const ExMoveModel> bank,
                                    const PyramidSpec& pyramid,
                                    const ExtractOptions& options,
                                    const std::string& bank_id) {
    if (pyramid.dims() != video.dims())
        throw IncompatibilityError("extract_descriptor: pyramid built for different dims");
    for (const auto& model : bank) {
        if (!model.calibrated())
            throw ContractError("extract_descriptor: model '" + model.exemplar_id +
                                "' is not calibrated");
        if (model.codebook_sizes() != video.codebook_sizes())
            throw IncompatibilityError("extract_descriptor: model '" + model.exemplar_id +
                                       "' codebook layout does not match video");
    }

    const std::size_t n_a = bank.size();
    const std::size_t n_s = pyramid.scales().size();
    const std::size_t n_p = pyramid.cell_count();

    ExmoveDescriptor desc;
    desc.n_exemplars = n_a;
    desc.n_scales = n_s;
    desc.n_cells = n_p;
    desc.bank_id = bank_id;
    desc.values.assign(n_a * n_s * n_p, 0.0);

    const auto denominator = build_denominator(video);

    // One block of N_s * N_p entries per model; blocks are disjoint, so the
    // parallel loop is deterministic for any worker count.
    parallel_for(n_a, options.workers, [&](std::size_t a) {
        const ExMoveModel& model = bank[a];
        const IntegralStack stack =
            build_integral_stack(video, model.weights, model.exemplar_id, denominator);
        std::vector<bool> touched(n_p);
        for (std::size_t s = 0; s < n_s; ++s) {
            const Size3 extent = scaled_extent(model.exemplar_extent, pyramid.scales()[s]);
            if (!extent.fits_within(video.dims()))
                continue; // no positions at this scale; block stays 0
            const ScoreField field = sliding_scores(stack, model.bias, extent, options.stride);
            double* block = desc.values.data() + (a * n_s + s) * n_p;
            touched.assign(n_p, false);
            for (std::size_t i = 0; i < field.size(); ++i) {
                const double value = options.pool_raw_scores
                                         ? field.scores[i]
                                         : platt_probability(*model.platt, field.scores[i]);
                const Coord3 center = field.position(i).center();
                for (int level = 1; level <= pyramid.levels(); ++level) {
                    const std::size_t cell = pyramid.cell_containing(level, center);
                    block[cell] = touched[cell] ? std::max(block[cell], value) : value;
                    touched[cell] = true;
                }
            }
        }
    });

    return desc;
}

} // namespace exmoves
