#pragma once

#include <span>
#include <string>
#include <vector>

#include "exmoves/exemplar.hpp"
#include "exmoves/pyramid.hpp"
#include "exmoves/video.hpp"

namespace exmoves {

// Fixed-length pooled feature vector for one video. Layout is exemplar-major,
// then scale, then pyramid cell:
//   values[(a * N_s + s) * N_p + p]
// Entries are calibrated probabilities max-pooled per cell, 0 for cells that
// received no sliding positions.
struct ExmoveDescriptor {
    std::vector<double> values;
    std::size_t n_exemplars = 0;
    std::size_t n_scales = 0;
    std::size_t n_cells = 0;
    std::string bank_id;

    std::size_t size() const { return values.size(); }
    double at(std::size_t a, std::size_t s, std::size_t p) const {
        return values[(a * n_scales + s) * n_cells + p];
    }
};

struct ExtractOptions {
    Stride3 stride{8, 8, 4};
    bool pool_raw_scores = false; // ablation: pool uncalibrated scores instead
    int workers = 1;
};

// Slides every model at every scale over the video, converts raw scores to
// calibrated probabilities, and max-pools by the pyramid cell containing each
// sliding position's center voxel. The denominator integral buffer is built
// once and shared across the whole bank.
ExmoveDescriptor extract_descriptor(const QuantizedVideo& video,
                                    std::span<const ExMoveModel> bank,
                                    const PyramidSpec& pyramid,
                                    const ExtractOptions& options = {},
                                    const std::string& bank_id = "");

} // namespace exmoves
