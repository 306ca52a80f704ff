#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "exmoves/descriptor.hpp"
#include "exmoves/exemplar.hpp"
#include "exmoves/synthetic.hpp"

namespace exmoves {

// Every tunable of the pipeline lives here; the CLI loads one JSON file and
// threads it through all stages. Seeds are explicit config fields (never
// time-derived) so repeated runs are reproducible.
struct PipelineConfig {
    std::uint64_t seed = 12345;
    int workers = 1;

    // exemplar training
    Stride3 train_stride{4, 4, 4};
    double train_c = 1.0;
    int max_iterations = 10;
    int positives_per_iteration = 10;
    int negatives_per_video = 3;

    // descriptor extraction
    Stride3 extract_stride{8, 8, 4};
    std::vector<double> scales{1.0, 0.75, 0.5};
    int pyramid_levels = 3;
    bool pool_raw_scores = false;

    // action classification
    double classifier_c = 1.0;
    std::vector<double> classifier_c_grid{0.1, 1.0, 10.0};
    int classifier_cv_folds = 3;

    // codebooks
    int codebook_size = 64;
    int codebook_max_iterations = 100;

    SyntheticSpec synthetic;

    TrainParams train_params(std::uint64_t exemplar_seed) const;
    ExtractOptions extract_options() const;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const PipelineConfig& config);

} // namespace exmoves
