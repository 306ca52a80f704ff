#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exmoves/exemplar.hpp"
#include "exmoves/video.hpp"

namespace exmoves {

// Generator for desk-scale planted-motif datasets: every stage of the pipeline
// can be exercised without real video.
//
// Modes:
//   "codeword"    : one motif box per video, densely filled with its class's
//                   codeword. Classes are separable from codeword marginals,
//                   so this is the easy setting used for training checks.
//   "arrangement" : three motif boxes per video (separated along time by a
//                   full box length) over a six-codeword motif vocabulary.
//                   Each class fills its boxes with a different perfect
//                   matching of codeword pairs (class 0: AB/CD/EF, class 1:
//                   AD/CF/EB, class 2: AF/CB/ED), split 50/50 inside a box.
//                   Every video therefore has the identical global codeword
//                   histogram, so only local co-occurrence carries the label;
//                   a pair mixture is never a convex combination of the other
//                   classes' mixtures, so every exemplar is linearly separable
//                   from its negatives. Requires exactly 3 classes.
//                   Box origins snap to placement_grid; with the motif extent
//                   a multiple of that grid and sliding strides dividing it,
//                   windows only ever intersect boxes in thick slabs, so
//                   normalized window histograms concentrate at the true box
//                   mixture instead of degenerating on few-point slivers.
struct SyntheticSpec {
    std::string mode = "codeword";
    int classes = 3;
    int videos_per_class = 30;
    int train_per_class = 20;     // first videos of each class form the train split
    int exemplars_per_class = 1;  // annotated among the train videos
    Size3 dims{32, 32, 32};
    Size3 motif_extent{12, 12, 12};
    int motif_points = 300;       // per motif box
    double noise_rate = 0.01;     // expected uniform background points per voxel
    int noise_codewords = 5;      // vocabulary beyond the motif codewords
    int placement_grid = 3;       // arrangement mode: box origins snap to this
    std::uint64_t seed = 777;

    friend bool operator==(const SyntheticSpec&, const SyntheticSpec&) = default;
};

struct SyntheticVideoInfo {
    std::string id;
    std::string action_class;
    bool in_train_split = false;
    Volume motif_volume; // the (first) planted box
};

struct SyntheticDataset {
    std::vector<QuantizedVideo> videos; // aligned with infos
    std::vector<SyntheticVideoInfo> infos;
    std::vector<ExemplarAnnotation> annotations;
    std::vector<int> codebook_sizes;

    std::vector<std::string> train_ids() const;
    std::vector<std::string> test_ids() const;
    const QuantizedVideo& video_by_id(const std::string& id) const;
    const std::string& label_of(const std::string& id) const;
};

std::string synthetic_class_name(int class_index);

// Deterministic under spec.seed; per-video streams are derived from the video
// id, so the result does not depend on generation order.
SyntheticDataset gen_synthetic(const SyntheticSpec& spec);

} // namespace exmoves
