#include "exmoves/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "exmoves/errors.hpp"
#include "exmoves/rng.hpp"

namespace exmoves {

std::vector<std::string> SyntheticDataset::train_ids() const {
    std::vector<std::string> out;
    for (const auto& info : infos)
        if (info.in_train_split)
            out.push_back(info.id);
    return out;
}

std::vector<std::string> SyntheticDataset::test_ids() const {
    std::vector<std::string> out;
    for (const auto& info : infos)
        if (!info.in_train_split)
            out.push_back(info.id);
    return out;
}

const QuantizedVideo& SyntheticDataset::video_by_id(const std::string& id) const {
    for (std::size_t i = 0; i < infos.size(); ++i)
        if (infos[i].id == id)
            return videos[i];
    throw Error("synthetic dataset has no video '" + id + "'");
}

const std::string& SyntheticDataset::label_of(const std::string& id) const {
    for (const auto& info : infos)
        if (info.id == id)
            return info.action_class;
    throw Error("synthetic dataset has no video '" + id + "'");
}

std::string synthetic_class_name(int class_index) {
    return "class" + std::to_string(class_index);
}

namespace {

Coord3 random_origin(Rng& rng, const Size3& dims, const Size3& extent) {
    return Coord3{rng_int(rng, 0, dims.r - extent.r), rng_int(rng, 0, dims.c - extent.c),
                  rng_int(rng, 0, dims.t - extent.t)};
}

QuantizedPoint random_point_in(Rng& rng, const Volume& vol, int channel, int codeword) {
    QuantizedPoint p;
    p.r = rng_int(rng, vol.origin.r, vol.origin.r + vol.extent.r - 1);
    p.c = rng_int(rng, vol.origin.c, vol.origin.c + vol.extent.c - 1);
    p.t = rng_int(rng, vol.origin.t, vol.origin.t + vol.extent.t - 1);
    p.channel = channel;
    p.codeword = codeword;
    return p;
}

void add_noise(Rng& rng, const SyntheticSpec& spec, int vocabulary,
               std::vector<QuantizedPoint>& points) {
    const long long count =
        std::llround(spec.noise_rate * static_cast<double>(spec.dims.voxels()));
    for (long long i = 0; i < count; ++i) {
        QuantizedPoint p;
        p.r = rng_int(rng, 0, spec.dims.r - 1);
        p.c = rng_int(rng, 0, spec.dims.c - 1);
        p.t = rng_int(rng, 0, spec.dims.t - 1);
        p.channel = 0;
        p.codeword = rng_int(rng, 0, vocabulary - 1);
        points.push_back(p);
    }
}

} // namespace

SyntheticDataset gen_synthetic(const SyntheticSpec& spec) {
    if (spec.classes < 2)
        throw ContractError("gen_synthetic: need at least two classes");
    if (spec.videos_per_class < 1 || spec.train_per_class < 1 ||
        spec.train_per_class > spec.videos_per_class)
        throw ContractError("gen_synthetic: bad class sizes");
    if (spec.exemplars_per_class < 1 || spec.exemplars_per_class > spec.train_per_class)
        throw ContractError("gen_synthetic: exemplars must come from the train split");
    if (!spec.motif_extent.positive() || !spec.dims.positive())
        throw DimensionError("gen_synthetic: dims and motif extent must be positive");
    if (spec.noise_rate < 0.0)
        throw ContractError("gen_synthetic: negative noise rate");

    const bool arrangement = spec.mode == "arrangement";
    if (!arrangement && spec.mode != "codeword")
        throw ContractError("gen_synthetic: unknown mode '" + spec.mode + "'");
    if (arrangement && spec.classes != 3)
        throw ContractError("gen_synthetic: arrangement mode requires exactly 3 classes");

    if (!spec.motif_extent.fits_within(spec.dims))
        throw DimensionError("gen_synthetic: motif extent exceeds video dims");
    if (arrangement) {
        // three boxes along time, separated by a full box length so no
        // exemplar-sized window can touch two of them
        const int needed = 5 * spec.motif_extent.t;
        if (spec.dims.t < needed)
            throw DimensionError("gen_synthetic: arrangement mode needs T >= " +
                                 std::to_string(needed));
    }

    const int motif_vocab = arrangement ? 6 : spec.classes;
    const int vocabulary = motif_vocab + spec.noise_codewords;

    // disjoint perfect matchings of the six motif codewords; one per class
    static constexpr int kMatchings[3][3][2] = {
        {{0, 1}, {2, 3}, {4, 5}},
        {{0, 3}, {2, 5}, {4, 1}},
        {{0, 5}, {2, 1}, {4, 3}},
    };

    SyntheticDataset data;
    data.codebook_sizes = {vocabulary};

    for (int cls = 0; cls < spec.classes; ++cls) {
        for (int vi = 0; vi < spec.videos_per_class; ++vi) {
            SyntheticVideoInfo info;
            info.id = "c" + std::to_string(cls) + "_v" +
                      (vi < 10 ? "0" : "") + std::to_string(vi);
            info.action_class = synthetic_class_name(cls);
            info.in_train_split = vi < spec.train_per_class;

            Rng rng(derive_seed(spec.seed, info.id));
            std::vector<QuantizedPoint> points;

            std::vector<Volume> boxes;
            if (!arrangement) {
                boxes.push_back(
                    Volume{random_origin(rng, spec.dims, spec.motif_extent), spec.motif_extent});
                info.motif_volume = boxes[0];
                for (int i = 0; i < spec.motif_points; ++i)
                    points.push_back(random_point_in(rng, boxes[0], 0, cls));
            } else {
                const int slot = 2 * spec.motif_extent.t;
                const int grid = std::max(1, spec.placement_grid);
                for (int j = 0; j < 3; ++j) {
                    Volume box;
                    box.extent = spec.motif_extent;
                    box.origin.r = grid * rng_int(rng, 0, (spec.dims.r - spec.motif_extent.r) / grid);
                    box.origin.c = grid * rng_int(rng, 0, (spec.dims.c - spec.motif_extent.c) / grid);
                    box.origin.t = j * slot;
                    boxes.push_back(box);
                    if (j == 0)
                        info.motif_volume = box;
                    // alternate the pair's codewords so per-video totals are
                    // exactly equal across classes
                    const int* pair = kMatchings[cls][j];
                    for (int i = 0; i < spec.motif_points; ++i)
                        points.push_back(random_point_in(rng, box, 0, pair[i % 2]));
                }
            }

            add_noise(rng, spec, vocabulary, points);

            data.videos.emplace_back(spec.dims, data.codebook_sizes, std::move(points), info.id);
            if (info.in_train_split && vi < spec.exemplars_per_class) {
                ExemplarAnnotation anno;
                anno.exemplar_id = "ex_" + info.id;
                anno.video_id = info.id;
                anno.action_class = info.action_class;
                // spread same-class exemplars over the planted boxes so their
                // trained detectors cover different motif contents
                anno.volume = boxes[static_cast<std::size_t>(vi) % boxes.size()];
                data.annotations.push_back(std::move(anno));
            }
            data.infos.push_back(std::move(info));
        }
    }
    return data;
}

} // namespace exmoves
