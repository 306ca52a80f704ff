#include "exmoves/config.hpp"

#include <fstream>

#include <json.hpp>

#include "exmoves/errors.hpp"

namespace exmoves {

using nlohmann::json;

namespace {

json stride_to_json(const Stride3& s) { return json::array({s.r, s.c, s.t}); }
json size_to_json(const Size3& s) { return json::array({s.r, s.c, s.t}); }

Stride3 stride_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw FormatError("config: stride must be a 3-element array");
    return Stride3{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

Size3 size_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw FormatError("config: size must be a 3-element array");
    return Size3{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

} // namespace

TrainParams PipelineConfig::train_params(std::uint64_t exemplar_seed) const {
    TrainParams p;
    p.c = train_c;
    p.max_iterations = max_iterations;
    p.positives_per_iteration = positives_per_iteration;
    p.negatives_per_video = negatives_per_video;
    p.stride = train_stride;
    p.seed = exemplar_seed;
    return p;
}

ExtractOptions PipelineConfig::extract_options() const {
    ExtractOptions o;
    o.stride = extract_stride;
    o.pool_raw_scores = pool_raw_scores;
    o.workers = workers;
    return o;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FormatError("config: " + std::string(e.what()));
    }

    PipelineConfig c;
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);

    if (j.contains("train")) {
        const auto& t = j["train"];
        if (t.contains("stride"))
            c.train_stride = stride_from_json(t["stride"]);
        c.train_c = t.value("c", c.train_c);
        c.max_iterations = t.value("max_iterations", c.max_iterations);
        c.positives_per_iteration =
            t.value("positives_per_iteration", c.positives_per_iteration);
        c.negatives_per_video = t.value("negatives_per_video", c.negatives_per_video);
    }
    if (j.contains("extract")) {
        const auto& e = j["extract"];
        if (e.contains("stride"))
            c.extract_stride = stride_from_json(e["stride"]);
        if (e.contains("scales"))
            c.scales = e["scales"].get<std::vector<double>>();
        c.pyramid_levels = e.value("pyramid_levels", c.pyramid_levels);
        c.pool_raw_scores = e.value("pool_raw_scores", c.pool_raw_scores);
    }
    if (j.contains("classifier")) {
        const auto& cl = j["classifier"];
        c.classifier_c = cl.value("c", c.classifier_c);
        if (cl.contains("c_grid"))
            c.classifier_c_grid = cl["c_grid"].get<std::vector<double>>();
        c.classifier_cv_folds = cl.value("cv_folds", c.classifier_cv_folds);
    }
    if (j.contains("codebook")) {
        c.codebook_size = j["codebook"].value("size", c.codebook_size);
        c.codebook_max_iterations =
            j["codebook"].value("max_iterations", c.codebook_max_iterations);
    }
    if (j.contains("synthetic")) {
        const auto& s = j["synthetic"];
        c.synthetic.mode = s.value("mode", c.synthetic.mode);
        c.synthetic.classes = s.value("classes", c.synthetic.classes);
        c.synthetic.videos_per_class = s.value("videos_per_class", c.synthetic.videos_per_class);
        c.synthetic.train_per_class = s.value("train_per_class", c.synthetic.train_per_class);
        c.synthetic.exemplars_per_class =
            s.value("exemplars_per_class", c.synthetic.exemplars_per_class);
        if (s.contains("dims"))
            c.synthetic.dims = size_from_json(s["dims"]);
        if (s.contains("motif_extent"))
            c.synthetic.motif_extent = size_from_json(s["motif_extent"]);
        c.synthetic.motif_points = s.value("motif_points", c.synthetic.motif_points);
        c.synthetic.noise_rate = s.value("noise_rate", c.synthetic.noise_rate);
        c.synthetic.noise_codewords = s.value("noise_codewords", c.synthetic.noise_codewords);
        c.synthetic.placement_grid = s.value("placement_grid", c.synthetic.placement_grid);
        c.synthetic.seed = s.value("seed", c.synthetic.seed);
    }
    return c;
}

void save_config(const std::filesystem::path& path, const PipelineConfig& c) {
    json j;
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["train"] = {{"stride", stride_to_json(c.train_stride)},
                  {"c", c.train_c},
                  {"max_iterations", c.max_iterations},
                  {"positives_per_iteration", c.positives_per_iteration},
                  {"negatives_per_video", c.negatives_per_video}};
    j["extract"] = {{"stride", stride_to_json(c.extract_stride)},
                    {"scales", c.scales},
                    {"pyramid_levels", c.pyramid_levels},
                    {"pool_raw_scores", c.pool_raw_scores}};
    j["classifier"] = {{"c", c.classifier_c},
                       {"c_grid", c.classifier_c_grid},
                       {"cv_folds", c.classifier_cv_folds}};
    j["codebook"] = {{"size", c.codebook_size}, {"max_iterations", c.codebook_max_iterations}};
    j["synthetic"] = {{"mode", c.synthetic.mode},
                      {"classes", c.synthetic.classes},
                      {"videos_per_class", c.synthetic.videos_per_class},
                      {"train_per_class", c.synthetic.train_per_class},
                      {"exemplars_per_class", c.synthetic.exemplars_per_class},
                      {"dims", size_to_json(c.synthetic.dims)},
                      {"motif_extent", size_to_json(c.synthetic.motif_extent)},
                      {"motif_points", c.synthetic.motif_points},
                      {"noise_rate", c.synthetic.noise_rate},
                      {"noise_codewords", c.synthetic.noise_codewords},
                      {"placement_grid", c.synthetic.placement_grid},
                      {"seed", c.synthetic.seed}};

    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw Error("cannot open config '" + path.string() + "' for writing");
    out << j.dump(2) << '\n';
    if (!out)
        throw Error("config write failed");
}

} // namespace exmoves
