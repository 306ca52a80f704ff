#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exmoves/bench.hpp"
#include "exmoves/classifier.hpp"
#include "exmoves/codebook.hpp"
#include "exmoves/config.hpp"
#include "exmoves/descriptor.hpp"
#include "exmoves/errors.hpp"
#include "exmoves/exemplar.hpp"
#include "exmoves/integral.hpp"
#include "exmoves/io.hpp"
#include "exmoves/parallel.hpp"
#include "exmoves/rng.hpp"
#include "exmoves/synthetic.hpp"

namespace fs = std::filesystem;
using namespace exmoves;

namespace {

Size3 parse_triplet(const std::string& text, const char* what) {
    Size3 out;
    int parts[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        const std::string tok = comma == std::string::npos ? text.substr(start)
                                                           : text.substr(start, comma - start);
        if (tok.empty() || (comma == std::string::npos && i != 2))
            throw ContractError(std::string(what) + " must be 'a,b,c'");
        parts[i] = std::stoi(tok);
        start = comma + 1;
    }
    out.r = parts[0];
    out.c = parts[1];
    out.t = parts[2];
    return out;
}

std::map<std::string, std::string> label_map(const fs::path& path) {
    std::map<std::string, std::string> out;
    for (auto& [id, cls] : io::read_labels(path))
        out[id] = cls;
    return out;
}

std::vector<std::string> qpts_ids_in(const fs::path& dir) {
    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".qpts")
            ids.push_back(entry.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

QuantizedVideo load_video(const fs::path& dir, const std::string& id) {
    return io::read_qpts(dir / (id + ".qpts"));
}

struct DescriptorSubset {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;
};

DescriptorSubset select_rows(const io::DescriptorFile& file,
                             const std::optional<std::vector<std::string>>& keep) {
    DescriptorSubset out;
    if (!keep) {
        out.ids = file.video_ids;
        out.rows = file.rows;
        return out;
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < file.video_ids.size(); ++i)
        index[file.video_ids[i]] = i;
    for (const auto& id : *keep) {
        auto it = index.find(id);
        if (it == index.end())
            throw Error("descriptor file has no row for video '" + id + "'");
        out.ids.push_back(id);
        out.rows.push_back(file.rows[it->second]);
    }
    return out;
}

std::vector<std::string> labels_for(const std::vector<std::string>& ids,
                                    const std::map<std::string, std::string>& labels) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        auto it = labels.find(id);
        if (it == labels.end())
            throw Error("no label for video '" + id + "'");
        out.push_back(it->second);
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_gen_synthetic(const PipelineConfig& config, const fs::path& out_dir) {
    const SyntheticDataset data = gen_synthetic(config.synthetic);
    fs::create_directories(out_dir / "videos");

    std::vector<std::pair<std::string, std::string>> labels;
    for (std::size_t i = 0; i < data.videos.size(); ++i) {
        io::write_qpts(out_dir / "videos" / (data.infos[i].id + ".qpts"), data.videos[i]);
        labels.emplace_back(data.infos[i].id, data.infos[i].action_class);
    }
    io::write_labels(out_dir / "labels.txt", labels);
    io::write_annotations(out_dir / "annotations.txt", data.annotations);
    io::write_id_list(out_dir / "train.txt", data.train_ids());
    io::write_id_list(out_dir / "test.txt", data.test_ids());

    std::cout << "generated " << data.videos.size() << " videos, "
              << data.annotations.size() << " exemplar annotations in " << out_dir.string()
              << "\n";
    return 0;
}

int cmd_train_exmove(const PipelineConfig& config, const fs::path& videos_dir,
                     const fs::path& annotations_path, const fs::path& labels_path,
                     const std::optional<fs::path>& train_list,
                     const std::string& only_exemplar, const std::optional<fs::path>& out_bank,
                     const std::optional<fs::path>& out_model,
                     const std::optional<fs::path>& active_dir) {
    auto annotations = io::read_annotations(annotations_path);
    if (!only_exemplar.empty()) {
        std::erase_if(annotations, [&](const ExemplarAnnotation& a) {
            return a.exemplar_id != only_exemplar;
        });
        if (annotations.empty())
            throw Error("no annotation with exemplar id '" + only_exemplar + "'");
    }
    if (out_model && annotations.size() != 1)
        throw Error("--out-model needs exactly one exemplar; use --exemplar to select one");
    if (!out_model && !out_bank)
        throw Error("need --out-bank or --out-model");

    const auto labels = label_map(labels_path);
    std::vector<std::string> pool_ids;
    if (train_list)
        pool_ids = io::read_id_list(*train_list);
    else
        pool_ids = qpts_ids_in(videos_dir);

    std::map<std::string, QuantizedVideo> cache;
    for (const auto& id : pool_ids)
        cache.emplace(id, load_video(videos_dir, id));
    for (const auto& anno : annotations)
        if (!cache.count(anno.video_id))
            cache.emplace(anno.video_id, load_video(videos_dir, anno.video_id));

    std::vector<TrainResult> results(annotations.size());
    parallel_for(annotations.size(), config.workers, [&](std::size_t i) {
        const auto& anno = annotations[i];
        auto label_it = labels.find(anno.video_id);
        if (label_it == labels.end())
            throw Error("no label for exemplar video '" + anno.video_id + "'");

        std::vector<QuantizedVideo> negatives;
        for (const auto& id : pool_ids) {
            auto it = labels.find(id);
            if (it == labels.end())
                throw Error("no label for video '" + id + "'");
            if (it->second != label_it->second)
                negatives.push_back(cache.at(id));
        }

        const TrainParams params =
            config.train_params(derive_seed(config.seed, anno.exemplar_id));
        results[i] = train_exmove(cache.at(anno.video_id), anno.volume, negatives,
                                  anno.exemplar_id, params);
    });

    if (active_dir) {
        fs::create_directories(*active_dir);
        for (std::size_t i = 0; i < results.size(); ++i)
            io::write_active_set(*active_dir / (annotations[i].exemplar_id + ".acts"),
                                 results[i].active, results[i].model);
    }

    if (out_model) {
        io::write_model(*out_model, results[0].model);
    } else {
        io::ExmoveBank bank;
        bank.id = out_bank->stem().string();
        for (auto& r : results)
            bank.models.push_back(std::move(r.model));
        io::write_bank(*out_bank, bank);
    }

    std::size_t converged = 0;
    for (const auto& r : results)
        if (r.model.meta.converged)
            ++converged;
    std::cout << "trained " << results.size() << " exemplar models (" << converged
              << " converged before the iteration cap)\n";
    return 0;
}

int cmd_calibrate(const std::optional<fs::path>& bank_path,
                  const std::optional<fs::path>& model_path, const fs::path& active_dir,
                  const fs::path& out_path) {
    auto calibrate_from_file = [&](ExMoveModel model) {
        const auto acts = io::read_active_set(active_dir / (model.exemplar_id + ".acts"));
        model.platt = fit_platt(acts.scores, acts.labels);
        return model;
    };

    if (bank_path) {
        io::ExmoveBank bank = io::read_bank(*bank_path);
        for (auto& model : bank.models)
            model = calibrate_from_file(std::move(model));
        io::write_bank(out_path, bank);
        std::cout << "calibrated " << bank.models.size() << " models\n";
    } else if (model_path) {
        io::write_model(out_path, calibrate_from_file(io::read_model(*model_path)));
        std::cout << "calibrated 1 model\n";
    } else {
        throw Error("need --bank or --model");
    }
    return 0;
}

int cmd_extract(const PipelineConfig& config, const fs::path& bank_path,
                const fs::path& videos_dir, const std::optional<fs::path>& list_path,
                const fs::path& out_path) {
    const io::ExmoveBank bank = io::read_bank(bank_path);
    if (bank.models.empty())
        throw Error("bank is empty");

    std::vector<std::string> ids =
        list_path ? io::read_id_list(*list_path) : qpts_ids_in(videos_dir);

    std::vector<std::vector<double>> rows(ids.size());
    BankLayout layout;
    layout.n_exemplars = bank.models.size();
    layout.n_scales = config.scales.size();

    // cell count depends only on levels, not dims
    {
        std::size_t cells = 0;
        for (int level = 1; level <= config.pyramid_levels; ++level)
            cells += static_cast<std::size_t>(1) << (3 * (level - 1));
        layout.n_cells = cells;
    }

    parallel_for(ids.size(), config.workers, [&](std::size_t i) {
        const QuantizedVideo video = load_video(videos_dir, ids[i]);
        const PyramidSpec pyramid(video.dims(), config.pyramid_levels, config.scales);
        const ExmoveDescriptor desc =
            extract_descriptor(video, bank.models, pyramid, config.extract_options(), bank.id);
        rows[i] = desc.values;
    });

    io::write_descriptors(out_path, layout, ids, rows);
    std::cout << "extracted " << ids.size() << " descriptors, length "
              << layout.dimension() << " (" << layout.n_exemplars << " exemplars x "
              << layout.n_scales << " scales x " << layout.n_cells << " cells)\n";
    return 0;
}

int cmd_train_classifier(const PipelineConfig& config, const fs::path& descriptors_path,
                         const fs::path& labels_path,
                         const std::optional<fs::path>& list_path, bool tune,
                         const fs::path& out_path) {
    const auto file = io::read_descriptors(descriptors_path);
    std::optional<std::vector<std::string>> keep;
    if (list_path)
        keep = io::read_id_list(*list_path);
    const DescriptorSubset subset = select_rows(file, keep);
    const auto labels = labels_for(subset.ids, label_map(labels_path));

    OvrOptions options;
    options.workers = config.workers;

    double c = config.classifier_c;
    CvRecord cv;
    if (tune) {
        cv = tune_c(subset.rows, labels, config.classifier_c_grid, config.classifier_cv_folds,
                    options);
        c = cv.chosen_c;
        std::cout << "cross-validation chose C=" << c << "\n";
    }
    ActionClassifierBank bank = train_ovr(subset.rows, labels, c, options);
    bank.cv = cv;
    io::write_classifier(out_path, bank);
    std::cout << "trained " << bank.classes.size() << "-class one-vs-rest classifier on "
              << subset.rows.size() << " descriptors\n";
    return 0;
}

int cmd_predict(const fs::path& classifier_path, const fs::path& descriptors_path,
                const std::optional<fs::path>& list_path,
                const std::optional<fs::path>& labels_path, const fs::path& out_path) {
    const ActionClassifierBank bank = io::read_classifier(classifier_path);
    const auto file = io::read_descriptors(descriptors_path);
    std::optional<std::vector<std::string>> keep;
    if (list_path)
        keep = io::read_id_list(*list_path);
    const DescriptorSubset subset = select_rows(file, keep);

    std::vector<io::PredictionRow> rows;
    rows.reserve(subset.ids.size());
    for (std::size_t i = 0; i < subset.ids.size(); ++i) {
        const Prediction pred = predict(bank, subset.rows[i]);
        rows.push_back({subset.ids[i], bank.classes[pred.class_index], pred.scores});
    }
    io::write_predictions(out_path, bank.classes, rows);

    if (labels_path) {
        const auto labels = label_map(*labels_path);
        std::size_t hits = 0;
        for (const auto& row : rows) {
            auto it = labels.find(row.video_id);
            if (it != labels.end() && it->second == row.predicted_class)
                ++hits;
        }
        std::cout << "accuracy " << (rows.empty() ? 0.0
                                                  : static_cast<double>(hits) /
                                                        static_cast<double>(rows.size()))
                  << " on " << rows.size() << " videos\n";
    } else {
        std::cout << "predicted " << rows.size() << " videos\n";
    }
    return 0;
}

int cmd_rfe(const PipelineConfig& config, const fs::path& descriptors_path,
            const fs::path& labels_path, const fs::path& train_list,
            const fs::path& heldout_list, std::size_t survivors,
            const std::optional<fs::path>& bank_path, const fs::path& out_path) {
    const auto file = io::read_descriptors(descriptors_path);
    const auto labels = label_map(labels_path);

    const DescriptorSubset train = select_rows(file, io::read_id_list(train_list));
    const DescriptorSubset held = select_rows(file, io::read_id_list(heldout_list));

    std::vector<std::string> exemplar_ids;
    if (bank_path) {
        const io::ExmoveBank bank = io::read_bank(*bank_path);
        if (bank.models.size() != file.layout.n_exemplars)
            throw IncompatibilityError("bank size does not match descriptor layout");
        for (const auto& m : bank.models)
            exemplar_ids.push_back(m.exemplar_id);
    } else {
        for (std::size_t a = 0; a < file.layout.n_exemplars; ++a)
            exemplar_ids.push_back("ex" + std::to_string(a));
    }

    OvrOptions options;
    options.workers = config.workers;
    const RfeTrace trace =
        rfe_rank(train.rows, labels_for(train.ids, labels), held.rows,
                 labels_for(held.ids, labels), file.layout, config.classifier_c, survivors,
                 exemplar_ids, options);
    io::write_rfe_trace(out_path, trace);

    std::cout << "eliminated " << trace.elimination_order.size() << " exemplars, kept "
              << trace.survivors.size() << "; full-bank accuracy "
              << trace.accuracy_curve.front() << ", final " << trace.accuracy_curve.back()
              << "\n";
    return 0;
}

int cmd_quantize(const PipelineConfig& config, const fs::path& input_path,
                 const std::vector<fs::path>& codebook_paths, bool fit,
                 const std::optional<fs::path>& save_codebook_dir, const fs::path& out_path) {
    const io::RawPoints raw = io::read_raw_points(input_path);
    const int channels = static_cast<int>(raw.vector_dims.size());

    std::vector<Codebook> codebooks;
    if (fit) {
        for (int k = 0; k < channels; ++k) {
            std::vector<std::vector<double>> vectors;
            for (const auto& p : raw.points)
                if (p.channel == k)
                    vectors.push_back(p.vector);
            codebooks.push_back(fit_codebook(
                vectors, config.codebook_size,
                derive_seed(config.seed, "codebook/" + std::to_string(k)),
                config.codebook_max_iterations, k));
        }
        if (save_codebook_dir) {
            fs::create_directories(*save_codebook_dir);
            for (const auto& cb : codebooks)
                io::write_codebook(*save_codebook_dir / ("ch" + std::to_string(cb.channel) +
                                                         ".excb"),
                                   cb);
        }
    } else {
        if (static_cast<int>(codebook_paths.size()) != channels)
            throw Error("need one --codebook per channel (" + std::to_string(channels) +
                        " channels)");
        for (const auto& path : codebook_paths)
            codebooks.push_back(io::read_codebook(path));
        for (int k = 0; k < channels; ++k)
            if (codebooks[k].dimension != raw.vector_dims[k])
                throw IncompatibilityError("codebook " + std::to_string(k) +
                                           " dimension does not match input vectors");
    }

    std::vector<int> sizes;
    for (const auto& cb : codebooks)
        sizes.push_back(static_cast<int>(cb.centroids.size()));

    std::vector<QuantizedPoint> points;
    points.reserve(raw.points.size());
    for (const auto& p : raw.points) {
        QuantizedPoint q;
        q.r = p.r;
        q.c = p.c;
        q.t = p.t;
        q.channel = p.channel;
        q.codeword = quantize(codebooks[p.channel], p.vector);
        points.push_back(q);
    }

    io::write_qpts(out_path,
                   QuantizedVideo(raw.dims, sizes, points, out_path.stem().string()));
    std::cout << "quantized " << points.size() << " points over " << channels
              << " channel(s)\n";
    return 0;
}

int cmd_bench_sliding(const PipelineConfig& config, const std::optional<fs::path>& video_path,
                      const std::string& dims_text, long long point_count,
                      const std::string& extent_text, const std::string& stride_text) {
    const Size3 extent = parse_triplet(extent_text, "--extent");
    const Size3 stride_size = parse_triplet(stride_text, "--stride");
    const Stride3 stride{stride_size.r, stride_size.c, stride_size.t};

    std::optional<QuantizedVideo> video;
    if (video_path) {
        video = io::read_qpts(*video_path);
    } else {
        const Size3 dims = parse_triplet(dims_text, "--dims");
        Rng rng(config.seed);
        const int vocab = std::max(2, config.codebook_size);
        std::vector<QuantizedPoint> points;
        points.reserve(static_cast<std::size_t>(point_count));
        for (long long i = 0; i < point_count; ++i) {
            QuantizedPoint p;
            p.r = rng_int(rng, 0, dims.r - 1);
            p.c = rng_int(rng, 0, dims.c - 1);
            p.t = rng_int(rng, 0, dims.t - 1);
            p.channel = 0;
            p.codeword = rng_int(rng, 0, vocab - 1);
            points.push_back(p);
        }
        video.emplace(dims, std::vector<int>{vocab}, std::move(points), "bench");
    }

    Rng wrng(derive_seed(config.seed, "bench-weights"));
    std::vector<std::vector<double>> weights;
    for (int d : video->codebook_sizes()) {
        std::vector<double> w(static_cast<std::size_t>(d));
        for (auto& v : w)
            v = rng_range(wrng, -1.0, 1.0);
        weights.push_back(std::move(w));
    }

    const SlidingBenchResult r = run_sliding_bench(*video, weights, -0.5, extent, stride);
    std::cout << "video " << video->dims().r << "x" << video->dims().c << "x" << video->dims().t
              << ", " << video->points().size() << " points\n"
              << "positions " << r.positions << "\n"
              << "mean_points_per_volume " << r.mean_points_per_volume << "\n"
              << "naive_seconds " << r.naive_seconds << "\n"
              << "integral_seconds " << r.integral_seconds << "\n"
              << "speedup " << r.speedup << "\n"
              << "max_abs_diff " << r.max_abs_diff << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EXMOVES: exemplar-movement classifiers and descriptors for action recognition"};
    app.require_subcommand(1);

    std::string config_path;
    std::string videos_dir, annotations_path, labels_path, out_path, only_exemplar;
    std::string bank_path, model_path, classifier_path, descriptors_path, active_dir;
    std::string train_list, heldout_list, list_path, out_dir, input_path;
    std::string dims_text = "64,64,64", extent_text = "16,16,16", stride_text = "2,2,2";
    std::vector<std::string> codebook_paths;
    std::string save_codebook_dir, video_path;
    long long point_count = 10000;
    std::size_t survivors = 1;
    bool fit_flag = false;
    bool tune_flag = false;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "pipeline config (JSON)")->required();
    };

    auto* gen = app.add_subcommand("gen-synthetic", "generate a planted-motif dataset");
    add_config(gen);
    gen->add_option("--out-dir", out_dir, "output directory")->required();

    auto* train = app.add_subcommand("train-exmove", "train exemplar models");
    add_config(train);
    train->add_option("--videos", videos_dir, "directory of .qpts videos")->required();
    train->add_option("--annotations", annotations_path, "exemplar annotations")->required();
    train->add_option("--labels", labels_path, "video labels")->required();
    train->add_option("--train-list", train_list, "ids eligible as negatives");
    train->add_option("--exemplar", only_exemplar, "train only this exemplar id");
    train->add_option("--out-bank", bank_path, "write all models as a bank");
    train->add_option("--out-model", model_path, "write a single model");
    train->add_option("--active-dir", active_dir, "persist final active sets here");

    auto* cal = app.add_subcommand("calibrate", "fit sigmoid calibration from active sets");
    add_config(cal);
    cal->add_option("--bank", bank_path, "uncalibrated bank");
    cal->add_option("--model", model_path, "uncalibrated single model");
    cal->add_option("--active-dir", active_dir, "directory of .acts files")->required();
    cal->add_option("--out", out_path, "calibrated output path")->required();

    auto* ext = app.add_subcommand("extract", "extract pooled descriptors");
    add_config(ext);
    ext->add_option("--bank", bank_path, "calibrated bank")->required();
    ext->add_option("--videos", videos_dir, "directory of .qpts videos")->required();
    ext->add_option("--list", list_path, "subset of video ids");
    ext->add_option("--out", out_path, "descriptor file")->required();

    auto* tc = app.add_subcommand("train-classifier", "train one-vs-rest linear SVMs");
    add_config(tc);
    tc->add_option("--descriptors", descriptors_path, "descriptor file")->required();
    tc->add_option("--labels", labels_path, "video labels")->required();
    tc->add_option("--list", list_path, "training video ids");
    tc->add_flag("--tune", tune_flag, "pick C by cross-validation over the config grid");
    tc->add_option("--out", out_path, "classifier file")->required();

    auto* pr = app.add_subcommand("predict", "classify descriptors");
    add_config(pr);
    pr->add_option("--classifier", classifier_path, "classifier file")->required();
    pr->add_option("--descriptors", descriptors_path, "descriptor file")->required();
    pr->add_option("--list", list_path, "subset of video ids");
    pr->add_option("--labels", labels_path, "labels for accuracy reporting");
    pr->add_option("--out", out_path, "predictions file")->required();

    auto* rfe = app.add_subcommand("rfe", "rank exemplars by recursive feature elimination");
    add_config(rfe);
    rfe->add_option("--descriptors", descriptors_path, "descriptor file")->required();
    rfe->add_option("--labels", labels_path, "video labels")->required();
    rfe->add_option("--train-list", train_list, "training ids")->required();
    rfe->add_option("--heldout-list", heldout_list, "held-out ids")->required();
    rfe->add_option("--survivors", survivors, "exemplars to keep")->required();
    rfe->add_option("--bank", bank_path, "bank providing exemplar ids");
    rfe->add_option("--out", out_path, "trace file")->required();

    auto* qz = app.add_subcommand("quantize", "quantize raw feature vectors to codewords");
    add_config(qz);
    qz->add_option("--input", input_path, "raw points file (.rpts)")->required();
    qz->add_option("--codebook", codebook_paths, "codebook per channel, in channel order");
    qz->add_flag("--fit", fit_flag, "fit codebooks from the input vectors");
    qz->add_option("--save-codebook-dir", save_codebook_dir, "write fitted codebooks here");
    qz->add_option("--out", out_path, "output .qpts")->required();

    auto* bench = app.add_subcommand("bench-sliding", "time naive vs integral sliding scores");
    add_config(bench);
    bench->add_option("--video", video_path, "existing .qpts video");
    bench->add_option("--dims", dims_text, "generated video dims (default 64,64,64)");
    bench->add_option("--points", point_count, "generated point count (default 10000)");
    bench->add_option("--extent", extent_text, "sliding extent (default 16,16,16)");
    bench->add_option("--stride", stride_text, "sliding stride (default 2,2,2)");

    CLI11_PARSE(app, argc, argv);

    try {
        const PipelineConfig config = load_config(config_path);
        auto opt_path = [](const std::string& s) {
            return s.empty() ? std::optional<fs::path>{} : std::optional<fs::path>{s};
        };

        if (gen->parsed())
            return cmd_gen_synthetic(config, out_dir);
        if (train->parsed())
            return cmd_train_exmove(config, videos_dir, annotations_path, labels_path,
                                    opt_path(train_list), only_exemplar, opt_path(bank_path),
                                    opt_path(model_path), opt_path(active_dir));
        if (cal->parsed())
            return cmd_calibrate(opt_path(bank_path), opt_path(model_path), active_dir,
                                 out_path);
        if (ext->parsed())
            return cmd_extract(config, bank_path, videos_dir, opt_path(list_path), out_path);
        if (tc->parsed())
            return cmd_train_classifier(config, descriptors_path, labels_path,
                                        opt_path(list_path), tune_flag, out_path);
        if (pr->parsed())
            return cmd_predict(classifier_path, descriptors_path, opt_path(list_path),
                               opt_path(labels_path), out_path);
        if (rfe->parsed())
            return cmd_rfe(config, descriptors_path, labels_path, train_list, heldout_list,
                           survivors, opt_path(bank_path), out_path);
        if (qz->parsed()) {
            std::vector<fs::path> cb_paths(codebook_paths.begin(), codebook_paths.end());
            return cmd_quantize(config, input_path, cb_paths, fit_flag,
                                opt_path(save_codebook_dir), out_path);
        }
        if (bench->parsed())
            return cmd_bench_sliding(config, opt_path(video_path), dims_text, point_count,
                                     extent_text, stride_text);
        throw Error("no subcommand");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
