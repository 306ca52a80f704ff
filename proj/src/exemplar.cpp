#include "exmoves/exemplar.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "exmoves/errors.hpp"
#include "exmoves/integral.hpp"
#include "exmoves/rng.hpp"

namespace exmoves {

double platt_probability(const PlattParams& platt, double raw_score) {
    const double f = platt.alpha * raw_score + platt.beta;
    if (f >= 0.0) {
        const double e = std::exp(-f);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(f));
}

PlattParams fit_platt(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size())
        throw ContractError("fit_platt: scores/labels size mismatch");
    double prior1 = 0.0, prior0 = 0.0;
    for (int y : labels)
        (y > 0 ? prior1 : prior0) += 1.0;
    if (prior1 == 0.0 || prior0 == 0.0)
        throw DegenerateSetError("fit_platt: need both labels to calibrate");

    // Newton iterations with backtracking line search on the regularized
    // log-likelihood, using the smoothed targets (N+1)/(N+2) and 1/(N+2).
    const int max_iter = 100;
    const double min_step = 1e-10;
    const double sigma = 1e-12;
    const std::size_t n = scores.size();

    const double hi_target = (prior1 + 1.0) / (prior1 + 2.0);
    const double lo_target = 1.0 / (prior0 + 2.0);
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i)
        target[i] = labels[i] > 0 ? hi_target : lo_target;

    double a = 0.0;
    double b = std::log((prior0 + 1.0) / (prior1 + 1.0));

    auto objective = [&](double pa, double pb) {
        double f = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = scores[i] * pa + pb;
            if (z >= 0.0)
                f += target[i] * z + std::log1p(std::exp(-z));
            else
                f += (target[i] - 1.0) * z + std::log1p(std::exp(z));
        }
        return f;
    };

    double fval = objective(a, b);
    for (int it = 0; it < max_iter; ++it) {
        double h11 = sigma, h22 = sigma, h21 = 0.0, g1 = 0.0, g2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = scores[i] * a + b;
            double p, q;
            if (z >= 0.0) {
                const double e = std::exp(-z);
                p = e / (1.0 + e);
                q = 1.0 / (1.0 + e);
            } else {
                const double e = std::exp(z);
                p = 1.0 / (1.0 + e);
                q = e / (1.0 + e);
            }
            const double d2 = p * q;
            h11 += scores[i] * scores[i] * d2;
            h22 += d2;
            h21 += scores[i] * d2;
            const double d1 = target[i] - p;
            g1 += scores[i] * d1;
            g2 += d1;
        }
        if (std::abs(g1) < 1e-5 && std::abs(g2) < 1e-5)
            break;

        const double det = h11 * h22 - h21 * h21;
        const double da = -(h22 * g1 - h21 * g2) / det;
        const double db = -(-h21 * g1 + h11 * g2) / det;
        const double gd = g1 * da + g2 * db;

        double step = 1.0;
        while (step >= min_step) {
            const double na = a + step * da;
            const double nb = b + step * db;
            const double nf = objective(na, nb);
            if (nf < fval + 1e-4 * step * gd) {
                a = na;
                b = nb;
                fval = nf;
                break;
            }
            step /= 2.0;
        }
        if (step < min_step)
            break;
    }
    return PlattParams{a, b};
}

std::vector<int> ExMoveModel::codebook_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(weights.size());
    for (const auto& w : weights)
        sizes.push_back(static_cast<int>(w.size()));
    return sizes;
}

std::vector<double> ExMoveModel::flat_weights() const {
    std::vector<double> flat;
    std::size_t total = 0;
    for (const auto& w : weights)
        total += w.size();
    flat.reserve(total);
    for (const auto& w : weights)
        flat.insert(flat.end(), w.begin(), w.end());
    return flat;
}

double ExMoveModel::raw_score_of(std::span<const double> phi) const {
    double s = bias;
    std::size_t base = 0;
    for (const auto& w : weights) {
        if (base + w.size() > phi.size())
            throw IncompatibilityError("raw_score_of: feature vector shorter than weights");
        for (std::size_t j = 0; j < w.size(); ++j)
            s += w[j] * phi[base + j];
        base += w.size();
    }
    if (base != phi.size())
        throw IncompatibilityError("raw_score_of: feature vector longer than weights");
    return s;
}

double ExMoveModel::probability_of(std::span<const double> phi) const {
    if (!platt)
        throw ContractError("probability_of: model is not calibrated");
    return platt_probability(*platt, raw_score_of(phi));
}

std::string ActiveSet::key(const std::string& video_id, const Volume& vol) {
    return video_id + '|' + std::to_string(vol.origin.r) + ',' + std::to_string(vol.origin.c) +
           ',' + std::to_string(vol.origin.t) + '|' + std::to_string(vol.extent.r) + ',' +
           std::to_string(vol.extent.c) + ',' + std::to_string(vol.extent.t);
}

bool ActiveSet::insert(ActiveEntry entry) {
    auto [it, fresh] = keys_.insert(key(entry.video_id, entry.volume));
    if (!fresh)
        return false;
    if (entry.label > 0)
        ++npos_;
    entries_.push_back(std::move(entry));
    return true;
}

bool ActiveSet::contains(const std::string& video_id, const Volume& vol) const {
    return keys_.count(key(video_id, vol)) > 0;
}

std::vector<SvmExample> ActiveSet::to_examples() const {
    std::vector<SvmExample> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(SvmExample{e.phi, e.label});
    return out;
}

SvmSolution solve_active_set(const ActiveSet& active, double c_pos, double c_neg,
                             const SvmSolverOptions& options) {
    const auto examples = active.to_examples();
    return solve_linear_svm(examples, c_pos, c_neg, options);
}

namespace {

struct Candidate {
    double score;
    std::size_t index;
};

std::vector<std::vector<double>> split_weights(const std::vector<double>& flat,
                                               const std::vector<int>& sizes) {
    std::vector<std::vector<double>> out;
    out.reserve(sizes.size());
    std::size_t base = 0;
    for (int d : sizes) {
        out.emplace_back(flat.begin() + base, flat.begin() + base + d);
        base += d;
    }
    return out;
}

} // namespace

TrainResult train_exmove(const QuantizedVideo& positive, const Volume& exemplar_volume,
                         std::span<const QuantizedVideo> negatives,
                         const std::string& exemplar_id, const TrainParams& params) {
    if (!exemplar_volume.valid_for(positive.dims()))
        throw DimensionError("train_exmove: exemplar volume not inside positive video");
    if (negatives.empty())
        throw DegenerateSetError("train_exmove: no negative videos supplied");
    for (const auto& neg : negatives)
        if (neg.codebook_sizes() != positive.codebook_sizes())
            throw IncompatibilityError("train_exmove: negative video '" + neg.id() +
                                       "' has a different codebook layout");

    const Size3 extent = exemplar_volume.extent;
    Rng rng(params.seed);

    ActiveSet active;
    {
        ActiveEntry ex;
        ex.video_id = positive.id();
        ex.volume = exemplar_volume;
        ex.label = 1;
        ex.origin = EntryOrigin::exemplar;
        ex.phi = histogram(positive, exemplar_volume).phi();
        active.insert(std::move(ex));
    }
    for (const auto& neg : negatives) {
        if (!extent.fits_within(neg.dims()))
            continue; // too small to hold an exemplar-shaped volume
        Volume vol;
        vol.extent = extent;
        vol.origin.r = rng_int(rng, 0, neg.dims().r - extent.r);
        vol.origin.c = rng_int(rng, 0, neg.dims().c - extent.c);
        vol.origin.t = rng_int(rng, 0, neg.dims().t - extent.t);
        ActiveEntry e;
        e.video_id = neg.id();
        e.volume = vol;
        e.label = -1;
        e.origin = EntryOrigin::random_init;
        e.phi = histogram(neg, vol).phi();
        active.insert(std::move(e));
    }
    if (active.negatives() == 0)
        throw DegenerateSetError("train_exmove: no negative video can hold the exemplar extent");

    // Denominator integral buffers are weight-independent; build each once and
    // share them across all mining iterations.
    auto positive_denominator = build_denominator(positive);
    std::vector<std::shared_ptr<const IntegralGrid>> negative_denominators(negatives.size());
    for (std::size_t i = 0; i < negatives.size(); ++i)
        if (extent.fits_within(negatives[i].dims()))
            negative_denominators[i] = build_denominator(negatives[i]);

    TrainResult result;
    std::vector<double> flat;
    double bias = 0.0;
    int iterations = 0;
    bool converged = false;

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        iterations = iter + 1;
        // C1/C2 rebalance the current class proportions around one knob.
        const double total = static_cast<double>(active.size());
        const double c_pos = params.c * (static_cast<double>(active.negatives()) / total);
        const double c_neg = params.c * (static_cast<double>(active.positives()) / total);
        SvmSolution sol = solve_active_set(active, c_pos, c_neg, params.solver);
        flat = std::move(sol.weights);
        bias = sol.bias;
        result.objectives.push_back(sol.objective);

        const auto channel_weights = split_weights(flat, positive.codebook_sizes());
        std::size_t added = 0;

        // false negatives: near-exemplar subvolumes of the positive video
        // scoring below the positive margin
        {
            IntegralStack stack = build_integral_stack(positive, channel_weights, exemplar_id,
                                                       positive_denominator);
            ScoreField field = sliding_scores(stack, bias, extent, params.stride);
            std::vector<Candidate> violators;
            for (std::size_t i = 0; i < field.size(); ++i) {
                if (field.scores[i] >= 1.0)
                    continue;
                if (overlap_ratio(field.position(i), exemplar_volume) <= 0.5)
                    continue;
                violators.push_back({field.scores[i], i});
            }
            std::sort(violators.begin(), violators.end(), [](const Candidate& a, const Candidate& b) {
                if (a.score != b.score)
                    return a.score < b.score;
                return a.index < b.index;
            });
            if (violators.size() > static_cast<std::size_t>(params.positives_per_iteration))
                violators.resize(static_cast<std::size_t>(params.positives_per_iteration));
            for (const auto& cand : violators) {
                const Volume vol = field.position(cand.index);
                if (active.contains(positive.id(), vol))
                    continue; // already active: re-mining it is a no-op
                ActiveEntry e;
                e.video_id = positive.id();
                e.volume = vol;
                e.label = 1;
                e.origin = EntryOrigin::mined_positive;
                e.phi = histogram(positive, vol).phi();
                e.score_at_mine = cand.score;
                active.insert(std::move(e));
                ++added;
            }
        }

        // false positives: subvolumes of each negative video scoring above
        // the negative margin
        for (std::size_t vi = 0; vi < negatives.size(); ++vi) {
            const auto& neg = negatives[vi];
            if (!extent.fits_within(neg.dims()))
                continue;
            IntegralStack stack = build_integral_stack(neg, channel_weights, exemplar_id,
                                                       negative_denominators[vi]);
            ScoreField field = sliding_scores(stack, bias, extent, params.stride);
            std::vector<Candidate> violators;
            for (std::size_t i = 0; i < field.size(); ++i)
                if (field.scores[i] > -1.0)
                    violators.push_back({field.scores[i], i});
            std::sort(violators.begin(), violators.end(), [](const Candidate& a, const Candidate& b) {
                if (a.score != b.score)
                    return a.score > b.score;
                return a.index < b.index;
            });
            if (violators.size() > static_cast<std::size_t>(params.negatives_per_video))
                violators.resize(static_cast<std::size_t>(params.negatives_per_video));
            for (const auto& cand : violators) {
                const Volume vol = field.position(cand.index);
                if (active.contains(neg.id(), vol))
                    continue;
                ActiveEntry e;
                e.video_id = neg.id();
                e.volume = vol;
                e.label = -1;
                e.origin = EntryOrigin::mined_negative;
                e.phi = histogram(neg, vol).phi();
                e.score_at_mine = cand.score;
                active.insert(std::move(e));
                ++added;
            }
        }

        if (added == 0) {
            converged = true;
            break;
        }
    }

    ExMoveModel model;
    model.exemplar_id = exemplar_id;
    model.weights = split_weights(flat, positive.codebook_sizes());
    model.bias = bias;
    model.exemplar_extent = extent;
    model.meta.iterations = iterations;
    model.meta.converged = converged;
    model.meta.active_set_size = active.size();
    model.meta.seed = params.seed;

    result.model = std::move(model);
    result.active = std::move(active);
    return result;
}

ExMoveModel calibrate(const ExMoveModel& model, const ActiveSet& final_active) {
    std::vector<double> scores;
    std::vector<int> labels;
    scores.reserve(final_active.size());
    labels.reserve(final_active.size());
    for (const auto& e : final_active.entries()) {
        if (e.phi.empty())
            throw ContractError("calibrate: active entry lacks a feature vector");
        scores.push_back(model.raw_score_of(e.phi));
        labels.push_back(e.label);
    }
    ExMoveModel out = model;
    out.platt = fit_platt(scores, labels);
    return out;
}

} // namespace exmoves
