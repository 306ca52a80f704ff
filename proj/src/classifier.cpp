#include "exmoves/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "exmoves/errors.hpp"
#include "exmoves/parallel.hpp"

namespace exmoves {

ActionClassifierBank train_ovr(const std::vector<std::vector<double>>& features,
                               const std::vector<std::string>& labels, double c,
                               const OvrOptions& options) {
    if (features.size() != labels.size())
        throw ContractError("train_ovr: features/labels size mismatch");
    if (features.empty())
        throw DegenerateSetError("train_ovr: empty training set");

    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() < 2)
        throw DegenerateSetError("train_ovr: need at least two classes");

    ActionClassifierBank bank;
    bank.classes.assign(unique.begin(), unique.end());
    bank.c = c;
    bank.weights.resize(bank.classes.size());
    bank.biases.resize(bank.classes.size());

    parallel_for(bank.classes.size(), options.workers, [&](std::size_t k) {
        std::vector<SvmExample> examples;
        examples.reserve(features.size());
        for (std::size_t i = 0; i < features.size(); ++i)
            examples.push_back(SvmExample{features[i], labels[i] == bank.classes[k] ? 1 : -1});
        SvmSolution sol = solve_linear_svm(examples, c, c, options.solver);
        bank.weights[k] = std::move(sol.weights);
        bank.biases[k] = sol.bias;
    });
    return bank;
}

CvRecord tune_c(const std::vector<std::vector<double>>& features,
                const std::vector<std::string>& labels, const std::vector<double>& grid,
                int folds, const OvrOptions& options) {
    if (grid.empty())
        throw ContractError("tune_c: empty C grid");
    if (folds < 2 || static_cast<std::size_t>(folds) > features.size())
        throw ContractError("tune_c: folds must be in [2, n]");

    CvRecord record;
    record.grid = grid;
    record.folds = folds;
    for (double c : grid) {
        double hits = 0.0, total = 0.0;
        for (int fold = 0; fold < folds; ++fold) {
            std::vector<std::vector<double>> train_x, held_x;
            std::vector<std::string> train_y, held_y;
            for (std::size_t i = 0; i < features.size(); ++i) {
                const bool held = static_cast<int>(i % static_cast<std::size_t>(folds)) == fold;
                (held ? held_x : train_x).push_back(features[i]);
                (held ? held_y : train_y).push_back(labels[i]);
            }
            if (held_x.empty())
                continue;
            const ActionClassifierBank bank = train_ovr(train_x, train_y, c, options);
            hits += accuracy(bank, held_x, held_y) * static_cast<double>(held_x.size());
            total += static_cast<double>(held_x.size());
        }
        record.accuracy.push_back(total > 0.0 ? hits / total : 0.0);
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < record.accuracy.size(); ++i)
        if (record.accuracy[i] > record.accuracy[best])
            best = i;
    record.chosen_c = record.grid[best];
    return record;
}

Prediction predict(const ActionClassifierBank& bank, std::span<const double> descriptor) {
    if (bank.classes.empty())
        throw ContractError("predict: empty classifier bank");
    if (descriptor.size() != bank.dimension())
        throw IncompatibilityError("predict: descriptor length " +
                                   std::to_string(descriptor.size()) + " != classifier dimension " +
                                   std::to_string(bank.dimension()));
    Prediction pred;
    pred.scores.resize(bank.classes.size());
    for (std::size_t k = 0; k < bank.classes.size(); ++k) {
        double s = bank.biases[k];
        const auto& w = bank.weights[k];
        for (std::size_t d = 0; d < w.size(); ++d)
            s += w[d] * descriptor[d];
        pred.scores[k] = s;
    }
    pred.class_index = 0;
    for (std::size_t k = 1; k < pred.scores.size(); ++k)
        if (pred.scores[k] > pred.scores[pred.class_index])
            pred.class_index = k;
    return pred;
}

double accuracy(const ActionClassifierBank& bank,
                const std::vector<std::vector<double>>& features,
                const std::vector<std::string>& labels) {
    if (features.empty())
        return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < features.size(); ++i)
        if (bank.classes[predict(bank, features[i]).class_index] == labels[i])
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(features.size());
}

namespace {

std::vector<std::vector<double>> select_blocks(const std::vector<std::vector<double>>& features,
                                               const std::vector<std::size_t>& active,
                                               std::size_t block) {
    std::vector<std::vector<double>> out(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        out[i].reserve(active.size() * block);
        for (std::size_t a : active) {
            const double* begin = features[i].data() + a * block;
            out[i].insert(out[i].end(), begin, begin + block);
        }
    }
    return out;
}

} // namespace

RfeTrace rfe_rank(const std::vector<std::vector<double>>& train_features,
                  const std::vector<std::string>& train_labels,
                  const std::vector<std::vector<double>>& heldout_features,
                  const std::vector<std::string>& heldout_labels,
                  const BankLayout& layout, double c, std::size_t survivors,
                  const std::vector<std::string>& exemplar_ids,
                  const OvrOptions& options) {
    if (layout.n_exemplars == 0 || layout.block() == 0)
        throw ContractError("rfe_rank: empty layout");
    if (exemplar_ids.size() != layout.n_exemplars)
        throw IncompatibilityError("rfe_rank: exemplar id count does not match layout");
    if (survivors < 1 || survivors >= layout.n_exemplars)
        throw ContractError("rfe_rank: survivors must be in [1, n_exemplars)");
    for (const auto& f : train_features)
        if (f.size() != layout.dimension())
            throw IncompatibilityError("rfe_rank: descriptor length does not match layout");
    for (const auto& f : heldout_features)
        if (f.size() != layout.dimension())
            throw IncompatibilityError("rfe_rank: held-out descriptor length does not match layout");

    std::vector<std::size_t> active(layout.n_exemplars);
    std::iota(active.begin(), active.end(), 0);

    RfeTrace trace;
    const std::size_t block = layout.block();

    for (;;) {
        const auto train_view = select_blocks(train_features, active, block);
        const auto held_view = select_blocks(heldout_features, active, block);
        const ActionClassifierBank bank = train_ovr(train_view, train_labels, c, options);
        trace.accuracy_curve.push_back(accuracy(bank, held_view, heldout_labels));

        if (active.size() == survivors)
            break;

        // mean |w| over all classes and the exemplar's block entries
        std::size_t weakest = 0;
        double weakest_usage = std::numeric_limits<double>::infinity();
        for (std::size_t pos = 0; pos < active.size(); ++pos) {
            double usage = 0.0;
            for (const auto& w : bank.weights)
                for (std::size_t d = 0; d < block; ++d)
                    usage += std::abs(w[pos * block + d]);
            usage /= static_cast<double>(bank.weights.size() * block);
            if (usage < weakest_usage) {
                weakest_usage = usage;
                weakest = pos;
            }
        }
        trace.elimination_order.push_back(exemplar_ids[active[weakest]]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(weakest));
    }

    for (std::size_t a : active)
        trace.survivors.push_back(exemplar_ids[a]);
    return trace;
}

} // namespace exmoves
