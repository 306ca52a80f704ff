#pragma once

#include <span>
#include <string>
#include <vector>

#include "exmoves/svm_solver.hpp"

namespace exmoves {

// Record of a C-grid search: mean cross-validation accuracy per candidate.
struct CvRecord {
    std::vector<double> grid;
    std::vector<double> accuracy;
    double chosen_c = 1.0;
    int folds = 0;
};

// One-vs-rest bank of linear action classifiers over pooled descriptors.
// Classes are kept sorted; prediction ties break toward the earlier class.
struct ActionClassifierBank {
    std::vector<std::string> classes;
    std::vector<std::vector<double>> weights; // one vector per class
    std::vector<double> biases;
    double c = 1.0;
    CvRecord cv; // empty grid when C was supplied directly

    std::size_t dimension() const { return weights.empty() ? 0 : weights[0].size(); }
};

struct Prediction {
    std::size_t class_index = 0;
    std::vector<double> scores;
};

struct OvrOptions {
    SvmSolverOptions solver;
    int workers = 1;
};

ActionClassifierBank train_ovr(const std::vector<std::vector<double>>& features,
                               const std::vector<std::string>& labels, double c,
                               const OvrOptions& options = {});

// k-fold cross-validation over a C grid (folds assigned round-robin by index,
// so the split is deterministic). Ties prefer the earlier grid entry.
CvRecord tune_c(const std::vector<std::vector<double>>& features,
                const std::vector<std::string>& labels, const std::vector<double>& grid,
                int folds = 3, const OvrOptions& options = {});

Prediction predict(const ActionClassifierBank& bank, std::span<const double> descriptor);

// Fraction of examples whose argmax class matches the label.
double accuracy(const ActionClassifierBank& bank,
                const std::vector<std::vector<double>>& features,
                const std::vector<std::string>& labels);

// Descriptor layout (exemplar-major, then scale, then cell); exemplar a owns
// the contiguous block [a * n_scales * n_cells, (a+1) * n_scales * n_cells).
struct BankLayout {
    std::size_t n_exemplars = 0;
    std::size_t n_scales = 0;
    std::size_t n_cells = 0;

    std::size_t block() const { return n_scales * n_cells; }
    std::size_t dimension() const { return n_exemplars * block(); }
};

struct RfeTrace {
    // Exemplars removed, least useful first; length n_exemplars - survivors.
    std::vector<std::string> elimination_order;
    // accuracy_curve[i] is the held-out accuracy after i eliminations, so
    // index 0 is the full bank.
    std::vector<double> accuracy_curve;
    std::vector<std::string> survivors;
};

// Multi-class recursive feature elimination over exemplar blocks: retrain the
// one-vs-rest bank from scratch, drop the exemplar whose block carries the
// smallest mean |w| across all classifiers, repeat until `survivors` remain.
// The held-out split is caller-supplied and only used for the accuracy curve.
RfeTrace rfe_rank(const std::vector<std::vector<double>>& train_features,
                  const std::vector<std::string>& train_labels,
                  const std::vector<std::vector<double>>& heldout_features,
                  const std::vector<std::string>& heldout_labels,
                  const BankLayout& layout, double c, std::size_t survivors,
                  const std::vector<std::string>& exemplar_ids,
                  const OvrOptions& options = {});

} // namespace exmoves
