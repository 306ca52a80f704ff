#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "exmoves/geometry.hpp"
#include "exmoves/svm_solver.hpp"
#include "exmoves/video.hpp"

namespace exmoves {

// Sigmoid calibration parameters: p(s) = 1 / (1 + exp(alpha*s + beta)).
// alpha comes out negative whenever positives score higher than negatives.
struct PlattParams {
    double alpha = 0.0;
    double beta = 0.0;
};

double platt_probability(const PlattParams& platt, double raw_score);

// Fits (alpha, beta) by maximizing the regularized log-likelihood of the
// labels with Platt's smoothed targets, via Newton steps with backtracking.
// Needs both labels present.
PlattParams fit_platt(std::span<const double> scores, std::span<const int> labels);

struct TrainingMeta {
    int iterations = 0;
    bool converged = false;
    std::size_t active_set_size = 0;
    std::uint64_t seed = 0;
};

// One exemplar-movement classifier: per-channel linear weights over the
// codeword dictionaries, a bias, the exemplar volume's shape, and (after
// calibration) the sigmoid mapping raw scores to probabilities.
struct ExMoveModel {
    std::string exemplar_id;
    std::vector<std::vector<double>> weights;
    double bias = 0.0;
    Size3 exemplar_extent;
    std::optional<PlattParams> platt;
    TrainingMeta meta;

    bool calibrated() const { return platt.has_value(); }
    std::vector<int> codebook_sizes() const;
    std::vector<double> flat_weights() const;

    // wᵀphi + b for a concatenated feature vector.
    double raw_score_of(std::span<const double> phi) const;
    double probability_of(std::span<const double> phi) const;
};

// Hand-selected (or generated) action volume inside an exemplar video.
struct ExemplarAnnotation {
    std::string exemplar_id;
    std::string video_id;
    std::string action_class;
    Volume volume;
};

enum class EntryOrigin { exemplar, random_init, mined_positive, mined_negative };

struct ActiveEntry {
    std::string video_id;
    Volume volume;
    int label = 1;
    EntryOrigin origin = EntryOrigin::exemplar;
    std::vector<double> phi;       // concatenated over channels; empty when loaded from disk
    double score_at_mine = 0.0;    // raw score under the weights that mined it
};

// Grows monotonically during training; one slot per distinct (video, volume).
class ActiveSet {
public:
    // Returns false when the (video, volume) pair is already present.
    bool insert(ActiveEntry entry);
    bool contains(const std::string& video_id, const Volume& vol) const;

    const std::vector<ActiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t positives() const { return npos_; }
    std::size_t negatives() const { return entries_.size() - npos_; }

    std::vector<SvmExample> to_examples() const;

private:
    static std::string key(const std::string& video_id, const Volume& vol);

    std::vector<ActiveEntry> entries_;
    std::unordered_set<std::string> keys_;
    std::size_t npos_ = 0;
};

struct TrainParams {
    double c = 1.0;                    // split into per-class costs each iteration
    int max_iterations = 10;
    int positives_per_iteration = 10;  // cap on freshly mined near-exemplar volumes
    int negatives_per_video = 3;       // cap on freshly mined violators per negative video
    Stride3 stride{4, 4, 4};
    std::uint64_t seed = 1;
    SvmSolverOptions solver;
};

struct TrainResult {
    ExMoveModel model;                 // uncalibrated
    ActiveSet active;
    std::vector<double> objectives;    // hinge objective after each solve
};

// Cost-weighted hinge solve restricted to the active set; thin wrapper that
// feeds the entries' feature vectors to the generic solver.
SvmSolution solve_active_set(const ActiveSet& active, double c_pos, double c_neg,
                             const SvmSolverOptions& options = {});

// Alternating train/mine loop: solve on the active set, then add the worst
// unseen violators: subvolumes of the positive video overlapping the exemplar
// by more than half that score below +1, and subvolumes of each negative video
// that score above -1. Stops when an iteration adds nothing or after
// max_iterations rounds. Mining slides the current model over every video
// through its integral stack; denominator buffers are built once per video.
TrainResult train_exmove(const QuantizedVideo& positive, const Volume& exemplar_volume,
                         std::span<const QuantizedVideo> negatives,
                         const std::string& exemplar_id, const TrainParams& params);

// Platt-fits on the active set at training completion and returns the
// calibrated model. Entries must carry feature vectors.
ExMoveModel calibrate(const ExMoveModel& model, const ActiveSet& final_active);

} // namespace exmoves
