#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace exmoves {

// One training example: a dense feature vector and a ±1 label.
struct SvmExample {
    std::vector<double> phi;
    int label = 1;
};

struct SvmSolverOptions {
    double epsilon = 1e-9;          // KKT violation gap at which to stop
    std::uint64_t max_iterations = 2'000'000;
};

struct SvmSolution {
    std::vector<double> weights;
    double bias = 0.0;
    double objective = 0.0;         // hinge objective achieved on the training set
    std::uint64_t iterations = 0;
    bool converged = false;
};

// Objective of the cost-weighted hinge SVM:
//   ||w||^2 + c_pos Σ_{y=+1} max(0, 1 - (wᵀphi + b)) + c_neg Σ_{y=-1} max(0, 1 + wᵀphi + b)
double svm_objective(std::span<const SvmExample> examples, std::span<const double> weights,
                     double bias, double c_pos, double c_neg);

// Minimizes the objective above over (w, b) with the bias unregularized.
// Solved in the dual by sequential minimal optimization on the maximal
// violating pair, which handles the equality constraint the free bias induces.
// Requires at least one example of each label and positive costs.
SvmSolution solve_linear_svm(std::span<const SvmExample> examples, double c_pos, double c_neg,
                             const SvmSolverOptions& options = {});

} // namespace exmoves
