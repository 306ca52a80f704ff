#pragma once

// Deterministic random SVM instances shared by the unit and acceptance suites.
// tests/dump_solver_cases emits them as JSON; tests/oracle/reference_solver.py
// solves each one with an off-the-shelf convex solver, and the resulting
// optimal objectives are frozen in solver_reference.hpp.

#include <vector>

#include "exmoves/rng.hpp"
#include "exmoves/svm_solver.hpp"

namespace testsupport {

struct SolverCase {
    std::vector<exmoves::SvmExample> examples;
    double c_pos = 1.0;
    double c_neg = 1.0;
};

inline std::vector<SolverCase> reference_solver_cases() {
    using namespace exmoves;
    constexpr int kCases = 20;
    constexpr int kExamples = 10;
    constexpr int kBins = 8;

    Rng rng(0x5eedULL);
    std::vector<SolverCase> cases;
    cases.reserve(kCases);
    for (int ci = 0; ci < kCases; ++ci) {
        SolverCase sc;
        sc.c_pos = rng_range(rng, 0.5, 4.0);
        sc.c_neg = rng_range(rng, 0.5, 4.0);
        const int n_pos = 2 + static_cast<int>(rng_index(rng, 3)); // 2..4 positives
        for (int i = 0; i < kExamples; ++i) {
            SvmExample ex;
            ex.label = i < n_pos ? 1 : -1;
            std::vector<int> counts(kBins, 0);
            const int total = 5 + static_cast<int>(rng_index(rng, 36));
            for (int p = 0; p < total; ++p)
                ++counts[rng_index(rng, kBins)];
            ex.phi.resize(kBins);
            for (int b = 0; b < kBins; ++b)
                ex.phi[b] = static_cast<double>(counts[b]) / static_cast<double>(total);
            sc.examples.push_back(std::move(ex));
        }
        cases.push_back(std::move(sc));
    }
    return cases;
}

} // namespace testsupport
