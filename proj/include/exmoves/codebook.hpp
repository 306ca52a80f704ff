#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace exmoves {

// k-means dictionary for one feature channel.
struct Codebook {
    int channel = 0;
    int dimension = 0;
    std::vector<std::vector<double>> centroids;
    std::uint64_t seed = 0;
    int iterations = 0;
};

// Lloyd iterations from seeded k-means++ initialization. Empty clusters are
// re-seeded at the point farthest from its assigned centroid. Stops at
// max_iters or when the assignment reaches a fixpoint.
Codebook fit_codebook(const std::vector<std::vector<double>>& vectors, int d_k,
                      std::uint64_t seed, int max_iters = 100, int channel = 0);

// Index of the nearest centroid (Euclidean); ties go to the lowest index.
int quantize(const Codebook& codebook, std::span<const double> vector);

} // namespace exmoves
