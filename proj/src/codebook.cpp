#include "exmoves/codebook.hpp"

#include <cmath>
#include <limits>

#include "exmoves/errors.hpp"
#include "exmoves/rng.hpp"

namespace exmoves {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace

Codebook fit_codebook(const std::vector<std::vector<double>>& vectors, int d_k,
                      std::uint64_t seed, int max_iters, int channel) {
    if (d_k < 1)
        throw ContractError("fit_codebook: need at least one centroid");
    if (vectors.size() < static_cast<std::size_t>(d_k))
        throw DegenerateSetError("fit_codebook: fewer vectors (" +
                                 std::to_string(vectors.size()) + ") than centroids (" +
                                 std::to_string(d_k) + ")");
    const std::size_t dim = vectors[0].size();
    if (dim == 0)
        throw ContractError("fit_codebook: zero-dimensional vectors");
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw IncompatibilityError("fit_codebook: inconsistent vector dimensions");

    const std::size_t n = vectors.size();
    const std::size_t k = static_cast<std::size_t>(d_k);
    Rng rng(seed);

    // k-means++ seeding
    std::vector<std::vector<double>> centroids;
    centroids.reserve(k);
    centroids.push_back(vectors[rng_index(rng, n)]);
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i)
        d2[i] = sq_dist(vectors[i], centroids[0]);
    while (centroids.size() < k) {
        double total = 0.0;
        for (double d : d2)
            total += d;
        std::size_t pick;
        if (total <= 0.0) {
            pick = rng_index(rng, n); // all mass on chosen points already
        } else {
            const double x = rng_real(rng) * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (x < acc) {
                    pick = i;
                    break;
                }
            }
        }
        centroids.push_back(vectors[pick]);
        for (std::size_t i = 0; i < n; ++i)
            d2[i] = std::min(d2[i], sq_dist(vectors[i], centroids.back()));
    }

    std::vector<std::size_t> assign(n, k);
    std::vector<std::size_t> counts(k);
    int iters = 0;
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = sq_dist(vectors[i], centroids[0]);
            for (std::size_t j = 1; j < k; ++j) {
                const double d = sq_dist(vectors[i], centroids[j]);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        ++iters;
        // centroids now match the stored assignment, so quantizing the
        // training set reproduces it exactly
        if (!changed || iters >= max_iters)
            break;

        for (auto& c : centroids)
            c.assign(dim, 0.0);
        counts.assign(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[assign[i]];
            for (std::size_t d = 0; d < dim; ++d)
                centroids[assign[i]][d] += vectors[i][d];
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] == 0)
                continue;
            for (std::size_t d = 0; d < dim; ++d)
                centroids[j][d] /= static_cast<double>(counts[j]);
        }
        // re-seed empty clusters from the farthest point
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] != 0)
                continue;
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = sq_dist(vectors[i], centroids[assign[i]]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            centroids[j] = vectors[far];
            assign[far] = j;
            ++counts[j];
        }
    }

    Codebook cb;
    cb.channel = channel;
    cb.dimension = static_cast<int>(dim);
    cb.centroids = std::move(centroids);
    cb.seed = seed;
    cb.iterations = iters;
    return cb;
}

int quantize(const Codebook& codebook, std::span<const double> vector) {
    if (static_cast<int>(vector.size()) != codebook.dimension)
        throw IncompatibilityError("quantize: vector dimension " + std::to_string(vector.size()) +
                                   " != codebook dimension " + std::to_string(codebook.dimension));
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < codebook.centroids.size(); ++j) {
        const double d = sq_dist(vector, codebook.centroids[j]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(j);
        }
    }
    return best;
}

} // namespace exmoves
