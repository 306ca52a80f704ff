#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "exmoves/codebook.hpp"
#include "exmoves/errors.hpp"
#include "support.hpp"

using namespace exmoves;
using namespace testsupport;

namespace {

double distortion(const Codebook& cb, const std::vector<std::vector<double>>& vectors) {
    double total = 0.0;
    for (const auto& v : vectors) {
        double best = 1e300;
        for (const auto& c : cb.centroids) {
            double d = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i)
                d += (v[i] - c[i]) * (v[i] - c[i]);
            best = std::min(best, d);
        }
        total += best;
    }
    return total;
}

} // namespace

TEST_CASE("as many centroids as distinct vectors gives zero distortion") {
    std::vector<std::vector<double>> vectors{{0, 0}, {1, 0}, {0, 1}, {5, 5},
                                             {0, 0}, {1, 0}, {0, 1}, {5, 5}};
    const Codebook cb = fit_codebook(vectors, 4, 99, 50);
    CHECK(distortion(cb, vectors) == doctest::Approx(0.0));

    std::set<std::vector<double>> got(cb.centroids.begin(), cb.centroids.end());
    std::set<std::vector<double>> want{{0, 0}, {1, 0}, {0, 1}, {5, 5}};
    CHECK(got == want);
}

TEST_CASE("two well-separated blobs are recovered") {
    Rng rng(81);
    std::vector<std::vector<double>> vectors;
    const std::vector<double> mean_a{0.0, 0.0, 0.0}, mean_b{6.0, 6.0, 6.0};
    for (int i = 0; i < 200; ++i) {
        const auto& m = i % 2 == 0 ? mean_a : mean_b;
        std::vector<double> v(3);
        for (int d = 0; d < 3; ++d) {
            // sum of uniforms, roughly gaussian, sd ~0.05
            double g = 0.0;
            for (int s = 0; s < 12; ++s)
                g += rng_real(rng);
            v[static_cast<std::size_t>(d)] = m[static_cast<std::size_t>(d)] + (g - 6.0) * 0.05;
        }
        vectors.push_back(std::move(v));
    }
    const Codebook cb = fit_codebook(vectors, 2, 7, 100);
    REQUIRE(cb.centroids.size() == 2);

    auto near = [](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(d) < 0.1;
    };
    const bool order_ab = near(cb.centroids[0], mean_a) && near(cb.centroids[1], mean_b);
    const bool order_ba = near(cb.centroids[0], mean_b) && near(cb.centroids[1], mean_a);
    CHECK((order_ab || order_ba));
}

TEST_CASE("quantize basics and tie-breaking") {
    Codebook cb;
    cb.channel = 0;
    cb.dimension = 2;
    cb.centroids = {{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}};

    CHECK(quantize(cb, std::vector<double>{0.0, 0.0}) == 0);
    CHECK(quantize(cb, std::vector<double>{2.0, 0.0}) == 1);
    // midpoint of centroids 0 and 1: tie goes to the lower index
    CHECK(quantize(cb, std::vector<double>{1.0, 0.0}) == 0);
    CHECK_THROWS_AS(quantize(cb, std::vector<double>{1.0}), IncompatibilityError);
}

TEST_CASE("quantize matches an exhaustive nearest-centroid scan") {
    Rng rng(82);
    Codebook cb;
    cb.channel = 0;
    cb.dimension = 4;
    for (int j = 0; j < 9; ++j) {
        std::vector<double> c(4);
        for (auto& v : c)
            v = rng_range(rng, -1.0, 1.0);
        cb.centroids.push_back(std::move(c));
    }
    for (int it = 0; it < 200; ++it) {
        std::vector<double> x(4);
        for (auto& v : x)
            v = rng_range(rng, -1.0, 1.0);

        int best = 0;
        double best_d = 1e300;
        for (std::size_t j = 0; j < cb.centroids.size(); ++j) {
            double d = 0.0;
            for (int i = 0; i < 4; ++i)
                d += (x[static_cast<std::size_t>(i)] - cb.centroids[j][static_cast<std::size_t>(i)]) *
                     (x[static_cast<std::size_t>(i)] - cb.centroids[j][static_cast<std::size_t>(i)]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        CHECK(quantize(cb, x) == best);
    }
}

TEST_CASE("distortion is non-increasing across Lloyd iterations") {
    Rng rng(83);
    std::vector<std::vector<double>> vectors;
    for (int i = 0; i < 120; ++i) {
        std::vector<double> v(5);
        for (auto& x : v)
            x = rng_range(rng, 0.0, 1.0);
        vectors.push_back(std::move(v));
    }
    // same seed, growing iteration budgets: the distortion sequence of Lloyd
    double prev = 1e300;
    for (int iters = 1; iters <= 8; ++iters) {
        const Codebook cb = fit_codebook(vectors, 6, 12345, iters);
        const double d = distortion(cb, vectors);
        CHECK(d <= prev + 1e-9);
        prev = d;
    }
}

TEST_CASE("converged fit is a fixpoint of quantize") {
    Rng rng(84);
    std::vector<std::vector<double>> vectors;
    for (int i = 0; i < 150; ++i) {
        std::vector<double> v(3);
        for (auto& x : v)
            x = rng_range(rng, 0.0, 1.0);
        vectors.push_back(std::move(v));
    }
    const Codebook cb = fit_codebook(vectors, 5, 31, 500);

    // each centroid equals the mean of the vectors quantized to it
    std::vector<std::vector<double>> sums(5, std::vector<double>(3, 0.0));
    std::vector<int> counts(5, 0);
    for (const auto& v : vectors) {
        const int j = quantize(cb, v);
        ++counts[static_cast<std::size_t>(j)];
        for (int d = 0; d < 3; ++d)
            sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] +=
                v[static_cast<std::size_t>(d)];
    }
    for (int j = 0; j < 5; ++j) {
        REQUIRE(counts[static_cast<std::size_t>(j)] > 0);
        for (int d = 0; d < 3; ++d)
            CHECK(cb.centroids[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] ==
                  doctest::Approx(sums[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] /
                                  counts[static_cast<std::size_t>(j)])
                      .epsilon(1e-9));
    }
}

TEST_CASE("seeded fits are reproducible") {
    Rng rng(85);
    std::vector<std::vector<double>> vectors;
    for (int i = 0; i < 60; ++i)
        vectors.push_back({rng_real(rng), rng_real(rng)});
    const Codebook a = fit_codebook(vectors, 4, 2024, 50);
    const Codebook b = fit_codebook(vectors, 4, 2024, 50);
    CHECK(a.centroids == b.centroids);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("cardinality and dimension errors") {
    std::vector<std::vector<double>> three{{0.0}, {1.0}, {2.0}};
    CHECK_THROWS_AS(fit_codebook(three, 4, 1, 10), DegenerateSetError);
    std::vector<std::vector<double>> ragged{{0.0}, {1.0, 2.0}};
    CHECK_THROWS_AS(fit_codebook(ragged, 2, 1, 10), IncompatibilityError);
}
