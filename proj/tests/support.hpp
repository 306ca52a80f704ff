#pragma once

// Shared helpers for the test suites: deterministic random instances and
// brute-force reference implementations kept independent of the library's
// fast paths.

#include <algorithm>
#include <cmath>
#include <vector>

#include "exmoves/exemplar.hpp"
#include "exmoves/geometry.hpp"
#include "exmoves/rng.hpp"
#include "exmoves/video.hpp"

namespace testsupport {

using namespace exmoves;

inline QuantizedVideo random_video(Rng& rng, const Size3& dims,
                                   const std::vector<int>& codebook_sizes,
                                   std::size_t n_points, const std::string& id = "rand") {
    std::vector<QuantizedPoint> points;
    points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        QuantizedPoint p;
        p.r = rng_int(rng, 0, dims.r - 1);
        p.c = rng_int(rng, 0, dims.c - 1);
        p.t = rng_int(rng, 0, dims.t - 1);
        p.channel = static_cast<int>(rng_index(rng, codebook_sizes.size()));
        p.codeword = rng_int(rng, 0, codebook_sizes[p.channel] - 1);
        points.push_back(p);
    }
    return QuantizedVideo(dims, codebook_sizes, std::move(points), id);
}

inline Volume random_volume(Rng& rng, const Size3& dims) {
    Volume v;
    v.extent.r = rng_int(rng, 1, dims.r);
    v.extent.c = rng_int(rng, 1, dims.c);
    v.extent.t = rng_int(rng, 1, dims.t);
    v.origin.r = rng_int(rng, 0, dims.r - v.extent.r);
    v.origin.c = rng_int(rng, 0, dims.c - v.extent.c);
    v.origin.t = rng_int(rng, 0, dims.t - v.extent.t);
    return v;
}

inline std::vector<std::vector<double>> random_weights(Rng& rng,
                                                       const std::vector<int>& codebook_sizes,
                                                       double lo = -2.0, double hi = 2.0) {
    std::vector<std::vector<double>> w;
    for (int d : codebook_sizes) {
        std::vector<double> v(static_cast<std::size_t>(d));
        for (auto& x : v)
            x = rng_range(rng, lo, hi);
        w.push_back(std::move(v));
    }
    return w;
}

// Independent histogram: plain scan with explicit bound checks.
inline std::vector<std::vector<long long>> brute_counts(const QuantizedVideo& video,
                                                        const Volume& vol) {
    std::vector<std::vector<long long>> counts(video.channels());
    for (int k = 0; k < video.channels(); ++k)
        counts[k].assign(video.codebook_sizes()[k], 0);
    for (const auto& p : video.points()) {
        const bool inside = p.r >= vol.origin.r && p.r < vol.origin.r + vol.extent.r &&
                            p.c >= vol.origin.c && p.c < vol.origin.c + vol.extent.c &&
                            p.t >= vol.origin.t && p.t < vol.origin.t + vol.extent.t;
        if (inside)
            ++counts[p.channel][p.codeword];
    }
    return counts;
}

// wᵀphi + b computed through the explicit normalized histogram.
inline double brute_score(const QuantizedVideo& video, const Volume& vol,
                          const std::vector<std::vector<double>>& weights, double bias) {
    const auto counts = brute_counts(video, vol);
    long long total = 0;
    for (const auto& ch : counts)
        for (long long c : ch)
            total += c;
    if (total == 0)
        return bias;
    double s = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        for (std::size_t j = 0; j < counts[k].size(); ++j)
            s += weights[k][j] * (static_cast<double>(counts[k][j]) / static_cast<double>(total));
    return s + bias;
}

// Prefix value at (r,c,t) by direct triple sum over the point list.
inline double brute_prefix_numerator(const QuantizedVideo& video,
                                     const std::vector<std::vector<double>>& weights, int channel,
                                     int r, int c, int t) {
    double s = 0.0;
    for (const auto& p : video.points())
        if (p.channel == channel && p.r <= r && p.c <= c && p.t <= t)
            s += weights[p.channel][p.codeword];
    return s;
}

inline double brute_prefix_denominator(const QuantizedVideo& video, int r, int c, int t) {
    double s = 0.0;
    for (const auto& p : video.points())
        if (p.r <= r && p.c <= c && p.t <= t)
            s += 1.0;
    return s;
}

inline bool close_rel(double a, double b, double rel = 1e-9, double abs_tol = 1e-9) {
    return std::abs(a - b) <= std::max(abs_tol, rel * std::max(std::abs(a), std::abs(b)));
}

// Area under the ROC curve of positive vs negative score samples.
inline double auc(std::vector<double> pos, std::vector<double> neg) {
    double wins = 0.0;
    for (double p : pos)
        for (double n : neg)
            wins += p > n ? 1.0 : (p == n ? 0.5 : 0.0);
    return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

} // namespace testsupport
