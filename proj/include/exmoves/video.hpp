#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "exmoves/geometry.hpp"

namespace exmoves {

// One quantized low-level feature: a voxel position plus the codeword it was
// assigned in its channel's dictionary.
struct QuantizedPoint {
    int r = 0;
    int c = 0;
    int t = 0;
    int channel = 0;
    int codeword = 0;

    friend bool operator==(const QuantizedPoint&, const QuantizedPoint&) = default;
};

// An R×C×T grid populated by quantized feature points. K=1 for a single
// interest-point dictionary, K=5 for trajectory-style input where each
// trajectory contributes one point per channel. Immutable after construction.
class QuantizedVideo {
public:
    QuantizedVideo(Size3 dims, std::vector<int> codebook_sizes,
                   std::vector<QuantizedPoint> points, std::string id = "");

    const Size3& dims() const { return dims_; }
    int channels() const { return static_cast<int>(codebook_sizes_.size()); }
    const std::vector<int>& codebook_sizes() const { return codebook_sizes_; }
    const std::vector<QuantizedPoint>& points() const { return points_; }
    const std::string& id() const { return id_; }

    // Σ d_k, the concatenated dictionary size.
    int total_codebook_size() const {
        return std::accumulate(codebook_sizes_.begin(), codebook_sizes_.end(), 0);
    }

    Volume whole() const { return Volume{{0, 0, 0}, dims_}; }

private:
    Size3 dims_;
    std::vector<int> codebook_sizes_;
    std::vector<QuantizedPoint> points_;
    std::string id_;
};

// Per-channel codeword counts over some volume. total is the number of points
// counted across all channels; the L1-normalized view phi() divides the
// concatenated counts by total (zero vector when the volume holds no points).
struct CodewordHistogram {
    std::vector<std::vector<long long>> counts;
    long long total = 0;

    std::vector<double> phi() const;
};

// Counts of (channel, codeword) over the points inside vol.
CodewordHistogram histogram(const QuantizedVideo& video, const Volume& vol);

} // namespace exmoves
