#include "exmoves/video.hpp"

#include <utility>

#include "exmoves/errors.hpp"

namespace exmoves {

QuantizedVideo::QuantizedVideo(Size3 dims, std::vector<int> codebook_sizes,
                               std::vector<QuantizedPoint> points, std::string id)
    : dims_(dims),
      codebook_sizes_(std::move(codebook_sizes)),
      points_(std::move(points)),
      id_(std::move(id)) {
    if (!dims_.positive())
        throw DimensionError("QuantizedVideo: dims must be positive");
    if (codebook_sizes_.empty())
        throw DimensionError("QuantizedVideo: need at least one channel");
    for (int d : codebook_sizes_)
        if (d < 1)
            throw DimensionError("QuantizedVideo: codebook sizes must be >= 1");
    for (const auto& p : points_) {
        if (p.r < 0 || p.r >= dims_.r || p.c < 0 || p.c >= dims_.c || p.t < 0 || p.t >= dims_.t)
            throw DimensionError("QuantizedVideo: point outside grid");
        if (p.channel < 0 || p.channel >= channels())
            throw DimensionError("QuantizedVideo: point channel out of range");
        if (p.codeword < 0 || p.codeword >= codebook_sizes_[p.channel])
            throw DimensionError("QuantizedVideo: codeword out of range for channel");
    }
}

std::vector<double> CodewordHistogram::phi() const {
    std::size_t dim = 0;
    for (const auto& ch : counts)
        dim += ch.size();
    std::vector<double> out(dim, 0.0);
    if (total == 0)
        return out;
    std::size_t base = 0;
    for (const auto& ch : counts) {
        for (std::size_t j = 0; j < ch.size(); ++j)
            out[base + j] = static_cast<double>(ch[j]) / static_cast<double>(total);
        base += ch.size();
    }
    return out;
}

CodewordHistogram histogram(const QuantizedVideo& video, const Volume& vol) {
    if (!vol.valid_for(video.dims()))
        throw DimensionError("histogram: volume not inside video");
    CodewordHistogram h;
    h.counts.resize(video.channels());
    for (int k = 0; k < video.channels(); ++k)
        h.counts[k].assign(video.codebook_sizes()[k], 0);
    for (const auto& p : video.points()) {
        if (vol.contains({p.r, p.c, p.t})) {
            ++h.counts[p.channel][p.codeword];
            ++h.total;
        }
    }
    return h;
}

} // namespace exmoves
