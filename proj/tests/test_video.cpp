#include <doctest.h>

#include "exmoves/errors.hpp"
#include "exmoves/video.hpp"
#include "support.hpp"

using namespace exmoves;
using namespace testsupport;

TEST_CASE("histogram of a single point") {
    const QuantizedVideo video({4, 4, 4}, {16}, {{0, 0, 0, 0, 7}}, "v");
    const auto h = histogram(video, video.whole());
    CHECK(h.total == 1);
    CHECK(h.counts[0][7] == 1);
    long long sum = 0;
    for (long long c : h.counts[0])
        sum += c;
    CHECK(sum == 1);
}

TEST_CASE("histogram of a point-free region is zero") {
    const QuantizedVideo video({8, 8, 8}, {4, 4}, {{0, 0, 0, 0, 1}, {0, 0, 1, 1, 2}}, "v");
    const auto h = histogram(video, Volume{{4, 4, 4}, {4, 4, 4}});
    CHECK(h.total == 0);
    for (const auto& ch : h.counts)
        for (long long c : ch)
            CHECK(c == 0);
    CHECK(h.phi() == std::vector<double>(8, 0.0));
}

TEST_CASE("histogram matches direct enumeration on random volumes") {
    Rng rng(21);
    const QuantizedVideo video = random_video(rng, {20, 20, 20}, {6, 9}, 500);
    for (int it = 0; it < 50; ++it) {
        const Volume vol = random_volume(rng, video.dims());
        const auto h = histogram(video, vol);
        const auto expect = brute_counts(video, vol);
        CHECK(h.counts == expect);
        long long total = 0;
        for (const auto& ch : expect)
            for (long long c : ch)
                total += c;
        CHECK(h.total == total);
    }
}

TEST_CASE("histogram is additive over a disjoint split") {
    Rng rng(22);
    const QuantizedVideo video = random_video(rng, {16, 12, 10}, {8}, 400);
    for (int it = 0; it < 30; ++it) {
        Volume whole = random_volume(rng, video.dims());
        if (whole.extent.t < 2)
            whole.extent.t = 2;
        if (!whole.valid_for(video.dims()))
            continue;
        const int cut = rng_int(rng, 1, whole.extent.t - 1);
        Volume front = whole, back = whole;
        front.extent.t = cut;
        back.origin.t += cut;
        back.extent.t -= cut;

        const auto hw = histogram(video, whole);
        const auto hf = histogram(video, front);
        const auto hb = histogram(video, back);
        CHECK(hw.total == hf.total + hb.total);
        for (std::size_t k = 0; k < hw.counts.size(); ++k)
            for (std::size_t j = 0; j < hw.counts[k].size(); ++j)
                CHECK(hw.counts[k][j] == hf.counts[k][j] + hb.counts[k][j]);
    }
}

TEST_CASE("phi is the L1-normalized concatenation") {
    Rng rng(23);
    const QuantizedVideo video = random_video(rng, {10, 10, 10}, {4, 6}, 200);
    const auto h = histogram(video, video.whole());
    const auto phi = h.phi();
    REQUIRE(phi.size() == 10);
    double sum = 0.0;
    for (double v : phi) {
        CHECK(v >= 0.0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
    CHECK(phi[3] ==
          doctest::Approx(static_cast<double>(h.counts[0][3]) / static_cast<double>(h.total)));
    CHECK(phi[4 + 2] ==
          doctest::Approx(static_cast<double>(h.counts[1][2]) / static_cast<double>(h.total)));
}

TEST_CASE("histogram rejects volumes outside the video") {
    const QuantizedVideo video({4, 4, 4}, {2}, {}, "v");
    CHECK_THROWS_AS(histogram(video, Volume{{0, 0, 2}, {4, 4, 4}}), DimensionError);
}

TEST_CASE("video construction validates points") {
    CHECK_THROWS_AS(QuantizedVideo({4, 4, 4}, {2}, {{4, 0, 0, 0, 0}}), DimensionError);
    CHECK_THROWS_AS(QuantizedVideo({4, 4, 4}, {2}, {{0, 0, 0, 1, 0}}), DimensionError);
    CHECK_THROWS_AS(QuantizedVideo({4, 4, 4}, {2}, {{0, 0, 0, 0, 2}}), DimensionError);
    CHECK_THROWS_AS(QuantizedVideo({0, 4, 4}, {2}, {}), DimensionError);
    CHECK_THROWS_AS(QuantizedVideo({4, 4, 4}, {}, {}), DimensionError);

    // duplicate voxels are allowed: one point per channel per trajectory
    const QuantizedVideo ok({4, 4, 4}, {2, 2}, {{1, 1, 1, 0, 0}, {1, 1, 1, 1, 1}});
    CHECK(ok.points().size() == 2);
    CHECK(ok.total_codebook_size() == 4);
}

TEST_CASE("production-scale dictionary layouts") {
    // trajectory-style input: five 5000-word dictionaries concatenate to 25000
    const QuantizedVideo traj({4, 4, 4}, {5000, 5000, 5000, 5000, 5000}, {});
    CHECK(traj.channels() == 5);
    CHECK(traj.total_codebook_size() == 25000);

    // interest-point-style input: a single 5000-word dictionary
    const QuantizedVideo stip({4, 4, 4}, {5000}, {});
    CHECK(stip.total_codebook_size() == 5000);
}
