#include <doctest.h>

#include "exmoves/errors.hpp"
#include "exmoves/geometry.hpp"
#include "support.hpp"

using namespace exmoves;
using namespace testsupport;

TEST_CASE("overlap_ratio basics") {
    const Volume a{{2, 3, 4}, {5, 6, 7}};
    CHECK(overlap_ratio(a, a) == doctest::Approx(1.0));

    const Volume b{{20, 20, 20}, {3, 3, 3}};
    CHECK(overlap_ratio(a, b) == doctest::Approx(0.0));
    CHECK(overlap_ratio(b, a) == doctest::Approx(0.0));

    // a covers exactly the left half of b along rows
    const Volume whole{{0, 0, 0}, {4, 4, 4}};
    const Volume half{{0, 0, 0}, {2, 4, 4}};
    CHECK(overlap_ratio(half, whole) == doctest::Approx(0.5));
    CHECK(overlap_ratio(whole, half) == doctest::Approx(1.0)); // half ⊆ whole
}

TEST_CASE("overlap_ratio counts voxels exactly") {
    Rng rng(11);
    const Size3 dims{12, 10, 9};
    for (int it = 0; it < 200; ++it) {
        const Volume a = random_volume(rng, dims);
        const Volume b = random_volume(rng, dims);
        long long inter = 0;
        for (int r = 0; r < dims.r; ++r)
            for (int c = 0; c < dims.c; ++c)
                for (int t = 0; t < dims.t; ++t)
                    if (a.contains({r, c, t}) && b.contains({r, c, t}))
                        ++inter;
        CHECK(overlap_ratio(a, b) ==
              doctest::Approx(static_cast<double>(inter) / static_cast<double>(b.voxel_count())));
    }
}

TEST_CASE("overlap_ratio is 1 exactly when b fits inside a") {
    Rng rng(12);
    const Size3 dims{10, 10, 10};
    int subset_seen = 0;
    for (int it = 0; it < 500; ++it) {
        const Volume a = random_volume(rng, dims);
        const Volume b = random_volume(rng, dims);
        const bool subset = intersection_voxels(a, b) == b.voxel_count();
        if (subset)
            ++subset_seen;
        CHECK((overlap_ratio(a, b) == 1.0) == subset);
    }
    CHECK(subset_seen > 0);
}

TEST_CASE("enumerate_positions counts") {
    CHECK(enumerate_positions({4, 4, 4}, {4, 4, 4}, {1, 1, 1}).size() == 1);
    CHECK(enumerate_positions({4, 4, 4}, {4, 4, 4}, {1, 1, 1})[0] ==
          Volume{{0, 0, 0}, {4, 4, 4}});
    CHECK(enumerate_positions({5, 4, 4}, {4, 4, 4}, {1, 1, 1}).size() == 2);
    CHECK(enumerate_positions({10, 10, 10}, {3, 3, 3}, {2, 2, 2}).size() == 64);
}

TEST_CASE("oversized extent yields zero positions, not an error") {
    CHECK(enumerate_positions({4, 4, 4}, {5, 4, 4}, {1, 1, 1}).empty());
    CHECK(enumerate_positions({4, 4, 4}, {9, 9, 9}, {2, 2, 2}).empty());
}

TEST_CASE("lattice ordering is row, column, then frame") {
    const auto positions = enumerate_positions({4, 4, 6}, {2, 2, 2}, {2, 2, 2});
    REQUIRE(positions.size() == 2 * 2 * 3);
    CHECK(positions[0].origin == Coord3{0, 0, 0});
    CHECK(positions[1].origin == Coord3{0, 0, 2});
    CHECK(positions[2].origin == Coord3{0, 0, 4});
    CHECK(positions[3].origin == Coord3{0, 2, 0});
    CHECK(positions[6].origin == Coord3{2, 0, 0});
}

TEST_CASE("lattice count matches the per-axis formula and direct enumeration") {
    Rng rng(13);
    for (int it = 0; it < 300; ++it) {
        const Size3 dims{rng_int(rng, 1, 14), rng_int(rng, 1, 14), rng_int(rng, 1, 14)};
        const Size3 extent{rng_int(rng, 1, 16), rng_int(rng, 1, 16), rng_int(rng, 1, 16)};
        const Stride3 stride{rng_int(rng, 1, 4), rng_int(rng, 1, 4), rng_int(rng, 1, 4)};

        std::size_t direct = 0;
        if (extent.fits_within(dims)) {
            for (int r = 0; r + extent.r <= dims.r; r += stride.r)
                for (int c = 0; c + extent.c <= dims.c; c += stride.c)
                    for (int t = 0; t + extent.t <= dims.t; t += stride.t)
                        ++direct;
        }
        auto per_axis = [](int dim, int ext, int s) {
            return ext > dim ? std::size_t{0}
                             : static_cast<std::size_t>((dim - ext + s) / s);
        };
        const std::size_t formula =
            per_axis(dims.r, extent.r, stride.r) * per_axis(dims.c, extent.c, stride.c) *
            per_axis(dims.t, extent.t, stride.t);
        const auto listed = enumerate_positions(dims, extent, stride);
        CHECK(listed.size() == direct);
        CHECK(listed.size() == formula);
        for (const auto& v : listed)
            CHECK(v.valid_for(dims));
    }
}

TEST_CASE("volume validity and centers") {
    const Size3 dims{8, 8, 8};
    CHECK(Volume{{0, 0, 0}, {8, 8, 8}}.valid_for(dims));
    CHECK_FALSE(Volume{{1, 0, 0}, {8, 8, 8}}.valid_for(dims));
    CHECK_FALSE(Volume{{-1, 0, 0}, {2, 2, 2}}.valid_for(dims));
    CHECK_FALSE(Volume{{0, 0, 0}, {0, 2, 2}}.valid_for(dims));
    CHECK(Volume{{2, 2, 2}, {1, 1, 1}}.center() == Coord3{2, 2, 2});
    CHECK(Volume{{2, 2, 2}, {4, 3, 2}}.center() == Coord3{4, 3, 3});
}

TEST_CASE("degenerate volumes are rejected by overlap_ratio") {
    CHECK_THROWS_AS(overlap_ratio(Volume{{0, 0, 0}, {0, 1, 1}}, Volume{{0, 0, 0}, {1, 1, 1}}),
                    DimensionError);
}
