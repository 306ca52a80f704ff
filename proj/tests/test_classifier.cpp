#include <doctest.h>

#include <cmath>

#include "exmoves/classifier.hpp"
#include "exmoves/errors.hpp"
#include "support.hpp"

using namespace exmoves;
using namespace testsupport;

TEST_CASE("orthogonal one-hot descriptors are perfectly separable") {
    std::vector<std::vector<double>> xs{{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<std::string> ys{"jump", "jump", "run", "walk"};
    const ActionClassifierBank bank = train_ovr(xs, ys, 10.0);
    CHECK(accuracy(bank, xs, ys) == doctest::Approx(1.0));
    CHECK(bank.classes == std::vector<std::string>{"jump", "run", "walk"});
}

TEST_CASE("label permutation leaves accuracy unchanged and permutes models") {
    Rng rng(71);
    std::vector<std::vector<double>> xs;
    std::vector<std::string> ys, ys_swapped;
    for (int i = 0; i < 30; ++i) {
        std::vector<double> x(6);
        const int cls = i % 3;
        for (int d = 0; d < 6; ++d)
            x[d] = rng_range(rng, 0.0, 0.3) + (d == cls ? 0.8 : 0.0);
        xs.push_back(std::move(x));
        ys.push_back("c" + std::to_string(cls));
        ys_swapped.push_back("c" + std::to_string((cls + 1) % 3)); // consistent renaming
    }
    const ActionClassifierBank a = train_ovr(xs, ys, 2.0);
    const ActionClassifierBank b = train_ovr(xs, ys_swapped, 2.0);
    CHECK(accuracy(a, xs, ys) == doctest::Approx(accuracy(b, xs, ys_swapped)));

    // model of class c under the renaming equals model of (c-1)%3 before it
    for (int c = 0; c < 3; ++c) {
        const auto& wa = a.weights[static_cast<std::size_t>(c)];
        const auto& wb = b.weights[static_cast<std::size_t>((c + 1) % 3)];
        for (std::size_t d = 0; d < wa.size(); ++d)
            CHECK(wa[d] == doctest::Approx(wb[d]).epsilon(1e-6));
    }
}

TEST_CASE("predict matches a brute-force score comparison") {
    Rng rng(72);
    ActionClassifierBank bank;
    bank.classes = {"a", "b", "c", "d"};
    for (int k = 0; k < 4; ++k) {
        std::vector<double> w(9);
        for (auto& v : w)
            v = rng_range(rng, -1.0, 1.0);
        bank.weights.push_back(std::move(w));
        bank.biases.push_back(rng_range(rng, -1.0, 1.0));
    }

    for (int it = 0; it < 100; ++it) {
        std::vector<double> x(9);
        for (auto& v : x)
            v = rng_range(rng, 0.0, 1.0);
        const Prediction pred = predict(bank, x);

        std::size_t best = 0;
        double best_score = -1e300;
        for (std::size_t k = 0; k < 4; ++k) {
            double s = bank.biases[k];
            for (int d = 0; d < 9; ++d)
                s += bank.weights[k][static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
            if (s > best_score) {
                best_score = s;
                best = k;
            }
            CHECK(pred.scores[k] == doctest::Approx(s));
        }
        CHECK(pred.class_index == best);
    }
}

TEST_CASE("zero descriptor picks the largest bias") {
    ActionClassifierBank bank;
    bank.classes = {"a", "b", "c"};
    bank.weights = {{1.0, 1.0}, {2.0, -1.0}, {0.5, 0.5}};
    bank.biases = {-0.2, 0.7, 0.1};
    const Prediction pred = predict(bank, std::vector<double>{0.0, 0.0});
    CHECK(pred.class_index == 1);
}

TEST_CASE("predict is invariant to uniform positive rescaling") {
    ActionClassifierBank bank;
    bank.classes = {"a", "b"};
    bank.weights = {{0.5, -0.3}, {-0.1, 0.8}};
    bank.biases = {0.2, -0.4};

    ActionClassifierBank scaled = bank;
    for (auto& w : scaled.weights)
        for (auto& v : w)
            v *= 3.5;
    for (auto& b : scaled.biases)
        b *= 3.5;

    Rng rng(73);
    for (int it = 0; it < 50; ++it) {
        std::vector<double> x{rng_range(rng, -1.0, 1.0), rng_range(rng, -1.0, 1.0)};
        CHECK(predict(bank, x).class_index == predict(scaled, x).class_index);
    }
}

TEST_CASE("ties break toward the earlier class") {
    ActionClassifierBank bank;
    bank.classes = {"a", "b"};
    bank.weights = {{1.0}, {1.0}};
    bank.biases = {0.5, 0.5};
    CHECK(predict(bank, std::vector<double>{2.0}).class_index == 0);
}

TEST_CASE("per-class objectives meet the long-run reference") {
    Rng rng(74);
    std::vector<std::vector<double>> xs;
    std::vector<std::string> ys;
    for (int i = 0; i < 24; ++i) {
        std::vector<double> x(5);
        const int cls = i % 3;
        for (int d = 0; d < 5; ++d)
            x[d] = rng_range(rng, 0.0, 0.4) + (d == cls ? rng_range(rng, 0.2, 0.6) : 0.0);
        xs.push_back(std::move(x));
        ys.push_back("c" + std::to_string(cls));
    }
    const double c = 1.3;
    const ActionClassifierBank bank = train_ovr(xs, ys, c);

    SvmSolverOptions longrun;
    longrun.epsilon = 1e-12;
    longrun.max_iterations = 20'000'000;
    for (std::size_t k = 0; k < bank.classes.size(); ++k) {
        std::vector<SvmExample> examples;
        for (std::size_t i = 0; i < xs.size(); ++i)
            examples.push_back(SvmExample{xs[i], ys[i] == bank.classes[k] ? 1 : -1});
        const double achieved = svm_objective(examples, bank.weights[k], bank.biases[k], c, c);
        const double reference = solve_linear_svm(examples, c, c, longrun).objective;
        CHECK(achieved <= reference * (1.0 + 1e-3));
    }
}

TEST_CASE("cross-validation picks a working C from the grid") {
    Rng rng(78);
    std::vector<std::vector<double>> xs;
    std::vector<std::string> ys;
    for (int i = 0; i < 36; ++i) {
        const int cls = i % 3;
        std::vector<double> x(5);
        for (auto& v : x)
            v = rng_range(rng, 0.0, 0.4);
        x[static_cast<std::size_t>(cls)] += rng_range(rng, 0.4, 0.8);
        xs.push_back(std::move(x));
        ys.push_back("c" + std::to_string(cls));
    }
    const CvRecord cv = tune_c(xs, ys, {0.01, 1.0, 10.0}, 3);
    REQUIRE(cv.grid.size() == 3);
    REQUIRE(cv.accuracy.size() == 3);
    CHECK(cv.folds == 3);
    double best = 0.0;
    for (std::size_t i = 0; i < cv.grid.size(); ++i) {
        if (cv.accuracy[i] > best) {
            best = cv.accuracy[i];
            CHECK(cv.accuracy[i] <= 1.0);
        }
        CHECK(cv.accuracy[i] >= 0.0);
    }
    // chosen_c attains the best recorded accuracy
    for (std::size_t i = 0; i < cv.grid.size(); ++i)
        if (cv.grid[i] == cv.chosen_c)
            CHECK(cv.accuracy[i] == doctest::Approx(best));

    CHECK_THROWS_AS(tune_c(xs, ys, {}, 3), ContractError);
    CHECK_THROWS_AS(tune_c(xs, ys, {1.0}, 1), ContractError);
}

TEST_CASE("degenerate classifier inputs are rejected") {
    std::vector<std::vector<double>> xs{{1, 0}, {0, 1}};
    std::vector<std::string> one_class{"a", "a"};
    CHECK_THROWS_AS(train_ovr(xs, one_class, 1.0), DegenerateSetError);
    CHECK_THROWS_AS(train_ovr({}, {}, 1.0), DegenerateSetError);

    ActionClassifierBank bank;
    bank.classes = {"a", "b"};
    bank.weights = {{1.0, 0.0}, {0.0, 1.0}};
    bank.biases = {0.0, 0.0};
    CHECK_THROWS_AS(predict(bank, std::vector<double>{1.0, 2.0, 3.0}), IncompatibilityError);
}

TEST_CASE("an exemplar with an all-zero block is eliminated first") {
    Rng rng(75);
    const BankLayout layout{4, 2, 3};
    std::vector<std::vector<double>> train, held;
    std::vector<std::string> train_y, held_y;
    for (int i = 0; i < 40; ++i) {
        std::vector<double> x(layout.dimension());
        const int cls = i % 2;
        for (std::size_t d = 0; d < x.size(); ++d)
            x[d] = rng_range(rng, 0.0, 0.2);
        // exemplars 0 and 2 carry the signal; exemplar 1 is a dead block
        x[0 * layout.block()] += cls == 0 ? 0.8 : 0.0;
        x[2 * layout.block()] += cls == 1 ? 0.8 : 0.0;
        for (std::size_t d = 1 * layout.block(); d < 2 * layout.block(); ++d)
            x[d] = 0.0;
        (i < 30 ? train : held).push_back(std::move(x));
        (i < 30 ? train_y : held_y).push_back("c" + std::to_string(cls));
    }
    const RfeTrace trace = rfe_rank(train, train_y, held, held_y, layout, 2.0, 2,
                                    {"e0", "e1", "e2", "e3"});
    REQUIRE(trace.elimination_order.size() == 2);
    CHECK(trace.elimination_order[0] == "e1");
    CHECK(trace.accuracy_curve.size() == 3);
}

TEST_CASE("single-step elimination removes the weakest block of the first bank") {
    Rng rng(76);
    const BankLayout layout{5, 1, 4};
    std::vector<std::vector<double>> xs;
    std::vector<std::string> ys;
    for (int i = 0; i < 30; ++i) {
        std::vector<double> x(layout.dimension());
        const int cls = i % 3;
        for (std::size_t d = 0; d < x.size(); ++d)
            x[d] = rng_range(rng, 0.0, 1.0);
        x[static_cast<std::size_t>(cls) * layout.block() + 1] += 1.5;
        xs.push_back(std::move(x));
        ys.push_back("c" + std::to_string(cls));
    }

    const ActionClassifierBank bank = train_ovr(xs, ys, 1.0);
    std::size_t expected = 0;
    double weakest = 1e300;
    for (std::size_t a = 0; a < layout.n_exemplars; ++a) {
        double usage = 0.0;
        for (const auto& w : bank.weights)
            for (std::size_t d = 0; d < layout.block(); ++d)
                usage += std::abs(w[a * layout.block() + d]);
        usage /= static_cast<double>(bank.weights.size() * layout.block());
        if (usage < weakest) {
            weakest = usage;
            expected = a;
        }
    }

    const RfeTrace trace = rfe_rank(xs, ys, xs, ys, layout, 1.0, layout.n_exemplars - 1,
                                    {"e0", "e1", "e2", "e3", "e4"});
    REQUIRE(trace.elimination_order.size() == 1);
    CHECK(trace.elimination_order[0] == "e" + std::to_string(expected));
}

TEST_CASE("planted informative exemplars survive elimination") {
    Rng rng(77);
    const BankLayout layout{8, 1, 3}; // exemplars 0..2 informative, 3..7 noise
    std::vector<std::vector<double>> train, held;
    std::vector<std::string> train_y, held_y;
    for (int i = 0; i < 48; ++i) {
        const int cls = i % 3;
        std::vector<double> x(layout.dimension());
        for (std::size_t d = 0; d < x.size(); ++d)
            x[d] = rng_range(rng, 0.0, 0.5);
        x[static_cast<std::size_t>(cls) * layout.block()] += 1.0;
        (i < 33 ? train : held).push_back(std::move(x));
        (i < 33 ? train_y : held_y).push_back("c" + std::to_string(cls));
    }
    const RfeTrace trace =
        rfe_rank(train, train_y, held, held_y, layout, 2.0, 3,
                 {"inf0", "inf1", "inf2", "n0", "n1", "n2", "n3", "n4"});
    CHECK(trace.survivors == std::vector<std::string>{"inf0", "inf1", "inf2"});
    CHECK(trace.accuracy_curve.back() == doctest::Approx(1.0));
}

TEST_CASE("rfe input validation") {
    const BankLayout layout{3, 1, 2};
    std::vector<std::vector<double>> xs{{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}};
    std::vector<std::string> ys{"a", "b"};
    CHECK_THROWS_AS(rfe_rank(xs, ys, xs, ys, layout, 1.0, 3, {"e0", "e1", "e2"}), ContractError);
    CHECK_THROWS_AS(rfe_rank(xs, ys, xs, ys, layout, 1.0, 1, {"e0"}), IncompatibilityError);
    std::vector<std::vector<double>> bad{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(rfe_rank(bad, ys, bad, ys, layout, 1.0, 1, {"e0", "e1", "e2"}),
                    IncompatibilityError);
}
