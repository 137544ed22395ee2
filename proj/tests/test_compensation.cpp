#include <doctest.h>

#include "cdmc/compensation.hpp"
#include "test_helpers.hpp"

using namespace cdmc;

TEST_CASE("flip_delta by hand") {
    PrimalProblem p;
    p.Q.resize(2, 2);
    p.Q << 0, 1, 1, 0;
    p.c = Eigen::VectorXd::Zero(2);
    Eigen::VectorXd x(2);
    x << 1, 1;
    CHECK(flip_delta(p, x, 0) == -2.0); // P goes 1 → −1
    CHECK_THROWS_AS(flip_delta(p, x, 2), InputError);
}

TEST_CASE("flipping twice is a no-op on the objective") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        PrimalProblem p;
        p.Q = cdmc::testing::random_symmetric(rng, n);
        p.c = cdmc::testing::random_vector(rng, n);
        Eigen::VectorXd x = cdmc::testing::random_signs(rng, n);
        const int i = static_cast<int>(rng() % n);
        const double d1 = flip_delta(p, x, i);
        x(i) = -x(i);
        const double d2 = flip_delta(p, x, i);
        CHECK(d1 + d2 == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("flip_delta matches full re-evaluation") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 8;
        PrimalProblem p;
        p.Q = cdmc::testing::random_symmetric(rng, n);
        p.c = cdmc::testing::random_vector(rng, n);
        const Eigen::VectorXd x = cdmc::testing::random_signs(rng, n);
        const double base = primal_value(p, x);
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd flipped = x;
            flipped(i) = -flipped(i);
            const double direct = primal_value(p, flipped) - base;
            CHECK(flip_delta(p, x, i) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("compensate hand trace and fixpoint") {
    PrimalProblem p;
    p.Q.resize(2, 2);
    p.Q << 0, 1, 1, 0;
    p.c = Eigen::VectorXd::Zero(2);
    Eigen::VectorXd x(2);
    x << 1, 1;
    const CompensationResult r = compensate(p, x);
    CHECK(primal_value(p, r.x) == -1.0);
    CHECK(r.x(0) == -1.0); // accept-first order flips the first coordinate
    CHECK(r.x(1) == 1.0);

    const CompensationResult again = compensate(p, r.x);
    CHECK(again.x == r.x);
    CHECK(again.passes == 1); // single clean pass at the fixpoint
}

TEST_CASE("compensation never increases the objective and ends 1-flip stable") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        PrimalProblem p;
        p.Q = cdmc::testing::random_symmetric(rng, n);
        p.c = cdmc::testing::random_vector(rng, n);
        const Eigen::VectorXd x0 = cdmc::testing::random_signs(rng, n);
        const CompensationResult r = compensate(p, x0);
        CHECK(primal_value(p, r.x) <= primal_value(p, x0) + 1e-12);
        for (int i = 0; i < n; ++i) {
            CHECK(flip_delta(p, r.x, i) >= -kImproveTol);
        }
        CHECK(compensate(p, r.x).x == r.x); // idempotent
    }
}
