#include <doctest.h>

#include "cdmc/reduction.hpp"
#include "test_helpers.hpp"

using namespace cdmc;

TEST_CASE("split classifies by distance to ±1") {
    Eigen::VectorXd xb(3);
    xb << 0.98, -1.01, 0.35;
    const ReductionSplit s = split_feasible(xb, 0.1);
    CHECK(s.fixed_values(0) == 1.0);
    CHECK(s.fixed_values(1) == -1.0);
    CHECK(s.fixed_values(2) == 0.0);
    CHECK(s.free_indices == std::vector<int>{2});
}

TEST_CASE("split with everything feasible leaves nothing free") {
    Eigen::VectorXd xb(2);
    xb << 1.0, -1.0;
    const ReductionSplit s = split_feasible(xb, 0.1);
    CHECK(s.free_indices.empty());
    CHECK(s.fixed_values(0) == 1.0);
    CHECK(s.fixed_values(1) == -1.0);
}

TEST_CASE("forced progress fixes the best coordinate when none qualifies") {
    Eigen::VectorXd xb(2);
    xb << 0.3, 0.5;
    const ReductionSplit s = split_feasible(xb, 0.1);
    CHECK(s.fixed_values(1) == 1.0); // |0.5| is closer to 1
    CHECK(s.fixed_values(0) == 0.0);
    CHECK(s.free_indices == std::vector<int>{0});
}

TEST_CASE("tau is validated") {
    Eigen::VectorXd xb(1);
    xb << 0.5;
    CHECK_THROWS_AS(split_feasible(xb, 0.0), InputError);
    CHECK_THROWS_AS(split_feasible(xb, 0.5), InputError);
}

TEST_CASE("reduce_problem substitutes the fixed part") {
    PrimalProblem p;
    p.Q.resize(3, 3);
    p.Q << 0, 1, 2,
           1, 0, 3,
           2, 3, 0;
    p.c = Eigen::VectorXd::Ones(3);

    ReductionSplit s;
    s.fixed_values.resize(3);
    s.fixed_values << 1, -1, 0;
    s.free_indices = {2};

    const PrimalProblem r = reduce_problem(p, s);
    CHECK(r.n() == 1);
    CHECK(r.Q(0, 0) == 0.0);
    CHECK(r.c(0) == doctest::Approx(2.0)); // 1 − (2·1 + 3·(−1))

    ReductionSplit empty;
    empty.fixed_values = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(reduce_problem(p, empty), InputError);
}

TEST_CASE("identity reduction returns the problem itself") {
    std::mt19937_64 rng(5);
    PrimalProblem p;
    p.Q = cdmc::testing::random_symmetric(rng, 4);
    p.c = cdmc::testing::random_vector(rng, 4);
    ReductionSplit s;
    s.fixed_values = Eigen::VectorXd::Zero(4);
    s.free_indices = {0, 1, 2, 3};
    const PrimalProblem r = reduce_problem(p, s);
    CHECK(r.Q == p.Q);
    CHECK(r.c == p.c);
}

TEST_CASE("lift fills free slots in order") {
    ReductionSplit s;
    s.fixed_values.resize(3);
    s.fixed_values << 1, -1, 0;
    s.free_indices = {2};
    Eigen::VectorXd xh(1);
    xh << -1;
    const Eigen::VectorXd x = lift_solution(s, xh);
    CHECK(x(0) == 1.0);
    CHECK(x(1) == -1.0);
    CHECK(x(2) == -1.0);

    CHECK_THROWS_AS(lift_solution(s, Eigen::VectorXd::Zero(2)), InputError);

    ReductionSplit none;
    none.fixed_values.resize(2);
    none.fixed_values << 1, -1;
    CHECK(lift_solution(none, Eigen::VectorXd(0)) == none.fixed_values);
}

TEST_CASE("split then lift reproduces the rounded iterate") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Eigen::VectorXd xb = cdmc::testing::random_vector(rng, n, -1.5, 1.5);
        const ReductionSplit s = split_feasible(xb, 0.25);
        Eigen::VectorXd xh(static_cast<Eigen::Index>(s.free_indices.size()));
        for (std::size_t a = 0; a < s.free_indices.size(); ++a) {
            xh(static_cast<Eigen::Index>(a)) = xb(s.free_indices[a]) >= 0 ? 1.0 : -1.0;
        }
        const Eigen::VectorXd lifted = lift_solution(s, xh);
        for (int i = 0; i < n; ++i) {
            CHECK(lifted(i) == (xb(i) >= 0 ? 1.0 : -1.0));
        }
    }
}

TEST_CASE("objective consistency: P(lift(x_h)) = P_reduced(x_h) + offset") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        PrimalProblem p;
        p.Q = cdmc::testing::random_symmetric(rng, n);
        p.c = cdmc::testing::random_vector(rng, n);
        const Eigen::VectorXd xb = cdmc::testing::random_vector(rng, n, -1.4, 1.4);
        std::uniform_real_distribution<double> taud(0.01, 0.49);
        const ReductionSplit s = split_feasible(xb, taud(rng));
        if (s.free_indices.empty()) continue;
        const PrimalProblem r = reduce_problem(p, s);
        const double offset = fixed_part_offset(p, s);
        for (int rep = 0; rep < 10; ++rep) {
            const Eigen::VectorXd xh =
                cdmc::testing::random_signs(rng, static_cast<int>(s.free_indices.size()));
            const double lhs = primal_value(p, lift_solution(s, xh));
            const double rhs = primal_value(r, xh) + offset;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("reducing the brute-forced subproblem cannot beat the parent optimum") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8); // n ≤ 10
        PrimalProblem p;
        p.Q = cdmc::testing::random_symmetric(rng, n, 0.0, 10.0);
        p.c = cdmc::testing::random_vector(rng, n);
        const Eigen::VectorXd xb = cdmc::testing::random_vector(rng, n, -1.4, 1.4);
        const ReductionSplit s = split_feasible(xb, 0.2);
        if (s.free_indices.empty()) continue;
        const PrimalProblem r = reduce_problem(p, s);
        const auto [parent_min, px] = cdmc::testing::enumerate_primal_min(p);
        const auto [reduced_min, rx] = cdmc::testing::enumerate_primal_min(r);
        const double lifted = primal_value(p, lift_solution(s, rx));
        CHECK(lifted >= parent_min - 1e-9);
        CHECK(lifted ==
              doctest::Approx(reduced_min + fixed_part_offset(p, s)).epsilon(1e-12));
    }
}
