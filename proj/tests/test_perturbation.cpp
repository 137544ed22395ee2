#include <doctest.h>

#include "cdmc/perturbation.hpp"
#include "test_helpers.hpp"

using namespace cdmc;

TEST_CASE("gershgorin alpha is a strict diagonal-dominance bound") {
    Eigen::MatrixXd q(2, 2);
    q << 0, 1, 1, 0;
    PerturbationPolicy policy; // GERSHGORIN, slack 1
    const Eigen::VectorXd alpha = choose_alpha(q, policy);
    CHECK(alpha(0) == -2.0);
    CHECK(alpha(1) == -2.0);
    CHECK(alpha_makes_negative_definite(q, alpha));

    const Eigen::MatrixXd q1 = Eigen::MatrixXd::Zero(1, 1);
    CHECK(choose_alpha(q1, policy)(0) == -1.0);
    policy.alpha_mode = AlphaMode::Spectral;
    CHECK(choose_alpha(q1, policy)(0) == -1.0);
}

TEST_CASE("gershgorin alpha always yields a negative definite shift") {
    std::mt19937_64 rng(55);
    PerturbationPolicy policy;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 49); // n ≤ 50
        const Eigen::MatrixXd q = cdmc::testing::random_symmetric(rng, n);
        CHECK(alpha_makes_negative_definite(q, choose_alpha(q, policy)));
    }
}

TEST_CASE("spectral alpha shifts by the top eigenvalue") {
    Eigen::MatrixXd q(2, 2);
    q << 0, 3, 3, 0; // eigenvalues ±3
    PerturbationPolicy policy;
    policy.alpha_mode = AlphaMode::Spectral;
    policy.alpha_slack = 0.5;
    const Eigen::VectorXd alpha = choose_alpha(q, policy);
    CHECK(alpha(0) == doctest::Approx(-3.5).epsilon(1e-12));
    CHECK(alpha_makes_negative_definite(q, alpha));
}

TEST_CASE("explicit alpha is verified before being passed through") {
    const auto reg = cdmc::testing::regression_instance();
    PerturbationPolicy policy;
    policy.alpha_mode = AlphaMode::Explicit;
    policy.alpha_explicit = reg.alpha;
    // the published alpha does NOT satisfy Q + Diag(alpha) ≺ 0 (largest
    // eigenvalue ≈ +24.86), so the explicit mode must reject it
    CHECK_FALSE(alpha_makes_negative_definite(reg.Q, reg.alpha));
    CHECK_THROWS_AS(choose_alpha(reg.Q, policy), InputError);

    policy.alpha_explicit = choose_alpha(reg.Q, PerturbationPolicy{});
    CHECK(choose_alpha(reg.Q, policy) == policy.alpha_explicit);
}

TEST_CASE("beta modes") {
    PerturbationPolicy policy;
    Eigen::VectorXd alpha(3);
    alpha << -2, -4, -1;

    CHECK(choose_beta(alpha, policy) == Eigen::VectorXd::Constant(3, 500.0));

    policy.beta_mode = BetaMode::Proportional;
    policy.beta_scale = 10.0;
    Eigen::VectorXd expect(3);
    expect << 20, 40, 10;
    CHECK(choose_beta(alpha, policy) == expect);

    policy.beta_mode = BetaMode::Explicit;
    policy.beta_explicit = Eigen::VectorXd::Constant(3, -1.0);
    CHECK_THROWS_AS(choose_beta(alpha, policy), InputError);

    policy.beta_mode = BetaMode::Proportional;
    Eigen::VectorXd with_zero(2);
    with_zero << -2, 0;
    CHECK_THROWS_AS(choose_beta(with_zero, policy), InputError);
}

TEST_CASE("the published beta range is accepted") {
    const auto reg = cdmc::testing::regression_instance();
    PerturbationPolicy policy;
    policy.beta_mode = BetaMode::Explicit;
    policy.beta_explicit = reg.beta;
    const Eigen::VectorXd beta = choose_beta(reg.alpha, policy);
    CHECK(beta.minCoeff() == doctest::Approx(277.4284));
    CHECK(beta.maxCoeff() == doctest::Approx(690.3018));
}

TEST_CASE("linear perturbation magnitude is exact and seeded") {
    PerturbationPolicy policy;
    policy.linear_magnitude = 0.0;
    CHECK(make_linear_perturbation(3, policy) == Eigen::VectorXd::Zero(3));

    policy.linear_magnitude = 0.9;
    policy.rng_seed = 321;
    const Eigen::VectorXd a = make_linear_perturbation(3, policy);
    const Eigen::VectorXd b = make_linear_perturbation(3, policy);
    CHECK(a == b); // deterministic for a fixed seed
    CHECK(a.cwiseAbs().sum() == doctest::Approx(0.9).epsilon(1e-12));

    policy.rng_seed = 322;
    CHECK(make_linear_perturbation(3, policy) != a);
}

TEST_CASE("sum of |delta_c| equals the requested magnitude across sizes") {
    std::mt19937_64 rng(66);
    PerturbationPolicy policy;
    for (int trial = 0; trial < 20; ++trial) {
        policy.linear_magnitude = 0.1 + 0.2 * (trial % 5);
        policy.rng_seed = rng();
        const int n = 1 + static_cast<int>(rng() % 40);
        const Eigen::VectorXd dc = make_linear_perturbation(n, policy);
        CHECK(std::abs(dc.cwiseAbs().sum() - policy.linear_magnitude) <= 1e-12);
    }
}

TEST_CASE("small perturbations preserve the exact optimum at desk scale") {
    std::mt19937_64 rng(77);
    PerturbationPolicy policy;
    policy.linear_magnitude = 0.9;
    for (int trial = 0; trial < 25; ++trial) {
        const int n1 = 3 + static_cast<int>(rng() % 6);
        const WeightedGraph g = cdmc::testing::random_graph(rng, n1);
        const PrimalProblem p = build_primal(g, n1 - 1);
        policy.rng_seed = rng();
        const Eigen::VectorXd dc = make_linear_perturbation(p.n(), policy);

        PrimalProblem perturbed = p;
        perturbed.c += dc;
        const auto [pu, xu] = cdmc::testing::enumerate_primal_min(p);
        const auto [pp, xp] = cdmc::testing::enumerate_primal_min(perturbed);
        // the perturbed argmin must also minimize the unperturbed problem
        CHECK(primal_value(p, xp) == doctest::Approx(pu).epsilon(1e-12));
    }
}
