#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "cdmc/primal.hpp"

namespace cdmc {

/// Numerical safeguards of the dual ascent (see max_step / is_dual_feasible).
inline constexpr double kPdMargin = 1e-10;   // Cholesky pivot floor
inline constexpr double kStepSafety = 1e-3;  // shrink applied to the boundary step
inline constexpr double kStepCap = 1e6;      // cap when the ray never exits the cone

/// Perturbation data and solver knobs for one dual solve.
///
/// alpha shifts the diagonal of Q (leaving the ±1 problem unchanged up to
/// the constant d_alpha); beta controls the quadratic penalty on sigma.
/// beta entries may be +inf, which removes the penalty term and yields the
/// plain linearly-perturbed dual.
struct PerturbationConfig {
    Eigen::VectorXd alpha;
    Eigen::VectorXd beta;
    Eigen::VectorXd delta_c;   // linear perturbation applied by the drivers; zero when unused
    double epsilon = 1e-8;     // convergence precision
    double tau = 0.05;         // feasibility classification tolerance, in (0, 0.5)
    int max_iters = 5000;

    /// d_alpha = (1/2) <e, alpha>, the constant the alpha-perturbation adds.
    double d_alpha() const { return 0.5 * alpha.sum(); }

    void validate(int n) const;
};

/// State of the dual ascent at one iterate.
struct DualIterate {
    Eigen::VectorXd sigma;
    Eigen::VectorXd x_bar;      // G_alpha(sigma)^{-1} c
    Eigen::VectorXd gradient;   // (1/2) x_bar∘x_bar − sigma⊘beta − (1/2) e
    double dual_value = 0.0;
    bool is_feasible = false;
    int iteration = 0;
};

enum class Termination { GradientNorm, XStagnation, SigmaStagnation, MaxIterations };

std::string to_string(Termination t);

/// True iff G_alpha(sigma) = Q + Diag(alpha + sigma) admits a Cholesky
/// factorization with every pivot above kPdMargin.
bool is_dual_feasible(const PrimalProblem& prob, const PerturbationConfig& cfg,
                      const Eigen::VectorXd& sigma);

/// Beta-perturbed dual objective
///   −(1/2)<G^{-1}c, c> − (1/2) Σ_i (σ_i²/β_i + σ_i) − d_alpha,
/// evaluated through one Cholesky factorization (no explicit inverse).
/// Throws DualInfeasibleError outside the feasible cone.
double dual_value(const PrimalProblem& prob, const PerturbationConfig& cfg,
                  const Eigen::VectorXd& sigma);

/// Gradient of the dual objective. Throws DualInfeasibleError outside the cone.
Eigen::VectorXd dual_gradient(const PrimalProblem& prob, const PerturbationConfig& cfg,
                              const Eigen::VectorXd& sigma);

/// Largest step a such that sigma + t·direction stays feasible for
/// t ∈ [0, a], located by doubling then bisection on the feasibility
/// predicate, shrunk by kStepSafety. Returns kStepCap when the ray never
/// leaves the cone within the cap.
double max_step(const PrimalProblem& prob, const PerturbationConfig& cfg,
                const Eigen::VectorXd& sigma, const Eigen::VectorXd& direction);

/// Golden-section search for a maximizer of a unimodal objective on
/// [lo, hi]; returns a point within tol of the maximizer. Throws
/// NumericError if the objective produces a non-finite value.
double golden_section(const std::function<double(double)>& objective,
                      double lo, double hi, double tol);

/// Default starting point: sigma0_i = |alpha_i| + Σ_j |Q_ij| + 1, which makes
/// G_alpha(sigma0) strictly diagonally dominant and hence feasible.
Eigen::VectorXd default_sigma0(const PrimalProblem& prob, const PerturbationConfig& cfg);

struct Algorithm1Result {
    DualIterate final;
    Eigen::VectorXd x_star;     // round(x_bar), ties to +1
    Termination termination = Termination::MaxIterations;
    int iterations = 0;
};

/// Gradient ascent on the beta-perturbed dual: from sigma0, iterate
/// sigma ← sigma + a·d with d the dual gradient and a picked by
/// golden-section over [0, max_step]. Stops when ‖d‖ ≤ ε, when the
/// relative change of x_bar or sigma drops to ε (denominator
/// max(|value|, 1)), or after max_iters.
Algorithm1Result algorithm1(const PrimalProblem& prob, const PerturbationConfig& cfg,
                            const Eigen::VectorXd& sigma0);

/// algorithm1 starting from default_sigma0.
Algorithm1Result algorithm1(const PrimalProblem& prob, const PerturbationConfig& cfg);

/// round(x): nearest of {−1, +1} per entry, ties to +1.
Eigen::VectorXd round_to_signs(const Eigen::VectorXd& x);

} // namespace cdmc
