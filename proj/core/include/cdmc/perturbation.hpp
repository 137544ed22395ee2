#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "cdmc/dual.hpp"

namespace cdmc {

enum class AlphaMode { Gershgorin, Spectral, Explicit };
enum class BetaMode { Constant, Proportional, Explicit };

std::string to_string(AlphaMode m);
std::string to_string(BetaMode m);
AlphaMode alpha_mode_from_string(const std::string& s);
BetaMode beta_mode_from_string(const std::string& s);

/// How the perturbation vectors are produced, plus the solver knobs that
/// ride along to every (sub)problem config. All fields are CLI-surfaced.
struct PerturbationPolicy {
    AlphaMode alpha_mode = AlphaMode::Gershgorin;
    double alpha_slack = 1.0;        // δ
    BetaMode beta_mode = BetaMode::Constant;
    double beta_scale = 500.0;
    double linear_magnitude = 0.9;   // target Σ|Δc_i| for CDA2/CDA3
    std::uint64_t rng_seed = 20139;

    Eigen::VectorXd alpha_explicit;  // used by the Explicit modes
    Eigen::VectorXd beta_explicit;

    double epsilon = 1e-8;
    double tau = 0.05;
    int max_iters = 5000;
    int oracle_limit = 26;           // brute-force vertex cap

    void validate() const;
};

/// Chooses alpha with Q + Diag(alpha) ≺ 0:
///  - Gershgorin: alpha_i = −(Σ_j |Q_ij| + δ), negative definite by strict
///    diagonal dominance;
///  - Spectral: alpha_i = −(λ_max(Q) + δ) uniformly;
///  - Explicit: passes policy.alpha_explicit through after verifying
///    negative definiteness (throws InputError otherwise).
Eigen::VectorXd choose_alpha(const Eigen::MatrixXd& Q, const PerturbationPolicy& policy);

/// Chooses beta > 0: Constant fills beta_scale; Proportional uses
/// beta_scale·|alpha_i|; Explicit passes policy.beta_explicit through.
/// Throws InputError on any nonpositive entry.
Eigen::VectorXd choose_beta(const Eigen::VectorXd& alpha, const PerturbationPolicy& policy);

/// Draws Δc from the seeded generator and rescales it so Σ|Δc_i| equals
/// policy.linear_magnitude exactly (zero vector when the magnitude is 0).
Eigen::VectorXd make_linear_perturbation(int n, const PerturbationPolicy& policy);

/// True iff Q + Diag(alpha) is negative definite (Cholesky of the negated
/// matrix with the usual pivot floor).
bool alpha_makes_negative_definite(const Eigen::MatrixXd& Q, const Eigen::VectorXd& alpha);

} // namespace cdmc
