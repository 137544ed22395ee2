#include "cdmc/perturbation.hpp"

#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "cdmc/errors.hpp"

namespace cdmc {

std::string to_string(AlphaMode m) {
    switch (m) {
    case AlphaMode::Gershgorin: return "GERSHGORIN";
    case AlphaMode::Spectral: return "SPECTRAL";
    case AlphaMode::Explicit: return "EXPLICIT";
    }
    return "?";
}

std::string to_string(BetaMode m) {
    switch (m) {
    case BetaMode::Constant: return "CONSTANT";
    case BetaMode::Proportional: return "PROPORTIONAL";
    case BetaMode::Explicit: return "EXPLICIT";
    }
    return "?";
}

AlphaMode alpha_mode_from_string(const std::string& s) {
    if (s == "GERSHGORIN") return AlphaMode::Gershgorin;
    if (s == "SPECTRAL") return AlphaMode::Spectral;
    if (s == "EXPLICIT") return AlphaMode::Explicit;
    throw InputError("unknown alpha mode: " + s);
}

BetaMode beta_mode_from_string(const std::string& s) {
    if (s == "CONSTANT") return BetaMode::Constant;
    if (s == "PROPORTIONAL") return BetaMode::Proportional;
    if (s == "EXPLICIT") return BetaMode::Explicit;
    throw InputError("unknown beta mode: " + s);
}

void PerturbationPolicy::validate() const {
    if (!(alpha_slack > 0.0)) throw InputError("alpha_slack must be positive");
    if (!(beta_scale > 0.0)) throw InputError("beta_scale must be positive");
    if (linear_magnitude < 0.0) throw InputError("linear_magnitude must be nonnegative");
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
    if (!(tau > 0.0 && tau < 0.5)) throw InputError("tau must lie in (0, 0.5)");
    if (max_iters < 1) throw InputError("max_iters must be positive");
    if (oracle_limit < 2) throw InputError("oracle_limit must be at least 2");
}

bool alpha_makes_negative_definite(const Eigen::MatrixXd& Q, const Eigen::VectorXd& alpha) {
    Eigen::MatrixXd M = -Q;
    M.diagonal() -= alpha;
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success) return false;
    const double min_ljj = llt.matrixLLT().diagonal().minCoeff();
    return min_ljj * min_ljj > kPdMargin;
}

Eigen::VectorXd choose_alpha(const Eigen::MatrixXd& Q, const PerturbationPolicy& policy) {
    const auto n = Q.rows();
    switch (policy.alpha_mode) {
    case AlphaMode::Gershgorin:
        return -(Q.cwiseAbs().rowwise().sum().array() + policy.alpha_slack).matrix();
    case AlphaMode::Spectral: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, Eigen::EigenvaluesOnly);
        const double lambda_max = es.eigenvalues().maxCoeff();
        return Eigen::VectorXd::Constant(n, -(lambda_max + policy.alpha_slack));
    }
    case AlphaMode::Explicit:
        if (policy.alpha_explicit.size() != n) {
            throw InputError("explicit alpha has wrong dimension");
        }
        if (!alpha_makes_negative_definite(Q, policy.alpha_explicit)) {
            throw InputError("explicit alpha does not make Q + Diag(alpha) negative definite");
        }
        return policy.alpha_explicit;
    }
    throw InputError("unreachable alpha mode");
}

Eigen::VectorXd choose_beta(const Eigen::VectorXd& alpha, const PerturbationPolicy& policy) {
    Eigen::VectorXd beta;
    switch (policy.beta_mode) {
    case BetaMode::Constant:
        beta = Eigen::VectorXd::Constant(alpha.size(), policy.beta_scale);
        break;
    case BetaMode::Proportional:
        beta = policy.beta_scale * alpha.cwiseAbs();
        break;
    case BetaMode::Explicit:
        if (policy.beta_explicit.size() != alpha.size()) {
            throw InputError("explicit beta has wrong dimension");
        }
        beta = policy.beta_explicit;
        break;
    }
    if ((beta.array() <= 0.0).any()) {
        throw InputError("beta entries must be positive");
    }
    return beta;
}

Eigen::VectorXd make_linear_perturbation(int n, const PerturbationPolicy& policy) {
    if (n < 1) throw InputError("make_linear_perturbation: n must be positive");
    if (policy.linear_magnitude == 0.0) {
        return Eigen::VectorXd::Zero(n);
    }
    std::mt19937_64 rng(policy.rng_seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::VectorXd raw(n);
    double norm1 = 0.0;
    do {
        for (int i = 0; i < n; ++i) raw(i) = unit(rng);
        norm1 = raw.cwiseAbs().sum();
    } while (norm1 == 0.0);
    return raw * (policy.linear_magnitude / norm1);
}

} // namespace cdmc
