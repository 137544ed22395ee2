#include "cdmc/dual.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "cdmc/errors.hpp"

namespace cdmc {

namespace {

// Surrogate objective value for infeasible trial points: finite, below
// every dual value, so golden_section keeps its all-finite contract.
constexpr double kInfeasibleValue = std::numeric_limits<double>::lowest();

/// Cholesky of G_alpha(sigma) with an explicit pivot floor. Eigen's LLT
/// rejects nonpositive pivots; the extra check enforces pivot > kPdMargin,
/// i.e. L_jj > sqrt(kPdMargin). Instances are reused across evaluations so
/// the workspace is allocated once.
class GFactor {
public:
    bool factor(const PrimalProblem& prob, const PerturbationConfig& cfg,
                const Eigen::VectorXd& sigma) {
        G_.resize(prob.Q.rows(), prob.Q.cols());
        G_ = prob.Q;
        G_.diagonal() += cfg.alpha + sigma;
        llt_.compute(G_);
        if (llt_.info() != Eigen::Success) return ok_ = false;
        const double min_ljj = llt_.matrixLLT().diagonal().minCoeff();
        return ok_ = (min_ljj * min_ljj > kPdMargin);
    }

    bool ok() const { return ok_; }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return llt_.solve(rhs); }

    /// c^T G^{-1} c via one forward substitution.
    double quad_inv(const Eigen::VectorXd& c) const {
        const Eigen::VectorXd y =
            llt_.matrixL().solve(c);
        return y.squaredNorm();
    }

private:
    Eigen::MatrixXd G_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    bool ok_ = false;
};

double penalty_term(const PerturbationConfig& cfg, const Eigen::VectorXd& sigma) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double quad = std::isinf(cfg.beta(i)) ? 0.0 : sigma(i) * sigma(i) / cfg.beta(i);
        s += quad + sigma(i);
    }
    return s;
}

Eigen::VectorXd sigma_over_beta(const PerturbationConfig& cfg, const Eigen::VectorXd& sigma) {
    Eigen::VectorXd r(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        r(i) = std::isinf(cfg.beta(i)) ? 0.0 : sigma(i) / cfg.beta(i);
    }
    return r;
}

double dual_value_from_factor(const GFactor& f, const PrimalProblem& prob,
                              const PerturbationConfig& cfg, const Eigen::VectorXd& sigma) {
    return -0.5 * f.quad_inv(prob.c) - 0.5 * penalty_term(cfg, sigma) - cfg.d_alpha();
}

Eigen::VectorXd gradient_from_xbar(const PerturbationConfig& cfg, const Eigen::VectorXd& sigma,
                                   const Eigen::VectorXd& x_bar) {
    return (0.5 * x_bar.array().square()).matrix() - sigma_over_beta(cfg, sigma) -
           0.5 * Eigen::VectorXd::Ones(sigma.size());
}

} // namespace

void PerturbationConfig::validate(int n) const {
    if (alpha.size() != n || beta.size() != n) {
        throw InputError("perturbation config dimension mismatch");
    }
    if (delta_c.size() != 0 && delta_c.size() != n) {
        throw InputError("delta_c dimension mismatch");
    }
    if ((beta.array() <= 0.0).any()) {
        throw InputError("beta entries must be positive");
    }
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
    if (!(tau > 0.0 && tau < 0.5)) throw InputError("tau must lie in (0, 0.5)");
    if (max_iters < 1) throw InputError("max_iters must be positive");
}

std::string to_string(Termination t) {
    switch (t) {
    case Termination::GradientNorm: return "gradient_norm";
    case Termination::XStagnation: return "x_stagnation";
    case Termination::SigmaStagnation: return "sigma_stagnation";
    case Termination::MaxIterations: return "max_iterations";
    }
    return "?";
}

bool is_dual_feasible(const PrimalProblem& prob, const PerturbationConfig& cfg,
                      const Eigen::VectorXd& sigma) {
    GFactor f;
    return f.factor(prob, cfg, sigma);
}

double dual_value(const PrimalProblem& prob, const PerturbationConfig& cfg,
                  const Eigen::VectorXd& sigma) {
    GFactor f;
    if (!f.factor(prob, cfg, sigma)) {
        throw DualInfeasibleError("dual_value: sigma is outside the feasible cone");
    }
    return dual_value_from_factor(f, prob, cfg, sigma);
}

Eigen::VectorXd dual_gradient(const PrimalProblem& prob, const PerturbationConfig& cfg,
                              const Eigen::VectorXd& sigma) {
    GFactor f;
    if (!f.factor(prob, cfg, sigma)) {
        throw DualInfeasibleError("dual_gradient: sigma is outside the feasible cone");
    }
    return gradient_from_xbar(cfg, sigma, f.solve(prob.c));
}

namespace {

/// max_step with a warm-start bracket seed; the public entry uses 1.0.
double max_step_impl(const PrimalProblem& prob, const PerturbationConfig& cfg,
                     const Eigen::VectorXd& sigma, const Eigen::VectorXd& direction,
                     double seed) {
    thread_local GFactor f;
    thread_local Eigen::VectorXd trial;
    auto feasible_at = [&](double t) {
        trial = sigma + t * direction;
        return f.factor(prob, cfg, trial);
    };

    double lo = 0.0;
    double hi = std::clamp(seed, 1.0, kStepCap);
    if (feasible_at(hi)) {
        // double until infeasible or capped
        while (true) {
            if (hi >= kStepCap) return kStepCap;
            const double next = std::min(2.0 * hi, kStepCap);
            if (feasible_at(next)) {
                hi = next;
            } else {
                lo = hi;
                hi = next;
                break;
            }
        }
    }
    // bisection: feasible at lo, infeasible at hi
    const double tol = 1e-6 * std::max(1.0, hi);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo * (1.0 - kStepSafety);
}

} // namespace

double max_step(const PrimalProblem& prob, const PerturbationConfig& cfg,
                const Eigen::VectorXd& sigma, const Eigen::VectorXd& direction) {
    return max_step_impl(prob, cfg, sigma, direction, 1.0);
}

double golden_section(const std::function<double(double)>& objective,
                      double lo, double hi, double tol) {
    if (!(lo < hi)) throw InputError("golden_section: requires lo < hi");
    static const double kRatio = (std::sqrt(5.0) - 1.0) / 2.0;
    auto eval = [&](double t) {
        const double v = objective(t);
        if (!std::isfinite(v)) {
            throw NumericError("golden_section: objective is not finite");
        }
        return v;
    };
    double a = lo, b = hi;
    double x1 = b - kRatio * (b - a);
    double x2 = a + kRatio * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kRatio * (b - a);
            f2 = eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kRatio * (b - a);
            f1 = eval(x1);
        }
    }
    return 0.5 * (a + b);
}

Eigen::VectorXd default_sigma0(const PrimalProblem& prob, const PerturbationConfig& cfg) {
    return cfg.alpha.cwiseAbs() + prob.Q.cwiseAbs().rowwise().sum() +
           Eigen::VectorXd::Ones(prob.n());
}

Eigen::VectorXd round_to_signs(const Eigen::VectorXd& x) {
    Eigen::VectorXd r(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        r(i) = x(i) >= 0.0 ? 1.0 : -1.0;
    }
    return r;
}

Algorithm1Result algorithm1(const PrimalProblem& prob, const PerturbationConfig& cfg,
                            const Eigen::VectorXd& sigma0) {
    const int n = prob.n();
    cfg.validate(n);
    if (sigma0.size() != n) throw InputError("algorithm1: sigma0 dimension mismatch");

    GFactor f;
    if (!f.factor(prob, cfg, sigma0)) {
        throw InputError("algorithm1: sigma0 must make G_alpha(sigma0) positive definite");
    }

    Eigen::VectorXd sigma = sigma0;
    Eigen::VectorXd x = f.solve(prob.c);
    double value = dual_value_from_factor(f, prob, cfg, sigma);
    Eigen::VectorXd grad = gradient_from_xbar(cfg, sigma, x);

    Algorithm1Result result;
    result.termination = Termination::MaxIterations;

    GFactor trial_factor;
    Eigen::VectorXd trial_sigma;
    double step_seed = 1.0;

    int k = 0;
    for (k = 1; k <= cfg.max_iters; ++k) {
        if (grad.norm() <= cfg.epsilon) {
            result.termination = Termination::GradientNorm;
            k -= 1;
            break;
        }

        const double a_max = max_step_impl(prob, cfg, sigma, grad, step_seed);
        double step = 0.0;
        if (a_max > 0.0) {
            auto along = [&](double t) {
                trial_sigma = sigma + t * grad;
                if (!trial_factor.factor(prob, cfg, trial_sigma)) {
                    return kInfeasibleValue;
                }
                return dual_value_from_factor(trial_factor, prob, cfg, trial_sigma);
            };
            // coarse steps while the gradient is large, tight ones near a
            // critical point where step precision decides termination
            const double grad_norm = grad.norm();
            const double rel_tol = std::clamp(1e-3 * grad_norm, 1e-9, 1e-4);
            const double tol = rel_tol * std::max(1.0, a_max);
            step = golden_section(along, 0.0, a_max, tol);
            if (!(along(step) >= value)) {
                step = 0.0; // golden section found no ascent along this ray
            }
            step_seed = std::max(2.0 * a_max, 1.0);
        }

        const Eigen::VectorXd sigma_next = sigma + step * grad;
        if (!f.factor(prob, cfg, sigma_next)) {
            throw NumericError("algorithm1: iterate left the feasible cone");
        }
        const Eigen::VectorXd x_next = f.solve(prob.c);

        const double rel_x =
            ((x_next - x).cwiseQuotient(x.cwiseAbs().cwiseMax(1.0))).norm();
        const double rel_sigma =
            ((sigma_next - sigma).cwiseQuotient(sigma.cwiseAbs().cwiseMax(1.0))).norm();

        sigma = sigma_next;
        x = x_next;
        value = dual_value_from_factor(f, prob, cfg, sigma);
        grad = gradient_from_xbar(cfg, sigma, x);

        if (grad.norm() <= cfg.epsilon) {
            result.termination = Termination::GradientNorm;
            break;
        }
        if (rel_x <= cfg.epsilon) {
            result.termination = Termination::XStagnation;
            break;
        }
        if (rel_sigma <= cfg.epsilon) {
            result.termination = Termination::SigmaStagnation;
            break;
        }
    }

    result.iterations = std::min(k, cfg.max_iters);
    result.final.sigma = sigma;
    result.final.x_bar = x;
    result.final.gradient = grad;
    result.final.dual_value = value;
    result.final.is_feasible = true; // iterates never leave the cone
    result.final.iteration = result.iterations;
    result.x_star = round_to_signs(x);
    return result;
}

Algorithm1Result algorithm1(const PrimalProblem& prob, const PerturbationConfig& cfg) {
    return algorithm1(prob, cfg, default_sigma0(prob, cfg));
}

} // namespace cdmc
