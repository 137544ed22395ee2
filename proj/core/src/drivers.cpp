#include "cdmc/drivers.hpp"

#include <chrono>
#include <limits>

#include "cdmc/errors.hpp"
#include "cdmc/oracle.hpp"

namespace cdmc {

namespace {

using Clock = std::chrono::steady_clock;

/// Builds alpha/beta for a (sub)problem. The quadratic machinery is off for
/// cda2: alpha = 0 and beta = +inf turn the penalized dual into the plain
/// one without a separate code path.
PerturbationConfig make_config(const PrimalProblem& prob, const PerturbationPolicy& policy,
                               bool quadratic) {
    PerturbationConfig cfg;
    if (quadratic) {
        cfg.alpha = choose_alpha(prob.Q, policy);
        cfg.beta = choose_beta(cfg.alpha, policy);
    } else {
        cfg.alpha = Eigen::VectorXd::Zero(prob.n());
        cfg.beta = Eigen::VectorXd::Constant(prob.n(),
                                             std::numeric_limits<double>::infinity());
    }
    cfg.delta_c = Eigen::VectorXd::Zero(prob.n());
    cfg.epsilon = policy.epsilon;
    cfg.tau = policy.tau;
    cfg.max_iters = policy.max_iters;
    return cfg;
}

CertificateReport evaluate_certificate(const PrimalProblem& prob,
                                       const PerturbationConfig& cfg,
                                       const Algorithm1Result& res) {
    CertificateReport cert;
    cert.neg_definite = alpha_makes_negative_definite(prob.Q, cfg.alpha);
    cert.gradient_small = res.final.gradient.lpNorm<Eigen::Infinity>() <= cfg.epsilon;
    cert.sigma_feasible = is_dual_feasible(prob, cfg, res.final.sigma);
    cert.rounding_tight =
        (res.final.x_bar.array().square() - 1.0).abs().maxCoeff() <= cfg.tau;
    return cert;
}

SolveReport run_pipeline(const PrimalProblem& prob, const PerturbationPolicy& policy,
                         bool quadratic, bool linear, Algorithm id) {
    policy.validate();
    const auto start = Clock::now();

    SolveReport report;
    report.policy = policy;
    report.algorithm = id;

    // The dual machinery solves the (possibly Δc-perturbed) problem; all
    // reported values refer to the unperturbed one.
    PrimalProblem solved = prob;
    Eigen::VectorXd delta_c = Eigen::VectorXd::Zero(prob.n());
    if (linear && policy.linear_magnitude > 0.0) {
        delta_c = make_linear_perturbation(prob.n(), policy);
        solved.c += delta_c;
    }

    PerturbationConfig cfg = make_config(solved, policy, quadratic);
    cfg.delta_c = delta_c;
    report.config = cfg;

    Algorithm1Result first = algorithm1(solved, cfg);
    report.iterations_total = first.iterations;
    report.first_termination = first.termination;
    report.certificate = evaluate_certificate(solved, cfg, first);

    Eigen::VectorXd x;
    const bool critical_found =
        report.certificate.sigma_feasible && report.certificate.gradient_small;
    if (critical_found) {
        x = first.x_star;
    } else {
        // Reduction loop: fix the near-±1 coordinates as constants and
        // re-solve the induced subproblem until a critical point shows up
        // or everything is fixed. Forced progress bounds this by n rounds.
        ReductionSplit split = split_feasible(first.final.x_bar, cfg.tau);
        x = split.fixed_values;
        while (!split.free_indices.empty()) {
            ++report.reductions;
            const PrimalProblem reduced = reduce_problem(solved, split);
            const PerturbationConfig sub_cfg = make_config(reduced, policy, quadratic);
            const Algorithm1Result sub = algorithm1(reduced, sub_cfg);
            report.iterations_total += sub.iterations;

            const bool sub_critical =
                sub.final.gradient.lpNorm<Eigen::Infinity>() <= sub_cfg.epsilon &&
                is_dual_feasible(reduced, sub_cfg, sub.final.sigma);
            if (sub_critical) {
                x = lift_solution(split, sub.x_star);
                break;
            }
            const ReductionSplit sub_split = split_feasible(sub.final.x_bar, sub_cfg.tau);
            // merge the newly fixed coordinates into the parent frame
            std::vector<int> still_free;
            for (std::size_t a = 0; a < split.free_indices.size(); ++a) {
                const int parent_idx = split.free_indices[a];
                const double v = sub_split.fixed_values(static_cast<Eigen::Index>(a));
                if (v != 0.0) {
                    split.fixed_values(parent_idx) = v;
                } else {
                    still_free.push_back(parent_idx);
                }
            }
            split.free_indices = std::move(still_free);
            x = split.fixed_values;
        }
    }

    // Compensation runs on the unperturbed objective, the one we report.
    CompensationResult comp = compensate(prob, x);
    report.compensation_passes = comp.passes;

    CutSolution sol;
    sol.x = comp.x;
    sol.algorithm = id;
    sol.certified_global = report.certificate.certified();
    sol.primal_value = primal_value(prob, sol.x);
    if (prob.pivot >= 0) {
        sol.y = extend_with_pivot(sol.x, prob.pivot);
        sol.cut_weight = (prob.total_edge_weight - sol.primal_value) / 2.0;
    } else {
        sol.y = sol.x;
        sol.cut_weight = 0.0;
    }
    report.solution = std::move(sol);

    report.wall_time_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace

std::string CertificateReport::reasons() const {
    if (exhaustive) return "exhaustive";
    std::string r;
    auto add = [&](bool ok, const char* tag) {
        if (!r.empty()) r += ",";
        r += (ok ? "+" : "-");
        r += tag;
    };
    add(neg_definite, "negdef");
    add(gradient_small, "grad");
    add(sigma_feasible, "feasible");
    add(rounding_tight, "rounding");
    return r;
}

SolveReport cda1(const PrimalProblem& prob, const PerturbationPolicy& policy) {
    return run_pipeline(prob, policy, /*quadratic=*/true, /*linear=*/false,
                        Algorithm::Cda1);
}

SolveReport cda2(const PrimalProblem& prob, const PerturbationPolicy& policy) {
    return run_pipeline(prob, policy, /*quadratic=*/false, /*linear=*/true,
                        Algorithm::Cda2);
}

SolveReport cda3(const PrimalProblem& prob, const PerturbationPolicy& policy) {
    return run_pipeline(prob, policy, /*quadratic=*/true, /*linear=*/true,
                        Algorithm::Cda3);
}

SolveReport solve_graph(const WeightedGraph& graph, Algorithm algorithm,
                        const PerturbationPolicy& policy) {
    policy.validate();
    if (algorithm == Algorithm::Oracle) {
        const auto start = Clock::now();
        SolveReport report;
        report.policy = policy;
        report.algorithm = Algorithm::Oracle;
        report.instance_name = graph.name();
        report.solution = brute_force_maxcut(graph, policy.oracle_limit);
        report.certificate.exhaustive = true;
        report.wall_time_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        return report;
    }

    const PrimalProblem prob = build_primal(graph, graph.num_vertices() - 1);
    SolveReport report;
    switch (algorithm) {
    case Algorithm::Cda1: report = cda1(prob, policy); break;
    case Algorithm::Cda2: report = cda2(prob, policy); break;
    case Algorithm::Cda3: report = cda3(prob, policy); break;
    case Algorithm::Oracle: break; // handled above
    }
    report.instance_name = graph.name();
    return report;
}

} // namespace cdmc
