#pragma once

#include <string>

#include "cdmc/compensation.hpp"
#include "cdmc/dual.hpp"
#include "cdmc/perturbation.hpp"
#include "cdmc/primal.hpp"
#include "cdmc/reduction.hpp"

namespace cdmc {

/// Outcome of the global-optimality certificate check, evaluated on the
/// first (unreduced) dual solve. `exhaustive` marks oracle solutions, whose
/// optimality comes from enumeration instead.
struct CertificateReport {
    bool neg_definite = false;    // Q + Diag(alpha) ≺ 0
    bool gradient_small = false;  // ‖d‖_inf ≤ ε at the final iterate
    bool sigma_feasible = false;  // final sigma in the dual cone
    bool rounding_tight = false;  // max_i |x̄_i² − 1| ≤ tau
    bool exhaustive = false;

    bool certified() const {
        return exhaustive ||
               (neg_definite && gradient_small && sigma_feasible && rounding_tight);
    }

    std::string reasons() const;
};

/// Everything one driver run produces.
struct SolveReport {
    CutSolution solution;
    int iterations_total = 0;
    int reductions = 0;
    int compensation_passes = 0;
    CertificateReport certificate;
    double wall_time_seconds = 0.0;
    PerturbationPolicy policy;     // echo of the inputs
    PerturbationConfig config;     // realized first-level config
    Algorithm algorithm = Algorithm::Cda1;
    Termination first_termination = Termination::MaxIterations;
    std::string instance_name;
};

/// Quadratic perturbation only: alpha/beta from the policy, dual ascent,
/// then the reduce-and-resolve loop on the coordinates that did not land
/// near ±1, and finally single-flip compensation.
SolveReport cda1(const PrimalProblem& prob, const PerturbationPolicy& policy);

/// Linear perturbation only: c ← c + Δc with Σ|Δc_i| = policy.linear_magnitude
/// and the plain (unpenalized) dual, with the same reduction/compensation
/// loop. The reported cut is always evaluated on the unperturbed instance.
SolveReport cda2(const PrimalProblem& prob, const PerturbationPolicy& policy);

/// Hybrid: the linear perturbation of cda2 combined with the quadratic
/// alpha/beta machinery of cda1. Collapses to cda1 when linear_magnitude = 0.
SolveReport cda3(const PrimalProblem& prob, const PerturbationPolicy& policy);

/// Builds the primal with the last vertex as pivot, dispatches to the
/// requested algorithm (including the brute-force oracle), and attaches
/// cut data evaluated on the graph.
SolveReport solve_graph(const WeightedGraph& graph, Algorithm algorithm,
                        const PerturbationPolicy& policy);

} // namespace cdmc
