#pragma once

#include <string>

#include <Eigen/Dense>

#include "cdmc/graph.hpp"

namespace cdmc {

/// Which solver produced a solution.
enum class Algorithm { Cda1, Cda2, Cda3, Oracle };

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& s);

/// The n-variable binary quadratic minimization obtained from an
/// (n+1)-vertex graph by fixing one vertex (the pivot) at +1:
///
///   min P(x) = (1/2) <x, Q x> − <x, c>,  x ∈ {−1,+1}^n
///
/// with Q the weight block over non-pivot vertices and c_i = −w_{i,pivot}.
struct PrimalProblem {
    Eigen::MatrixXd Q;          // symmetric, zero diagonal
    Eigen::VectorXd c;
    int pivot = -1;             // original vertex index fixed at +1; -1 for
                                // synthetic subproblems with no graph behind them
    double total_edge_weight = 0.0;

    int n() const { return static_cast<int>(c.size()); }
};

/// Builds the primal problem for the given pivot vertex. Non-pivot vertices
/// keep their relative order (the pivot is logically moved last).
PrimalProblem build_primal(const WeightedGraph& graph, int pivot);

/// P(x) = (1/2) <x, Qx> − <x, c>. Accepts real-valued x so diagnostics on
/// intermediate iterates can reuse it; ±1 feasibility is not checked here.
double primal_value(const PrimalProblem& prob, const Eigen::VectorXd& x);

/// A (possibly certified) cut of a graph.
struct CutSolution {
    Eigen::VectorXd x;          // ±1 over non-pivot vertices, pivot order
    Eigen::VectorXd y;          // ±1 over all vertices, original order, y[pivot] = +1
    double cut_weight = 0.0;
    double primal_value = 0.0;
    bool certified_global = false;
    Algorithm algorithm = Algorithm::Oracle;
};

/// Inserts +1 at the pivot position: maps the n-vector x (non-pivot order)
/// back to an (n+1)-vector in original vertex order.
Eigen::VectorXd extend_with_pivot(const Eigen::VectorXd& x, int pivot);

} // namespace cdmc
