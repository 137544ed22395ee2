#include "cdmc/primal.hpp"

namespace cdmc {

std::string to_string(Algorithm alg) {
    switch (alg) {
    case Algorithm::Cda1: return "CDA1";
    case Algorithm::Cda2: return "CDA2";
    case Algorithm::Cda3: return "CDA3";
    case Algorithm::Oracle: return "ORACLE";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "CDA1") return Algorithm::Cda1;
    if (s == "CDA2") return Algorithm::Cda2;
    if (s == "CDA3") return Algorithm::Cda3;
    if (s == "ORACLE") return Algorithm::Oracle;
    throw InputError("unknown algorithm: " + s);
}

PrimalProblem build_primal(const WeightedGraph& graph, int pivot) {
    const int n1 = graph.num_vertices();
    if (pivot < 0 || pivot >= n1) {
        throw InputError("build_primal: pivot index out of range");
    }
    const int n = n1 - 1;
    PrimalProblem prob;
    prob.pivot = pivot;
    prob.total_edge_weight = graph.total_edge_weight();
    prob.Q.resize(n, n);
    prob.c.resize(n);
    const Eigen::MatrixXd& w = graph.weights();
    // non-pivot vertices keep their relative order
    for (int i = 0, ii = 0; i < n1; ++i) {
        if (i == pivot) continue;
        prob.c(ii) = -w(i, pivot);
        for (int j = 0, jj = 0; j < n1; ++j) {
            if (j == pivot) continue;
            prob.Q(ii, jj) = w(i, j);
            ++jj;
        }
        ++ii;
    }
    return prob;
}

double primal_value(const PrimalProblem& prob, const Eigen::VectorXd& x) {
    if (x.size() != prob.n()) {
        throw InputError("primal_value: dimension mismatch");
    }
    return 0.5 * x.dot(prob.Q * x) - x.dot(prob.c);
}

Eigen::VectorXd extend_with_pivot(const Eigen::VectorXd& x, int pivot) {
    const int n = static_cast<int>(x.size());
    if (pivot < 0 || pivot > n) {
        throw InputError("extend_with_pivot: pivot index out of range");
    }
    Eigen::VectorXd y(n + 1);
    for (int i = 0, ii = 0; i <= n; ++i) {
        y(i) = (i == pivot) ? 1.0 : x(ii++);
    }
    return y;
}

} // namespace cdmc
