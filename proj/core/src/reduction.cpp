#include "cdmc/reduction.hpp"

#include <cmath>

#include "cdmc/errors.hpp"

namespace cdmc {

ReductionSplit split_feasible(const Eigen::VectorXd& x_bar, double tau) {
    if (!(tau > 0.0 && tau < 0.5)) {
        throw InputError("split_feasible: tau must lie in (0, 0.5)");
    }
    const int n = static_cast<int>(x_bar.size());
    ReductionSplit split;
    split.fixed_values = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (std::abs(std::abs(x_bar(i)) - 1.0) <= tau) {
            split.fixed_values(i) = x_bar(i) >= 0.0 ? 1.0 : -1.0;
        } else {
            split.free_indices.push_back(i);
        }
    }
    if (static_cast<int>(split.free_indices.size()) == n && n > 0) {
        // forced progress: fix the single coordinate closest to ±1
        int best = 0;
        double best_gap = std::abs(std::abs(x_bar(0)) - 1.0);
        for (int i = 1; i < n; ++i) {
            const double gap = std::abs(std::abs(x_bar(i)) - 1.0);
            if (gap < best_gap) {
                best = i;
                best_gap = gap;
            }
        }
        split.fixed_values(best) = x_bar(best) >= 0.0 ? 1.0 : -1.0;
        split.free_indices.erase(split.free_indices.begin() + best);
    }
    return split;
}

PrimalProblem reduce_problem(const PrimalProblem& parent, const ReductionSplit& split) {
    const int m = static_cast<int>(split.free_indices.size());
    if (m == 0) {
        throw InputError("reduce_problem: no free indices, nothing to reduce");
    }
    if (split.fixed_values.size() != parent.n()) {
        throw InputError("reduce_problem: split dimension mismatch");
    }
    const Eigen::VectorXd qxp = parent.Q * split.fixed_values;
    PrimalProblem reduced;
    reduced.pivot = -1;
    reduced.total_edge_weight = 0.0;
    reduced.Q.resize(m, m);
    reduced.c.resize(m);
    for (int a = 0; a < m; ++a) {
        const int i = split.free_indices[a];
        reduced.c(a) = parent.c(i) - qxp(i);
        for (int b = 0; b < m; ++b) {
            reduced.Q(a, b) = parent.Q(i, split.free_indices[b]);
        }
    }
    return reduced;
}

double fixed_part_offset(const PrimalProblem& parent, const ReductionSplit& split) {
    const Eigen::VectorXd& xp = split.fixed_values;
    return 0.5 * xp.dot(parent.Q * xp) - parent.c.dot(xp);
}

Eigen::VectorXd lift_solution(const ReductionSplit& split, const Eigen::VectorXd& x_h) {
    if (x_h.size() != static_cast<Eigen::Index>(split.free_indices.size())) {
        throw InputError("lift_solution: dimension mismatch");
    }
    Eigen::VectorXd x = split.fixed_values;
    for (std::size_t a = 0; a < split.free_indices.size(); ++a) {
        x(split.free_indices[a]) = x_h(static_cast<Eigen::Index>(a));
    }
    return x;
}

} // namespace cdmc
