#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cdmc/primal.hpp"

namespace cdmc {

/// Partition of coordinates into fixed (±1) and free (0) positions.
struct ReductionSplit {
    Eigen::VectorXd fixed_values;   // entries in {−1, 0, +1}; 0 marks free
    std::vector<int> free_indices;  // ascending positions of the zeros
};

/// One reduction: a split of the parent plus the induced subproblem.
struct ReductionStep {
    ReductionSplit split;
    PrimalProblem reduced;
};

/// Classifies coordinate i as feasible iff ||x̄_i| − 1| ≤ tau; feasible
/// coordinates are fixed at sign(x̄_i), the rest stay free. When every
/// coordinate is infeasible, the one closest to ±1 is fixed anyway so the
/// reduction always makes progress.
ReductionSplit split_feasible(const Eigen::VectorXd& x_bar, double tau);

/// Subproblem over the free coordinates: Q_h is the principal submatrix of
/// Q on free_indices and c_h,i = c_i − (Q x_p)_i. Throws InputError when
/// there is nothing to reduce (no free indices).
PrimalProblem reduce_problem(const PrimalProblem& parent, const ReductionSplit& split);

/// Objective offset of the fixed part: (1/2) x_pᵀ Q x_p − cᵀ x_p, so that
/// P_parent(lift(x_h)) = P_reduced(x_h) + offset for every x_h.
double fixed_part_offset(const PrimalProblem& parent, const ReductionSplit& split);

/// Recombines: fixed coordinates from the split, free coordinates from x_h
/// in index order.
Eigen::VectorXd lift_solution(const ReductionSplit& split, const Eigen::VectorXd& x_h);

} // namespace cdmc
