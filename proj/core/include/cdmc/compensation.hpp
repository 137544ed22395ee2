#pragma once

#include <Eigen/Dense>

#include "cdmc/primal.hpp"

namespace cdmc {

inline constexpr double kImproveTol = 1e-9;  // flip acceptance threshold
inline constexpr int kPassCap = 100;

/// Change of the primal objective when x_i is negated:
/// ΔP = 2 x_i (c_i − (Qx)_i), computed in O(n).
double flip_delta(const PrimalProblem& prob, const Eigen::VectorXd& x, int i);

struct CompensationResult {
    Eigen::VectorXd x;
    int passes = 0;
};

/// Accept-first single-flip descent: sweeps i = 1..n repeatedly, negating
/// any coordinate that improves the primal by more than kImproveTol, until
/// a full sweep makes no change (or kPassCap sweeps). The objective never
/// increases and the result admits no further improving flip.
CompensationResult compensate(const PrimalProblem& prob, Eigen::VectorXd x);

} // namespace cdmc
