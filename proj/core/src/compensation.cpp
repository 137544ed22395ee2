#include "cdmc/compensation.hpp"

#include "cdmc/errors.hpp"

namespace cdmc {

double flip_delta(const PrimalProblem& prob, const Eigen::VectorXd& x, int i) {
    if (x.size() != prob.n()) throw InputError("flip_delta: dimension mismatch");
    if (i < 0 || i >= prob.n()) throw InputError("flip_delta: index out of range");
    const double qx_i = prob.Q.row(i).dot(x);
    return 2.0 * x(i) * (prob.c(i) - qx_i);
}

CompensationResult compensate(const PrimalProblem& prob, Eigen::VectorXd x) {
    if (x.size() != prob.n()) throw InputError("compensate: dimension mismatch");
    const int n = prob.n();
    Eigen::VectorXd qx = prob.Q * x;
    CompensationResult result;
    for (int pass = 0; pass < kPassCap; ++pass) {
        ++result.passes;
        bool improved = false;
        for (int i = 0; i < n; ++i) {
            const double delta = 2.0 * x(i) * (prob.c(i) - qx(i));
            if (delta < -kImproveTol) {
                x(i) = -x(i);
                qx += 2.0 * x(i) * prob.Q.col(i);
                improved = true;
            }
        }
        if (!improved) break;
    }
    result.x = std::move(x);
    return result;
}

} // namespace cdmc
