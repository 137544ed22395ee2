#pragma once

#include <random>

#include <Eigen/Dense>

#include "cdmc/graph.hpp"
#include "cdmc/primal.hpp"

namespace cdmc::testing {

/// The 10-vertex regression instance: a randomly generated complete graph
/// whose non-pivot weight block and pivot column are fixed below, together
/// with the explicit perturbation vectors and the known dual critical point.
struct RegressionInstance {
    Eigen::MatrixXd Q;
    Eigen::VectorXd c;          // = −(pivot column)
    Eigen::VectorXd alpha;
    Eigen::VectorXd beta;
    Eigen::VectorXd sigma_star; // 4-decimal critical point
    Eigen::VectorXd x_star;     // known global minimizer, P(x_star) = −69
};

inline RegressionInstance regression_instance() {
    RegressionInstance r;
    r.Q.resize(9, 9);
    r.Q << 0, 6, 4, 8, 4, 5, 5, 6, 8,
           6, 0, 3, 9, 4, 5, 5, 8, 7,
           4, 3, 0, 6, 2, 4, 7, 5, 4,
           8, 9, 6, 0, 7, 4, 7, 6, 6,
           4, 4, 2, 7, 0, 7, 5, 4, 6,
           5, 5, 4, 4, 7, 0, 0, 2, 7,
           5, 5, 7, 7, 5, 0, 0, 4, 5,
           6, 8, 5, 6, 4, 2, 4, 0, 2,
           8, 7, 4, 6, 6, 7, 5, 2, 0;
    r.c.resize(9);
    r.c << -2, -5, -3, -5, -2, -5, -4, -5, -7;
    r.alpha.resize(9);
    r.alpha << -17.3208, -2.8050, -36.5410, -1.1174, -38.3706,
               -77.0470, -20.1651, -31.3002, -34.9461;
    r.beta.resize(9);
    r.beta << 605.7162, 601.1675, 330.2360, 277.4284, 674.9582,
              540.0750, 537.7345, 690.3018, 371.8627;
    r.sigma_star.resize(9);
    r.sigma_star << 34.0286, 19.9327, 50.1747, 12.6699, 55.9428,
                    88.7105, 30.2908, 45.0242, 45.6742;
    r.x_star.resize(9);
    r.x_star << 1, 1, 1, -1, 1, -1, -1, -1, -1;
    return r;
}

/// The graph whose build_primal(pivot = 9) reproduces the regression (Q, c):
/// pivot column w_{i,9} = −c_i.
inline WeightedGraph regression_graph() {
    const RegressionInstance r = regression_instance();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(10, 10);
    w.topLeftCorner(9, 9) = r.Q;
    w.col(9).head(9) = -r.c;
    w.row(9).head(9) = (-r.c).transpose();
    return WeightedGraph(std::move(w), "regression10");
}

/// Complete graph with integer weights drawn uniformly from [lo, hi].
inline WeightedGraph random_graph(std::mt19937_64& rng, int num_vertices,
                                  int lo = 1, int hi = 10) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(num_vertices, num_vertices);
    for (int i = 0; i < num_vertices; ++i) {
        for (int j = i + 1; j < num_vertices; ++j) {
            w(i, j) = w(j, i) = static_cast<double>(dist(rng));
        }
    }
    return WeightedGraph(std::move(w), "random" + std::to_string(num_vertices));
}

/// Symmetric zero-diagonal matrix with real entries in [lo, hi].
inline Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n,
                                        double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q(i, j) = q(j, i) = dist(rng);
        }
    }
    return q;
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, int n,
                                     double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = dist(rng);
    return v;
}

inline Eigen::VectorXd random_signs(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> bit(0, 1);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = bit(rng) ? 1.0 : -1.0;
    return v;
}

/// Exhaustive argmin of the primal over {−1,+1}^n (n ≤ 20 or so).
inline std::pair<double, Eigen::VectorXd> enumerate_primal_min(const PrimalProblem& prob) {
    const int n = prob.n();
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x;
    Eigen::VectorXd x(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        for (int i = 0; i < n; ++i) x(i) = ((code >> i) & 1u) ? -1.0 : 1.0;
        const double v = primal_value(prob, x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    return {best, best_x};
}

} // namespace cdmc::testing
