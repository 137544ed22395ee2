#include "cdmc/graph.hpp"

#include <cmath>

namespace cdmc {

WeightedGraph::WeightedGraph(Eigen::MatrixXd weights, std::string name)
    : weights_(std::move(weights)), name_(std::move(name)) {
    const auto rows = weights_.rows();
    if (rows != weights_.cols()) {
        throw InputError("weight matrix must be square");
    }
    if (rows < 2) {
        throw InputError("graph needs at least 2 vertices");
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (weights_(i, i) != 0.0) {
            throw InputError("weight matrix must have a zero diagonal");
        }
        for (Eigen::Index j = i + 1; j < rows; ++j) {
            if (!std::isfinite(weights_(i, j)) || weights_(i, j) != weights_(j, i)) {
                throw InputError("weight matrix must be symmetric and finite");
            }
            total_edge_weight_ += weights_(i, j);
        }
    }
}

double cut_value(const WeightedGraph& graph, const Eigen::VectorXd& y) {
    const int n1 = graph.num_vertices();
    if (y.size() != n1) {
        throw InputError("cut_value: assignment length != num_vertices");
    }
    if (!is_sign_vector(y)) {
        throw InputError("cut_value: assignment entries must be -1 or +1");
    }
    // (1/4) Σ_ij w_ij (1 − y_i y_j) = (1/2) Σ_{i<j, y_i != y_j} 2 w_ij
    double cut = 0.0;
    const Eigen::MatrixXd& w = graph.weights();
    for (int i = 0; i < n1; ++i) {
        for (int j = i + 1; j < n1; ++j) {
            if (y(i) != y(j)) {
                cut += w(i, j);
            }
        }
    }
    return cut;
}

bool is_sign_vector(const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 1.0 && v(i) != -1.0) {
            return false;
        }
    }
    return true;
}

} // namespace cdmc
