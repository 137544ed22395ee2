#pragma once

#include <string>
#include <utility>

#include <Eigen/Dense>

#include "cdmc/errors.hpp"

namespace cdmc {

/// Undirected weighted graph stored as a dense symmetric matrix.
///
/// Vertices are 0-based internally. The weight matrix must be symmetric
/// with a zero diagonal; instances derived from TSPLIB files are complete
/// graphs with integer distances stored as doubles.
class WeightedGraph {
public:
    WeightedGraph(Eigen::MatrixXd weights, std::string name = "");

    int num_vertices() const { return static_cast<int>(weights_.rows()); }
    const Eigen::MatrixXd& weights() const { return weights_; }
    double weight(int i, int j) const { return weights_(i, j); }
    const std::string& name() const { return name_; }

    /// Sum of w_ij over unordered pairs i < j.
    double total_edge_weight() const { return total_edge_weight_; }

private:
    Eigen::MatrixXd weights_;
    std::string name_;
    double total_edge_weight_ = 0.0;
};

/// Weight of the cut induced by the ±1 assignment y:
/// (1/4) Σ_i Σ_j w_ij (1 − y_i y_j).
/// Throws InputError if y has the wrong length or a non-±1 entry.
double cut_value(const WeightedGraph& graph, const Eigen::VectorXd& y);

/// Checks that every entry of v is exactly −1 or +1.
bool is_sign_vector(const Eigen::VectorXd& v);

} // namespace cdmc
