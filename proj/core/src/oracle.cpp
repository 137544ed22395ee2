#include "cdmc/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cdmc/errors.hpp"

namespace cdmc {

CutSolution brute_force_maxcut(const WeightedGraph& graph, int limit) {
    const int n1 = graph.num_vertices();
    if (n1 > limit) {
        throw SizeError("brute_force_maxcut: " + std::to_string(n1) +
                        " vertices exceeds the limit of " + std::to_string(limit));
    }
    const int n = n1 - 1;  // last vertex is the pivot, fixed at +1
    const Eigen::MatrixXd& w = graph.weights();

    // field(k) = Σ_j w_kj y_j; flipping y_k changes the cut by y_k · field(k)
    Eigen::VectorXd field = w.rowwise().sum();
    std::vector<double> y(static_cast<std::size_t>(n1), 1.0);

    double cut = 0.0;
    double best_cut = 0.0;
    std::uint64_t best_code = 0;

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int k = std::countr_zero(t);
        cut += y[static_cast<std::size_t>(k)] * field(k);
        field -= 2.0 * y[static_cast<std::size_t>(k)] * w.col(k);
        y[static_cast<std::size_t>(k)] = -y[static_cast<std::size_t>(k)];
        if (cut > best_cut) {
            best_cut = cut;
            best_code = t ^ (t >> 1);  // Gray code of t = current assignment
        }
    }

    CutSolution sol;
    sol.algorithm = Algorithm::Oracle;
    sol.certified_global = true;
    sol.x.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.x(i) = ((best_code >> i) & 1u) ? -1.0 : 1.0;
    }
    sol.y = extend_with_pivot(sol.x, n);
    sol.cut_weight = best_cut;
    // P = T − 2W links the two objective forms
    sol.primal_value = graph.total_edge_weight() - 2.0 * best_cut;
    return sol;
}

} // namespace cdmc
