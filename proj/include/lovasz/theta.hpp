#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lovasz/graph.hpp"
#include "lovasz/walkgen.hpp"

namespace lovasz {

/// Real symmetric matrix supported on the edges of a graph, zero on the
/// diagonal and on non-edges. One weight per edge, in Graph::edges() order.
class WeightedAdjacency {
public:
    WeightedAdjacency(Graph g, std::vector<double> weights);

    static WeightedAdjacency unweighted(Graph g);

    /// Reads the edge entries of `m` (which must vanish off the edge support
    /// and on the diagonal, else DomainError).
    static WeightedAdjacency from_matrix(Graph g, const DenseSymMatrix& m);

    const Graph& graph() const { return graph_; }
    const std::vector<double>& weights() const { return weights_; }
    DenseSymMatrix matrix() const;

    WeightedAdjacency scaled(double t) const;

private:
    Graph graph_;
    std::vector<double> weights_;
};

struct PenalizedMax {
    double value = 0.0;              // lambda_max(J - A)
    Eigen::VectorXd top_eigvec;      // first vector of the top eigenspace
    int multiplicity = 0;            // size of the top eigenspace
    Eigen::MatrixXd top_basis;       // orthonormal basis of the top eigenspace
};

PenalizedMax lambda_max_penalized(const Graph& g, const std::vector<double>& weights);

struct ThetaOptions {
    int max_iterations = 5000;
    int stall_window = 200;
    double stall_tol = 1e-6;
    /// Start from the unweighted adjacency rescaled by optimal_scaling, so the
    /// starting value equals the unweighted walk-generating bound.
    bool scale_warm_start = true;
    bool record_history = false;
    /// Fill `lower` with the exact independence number (n <= 20 only).
    bool alpha_oracle = false;
};

struct ThetaEstimate {
    double upper = 0.0;
    std::optional<double> lower;
    std::vector<double> weights;  // weights at the best value seen
    int iterations = 0;
    bool converged = false;
    std::vector<double> values;        // lambda_max at every weight vector tried (record_history)
    std::vector<double> best_values;   // running minimum of `values`
};

/// Projected subgradient descent on the edge weights for min lambda_max(J - A).
/// `upper` is the best value seen and is always >= theta(G).
ThetaEstimate minimize_theta(const Graph& g, const ThetaOptions& opts = {});

struct ScalingResult {
    double t_star = 0.0;
    double value = 0.0;
};

/// min over t of lambda_max(J - t A); DomainError for the zero matrix.
ScalingResult optimal_scaling(const DenseSymMatrix& a);

struct OptimizerVector {
    Eigen::VectorXd v;
    double norm_sq = 0.0;
    double residual_orth = 0.0;    // |<v, A v>|
    double residual_sphere = 0.0;  // | |v|^2 - <1, v> |
    std::optional<double> y;       // minimiser of W_A; empty for A = 0
    bool endpoint = false;
};

/// Vector on the sphere <1, v> = |v|^2 with <v, A v> = 0 and |v|^2 equal to
/// the interval minimum of W_A.
OptimizerVector extract_optimizer(const DenseSymMatrix& a);

/// (A_G + gG I) (x) (A_H + gH I) - gG gH I, in the i * n_H + j basis.
/// Each gamma must satisfy gamma >= -lambda_min or gamma <= -lambda_max of
/// its factor (DomainError otherwise).
DenseSymMatrix product_matrix(const DenseSymMatrix& a_g, const DenseSymMatrix& a_h, double gamma_g,
                              double gamma_h);

WeightedAdjacency product_adjacency(const WeightedAdjacency& g, const WeightedAdjacency& h, double gamma_g,
                                    double gamma_h);

/// Eigenvalues (l_j + gG)(l_k + gH) - gG gH of the product, ascending.
Eigen::VectorXd product_eigenvalues(const DenseSymMatrix& a_g, const DenseSymMatrix& a_h, double gamma_g,
                                    double gamma_h);

struct SubmultiplicativityReport {
    double lhs = 0.0;  // best product-construction bound for G x H over the gamma grid
    double rhs = 0.0;  // fixed-A bound of G times that of H
    bool ok = false;
    int grid_points = 0;
    int factorization_checks = 0;
    double factorization_max_rel_error = 0.0;
    bool factorization_ok = false;
};

/// Unweighted adjacencies of G and H pushed through the product construction.
SubmultiplicativityReport submultiplicativity_check(const Graph& g, const Graph& h, std::uint64_t seed = 1,
                                                    int factorization_samples = 50);

}  // namespace lovasz
