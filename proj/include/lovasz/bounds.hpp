#pragma once

#include <optional>

#include "lovasz/graph.hpp"

namespace lovasz {

/// Two-eigenvalue relaxation of the walk-generating bound, minimised in
/// closed form. `value` is absent when the minimiser would leave [1/lambda_n, 0].
struct ClosedFormBound {
    std::optional<double> value;
    bool condition_satisfied = false;
    double condition = 0.0;  // -lambda_n (n - W1) / (lambda_1 W1), must be <= 1
    double top_weight = 0.0; // W1 = <1, P_{lambda_1} 1>
    double x = 0.0;          // closed-form minimiser (meaningful when satisfied)
};

struct BoundReport {
    int n = 0;
    std::optional<double> hoffman_regular;
    double walkgen_bound = 0.0;
    std::optional<ClosedFormBound> closed_form;  // absent for edgeless graphs
    double laplacian_bound = 0.0;
    std::optional<int> independence_witness;
    bool dominance_ok = false;  // walkgen <= laplacian + 1e-8
    bool witness_ok = true;     // every bound >= witness - 1e-7
};

inline constexpr double kDominanceTol = 1e-8;
inline constexpr double kWitnessTol = 1e-7;

/// -lambda_n n / (lambda_1 - lambda_n) for regular graphs with at least one edge.
std::optional<double> hoffman_regular(const Graph& g);

/// min of the unweighted walk-generating function on [1/lambda_n, 0];
/// n for edgeless graphs.
double walkgen_bound(const Graph& g);

/// Requires at least one edge (DomainError otherwise).
ClosedFormBound closed_form_bound(const Graph& g);

/// n (1 - delta / mu_1); n for edgeless graphs.
double laplacian_bound(const Graph& g);

BoundReport report(const Graph& g, std::optional<int> known_alpha = std::nullopt);

}  // namespace lovasz
