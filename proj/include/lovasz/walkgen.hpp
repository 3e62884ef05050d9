#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lovasz/graph.hpp"
#include "lovasz/spectral.hpp"

namespace lovasz {

/// One term a / (1 - b x) of a walk-generating function.
struct WalkTerm {
    double weight;  // a = <1, P_lambda 1> > 0
    double rate;    // b = lambda
};

/// W(x) = sum_i a_i / (1 - b_i x), zero-weight eigenspaces removed.
/// Rates are strictly ascending.
struct WalkGenFunction {
    std::vector<WalkTerm> terms;
    double n_total = 0.0;  // dimension of the matrix; equals the sum of weights
};

/// Minimum of W over a closed interval.
struct IntervalMin {
    std::optional<double> x_star;  // empty for the zero matrix (interval is the whole line)
    double value = 0.0;
    bool at_endpoint = false;
    double derivative_at_x = 0.0;
    double lo = 0.0, hi = 0.0;  // interval searched (+-inf for the zero matrix)
};

/// Below this Frobenius norm a matrix is treated as the zero matrix.
inline constexpr double kZeroMatrixNorm = 1e-12;

WalkGenFunction build(const DenseSymMatrix& a);
WalkGenFunction build(const SpectralData<double>& s);

/// Distance within which x counts as sitting on the pole 1/b.
inline double pole_tolerance(double x) { return 1e-9 * (1.0 + std::abs(x)); }

/// Throw DomainError when x is within pole_tolerance of a pole.
double eval(const WalkGenFunction& w, double x);
double eval_deriv(const WalkGenFunction& w, double x);
double eval_second_deriv(const WalkGenFunction& w, double x);

IntervalMin minimize_on_spectral_interval(const DenseSymMatrix& a);

/// [lo, hi] must lie inside [1/lambda_min, 1/lambda_max]; endpoints within
/// pole_tolerance of the spectral endpoints are snapped onto them.
IntervalMin minimize_on_subinterval(const DenseSymMatrix& a, double lo, double hi);

/// k evenly spaced samples of W on [lo, hi]; samples on a pole are gaps.
std::vector<std::pair<double, std::optional<double>>> sample(const WalkGenFunction& w, double lo, double hi,
                                                             int k);

}  // namespace lovasz
