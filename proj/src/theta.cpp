#include "lovasz/theta.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "lovasz/spectral.hpp"

namespace lovasz {

WeightedAdjacency::WeightedAdjacency(Graph g, std::vector<double> weights)
    : graph_(std::move(g)), weights_(std::move(weights)) {
    if (weights_.size() != graph_.size())
        throw DomainError("WeightedAdjacency: " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(graph_.size()) + " edges");
}

WeightedAdjacency WeightedAdjacency::unweighted(Graph g) {
    std::vector<double> w(g.size(), 1.0);
    return WeightedAdjacency(std::move(g), std::move(w));
}

WeightedAdjacency WeightedAdjacency::from_matrix(Graph g, const DenseSymMatrix& m) {
    if (m.dim() != g.order()) throw DomainError("WeightedAdjacency: matrix dimension does not match graph order");
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (m(i, j) != 0.0 && (i == j || !g.has_edge(i, j)))
                throw DomainError("WeightedAdjacency: nonzero entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") outside the edge support");
    std::vector<double> w;
    w.reserve(g.size());
    for (const auto& [i, j] : g.edges()) w.push_back(m(i, j));
    return WeightedAdjacency(std::move(g), std::move(w));
}

DenseSymMatrix WeightedAdjacency::matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(graph_.order(), graph_.order());
    for (std::size_t e = 0; e < weights_.size(); ++e) {
        const auto [i, j] = graph_.edges()[e];
        a(i, j) = a(j, i) = weights_[e];
    }
    return DenseSymMatrix(std::move(a));
}

WeightedAdjacency WeightedAdjacency::scaled(double t) const {
    auto w = weights_;
    for (double& x : w) x *= t;
    return WeightedAdjacency(graph_, std::move(w));
}

namespace {

PenalizedMax top_of(const DenseSymMatrix& m) {
    const auto s = eig_sym(m);
    const Eigen::Index n = s.dim();
    PenalizedMax out;
    out.value = s.lambda_max();
    Eigen::Index first = n - 1;
    while (first > 0 && s.lambda_max() - s.eigenvalues(first - 1) <= s.tol.cluster) --first;
    out.multiplicity = static_cast<int>(n - first);
    out.top_basis = s.eigenvectors.rightCols(out.multiplicity);
    out.top_eigvec = out.top_basis.col(0);
    return out;
}

DenseSymMatrix penalized(const Graph& g, const std::vector<double>& weights) {
    const int n = g.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n);
    for (std::size_t e = 0; e < weights.size(); ++e) {
        const auto [i, j] = g.edges()[e];
        m(i, j) -= weights[e];
        m(j, i) -= weights[e];
    }
    return DenseSymMatrix(std::move(m));
}

// d lambda_max / d w_e = -2 u_i u_j, averaged over the top eigenspace basis.
Eigen::VectorXd subgradient(const Graph& g, const PenalizedMax& pm) {
    Eigen::VectorXd grad(static_cast<Eigen::Index>(g.size()));
    for (std::size_t e = 0; e < g.size(); ++e) {
        const auto [i, j] = g.edges()[e];
        grad(static_cast<Eigen::Index>(e)) =
            -2.0 * pm.top_basis.row(i).dot(pm.top_basis.row(j)) / pm.multiplicity;
    }
    return grad;
}

// Eigenspaces dropped as weightless still carry a tiny <1, u>, which the
// endpoint construction ignores. The helpers below move the eigen-coordinates
// x onto sum lambda x^2 = 0, |x|^2 = <c, x>, |x|^2 = target exactly.

// Minimum-norm Newton steps onto the first two constraints.
Eigen::VectorXd onto_cone_sphere(Eigen::VectorXd x, const Eigen::VectorXd& lambda, const Eigen::VectorXd& c,
                                 double tol) {
    for (int it = 0; it < 50; ++it) {
        const Eigen::Vector2d g(lambda.dot(x.cwiseAbs2()), x.squaredNorm() - c.dot(x));
        if (g.cwiseAbs().maxCoeff() <= tol) break;
        Eigen::MatrixXd jac(2, x.size());
        jac.row(0) = 2.0 * lambda.cwiseProduct(x).transpose();
        jac.row(1) = (2.0 * x - c).transpose();
        x -= jac.completeOrthogonalDecomposition().solve(g);
    }
    return x;
}

// Near the endpoint certificate |x|^2 is close to its constrained maximum,
// so the target is reached by sliding along a tangent of the feasible set.
std::optional<Eigen::VectorXd> certify(const Eigen::VectorXd& start, const Eigen::VectorXd& lambda,
                                       const Eigen::VectorXd& c, double target) {
    const double tol = 1e-15 * std::max(1.0, target) * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    const Eigen::VectorXd x = onto_cone_sphere(start, lambda, c, tol);
    auto excess = [&](const Eigen::VectorXd& z) { return z.squaredNorm() - target; };
    if (std::abs(excess(x)) <= tol) return x;
    if (excess(x) < 0.0) return std::nullopt;

    Eigen::MatrixXd jac(3, x.size());
    jac.row(0) = 2.0 * lambda.cwiseProduct(x).transpose();
    jac.row(1) = (2.0 * x - c).transpose();
    jac.row(2) = 2.0 * x.transpose();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeFullV);
    const Eigen::VectorXd t = svd.matrixV().col(x.size() - 1);
    auto at = [&](double s) { return onto_cone_sphere(x + s * t, lambda, c, tol); };

    double lo = 0.0, hi = 1e-3 * std::max(1.0, x.norm());
    Eigen::VectorXd best = at(hi);
    for (int k = 0; k < 60 && excess(best) > 0.0; ++k) {
        lo = hi;
        hi *= 2.0;
        best = at(hi);
    }
    if (excess(best) > 0.0) return std::nullopt;
    for (int it = 0; it < 200 && std::abs(excess(best)) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Eigen::VectorXd z = at(mid);
        (excess(z) > 0.0 ? lo : hi) = mid;
        best = z;
    }
    return best;
}

}  // namespace

PenalizedMax lambda_max_penalized(const Graph& g, const std::vector<double>& weights) {
    if (weights.size() != g.size())
        throw DomainError("lambda_max_penalized: " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(g.size()) + " edges");
    return top_of(penalized(g, weights));
}

ThetaEstimate minimize_theta(const Graph& g, const ThetaOptions& opts) {
    ThetaEstimate est;
    if (opts.alpha_oracle) {
        if (g.order() > 20) throw DomainError("minimize_theta: alpha oracle limited to n <= 20");
        est.lower = independence_number(g);
    }

    std::vector<double> w(g.size(), 1.0);
    auto record = [&](double value) {
        if (!opts.record_history) return;
        est.values.push_back(value);
        est.best_values.push_back(est.best_values.empty() ? value : std::min(value, est.best_values.back()));
    };

    PenalizedMax pm = lambda_max_penalized(g, w);
    record(pm.value);
    if (g.size() > 0 && opts.scale_warm_start) {
        const double t = optimal_scaling(adjacency(g)).t_star;
        for (double& x : w) x *= t;
        pm = lambda_max_penalized(g, w);
        record(pm.value);
    }
    est.upper = pm.value;
    est.weights = w;
    if (g.size() == 0) {
        est.converged = true;
        return est;
    }

    const auto n = static_cast<double>(g.order());
    Eigen::Map<Eigen::VectorXd> wv(w.data(), static_cast<Eigen::Index>(w.size()));
    std::vector<double> best_trace{est.upper};
    double c = 0.0;
    int k = 1;
    for (; k <= opts.max_iterations; ++k) {
        const Eigen::VectorXd grad = subgradient(g, pm);
        const double gnorm = grad.norm();
        if (gnorm == 0.0) {
            est.converged = true;
            break;
        }
        if (k == 1) c = n / gnorm;
        wv -= (c / std::sqrt(static_cast<double>(k))) * grad;

        pm = lambda_max_penalized(g, w);
        record(pm.value);
        if (pm.value < est.upper) {
            est.upper = pm.value;
            est.weights = w;
        }
        best_trace.push_back(est.upper);
        if (k >= opts.stall_window &&
            best_trace[best_trace.size() - 1 - opts.stall_window] - est.upper < opts.stall_tol) {
            est.converged = true;
            break;
        }
    }
    est.iterations = std::min(k, opts.max_iterations);
    return est;
}

ScalingResult optimal_scaling(const DenseSymMatrix& a) {
    if (a.frobenius_norm() <= kZeroMatrixNorm) throw DomainError("optimal_scaling: A is the zero matrix");
    const auto n = a.dim();
    const auto s = eig_sym(a);
    const double gap = std::min(std::abs(s.lambda_min()), std::abs(s.lambda_max()));
    if (!(s.lambda_min() < 0.0 && s.lambda_max() > 0.0))
        throw DomainError("optimal_scaling: need lambda_min < 0 < lambda_max");

    // lambda_max(J - tA) >= |t| * gap, and the value at t = 0 is n
    const double bound = 4.0 * static_cast<double>(n) / gap;
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n);
    auto top = [&](double t) { return top_of(DenseSymMatrix(j - t * a.matrix())); };
    auto f = [&](double t) { return top(t).value; };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = -bound, hi = bound;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-13 * bound) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }

    // refine on the sign of the subgradient -<u, A u>
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto pm = top(mid);
        const double slope = -pm.top_eigvec.dot(a.matrix() * pm.top_eigvec);
        if (slope == 0.0) {
            lo = hi = mid;
            break;
        }
        (slope > 0.0 ? hi : lo) = mid;
    }
    ScalingResult out;
    out.t_star = 0.5 * (lo + hi);
    out.value = f(out.t_star);
    return out;
}

OptimizerVector extract_optimizer(const DenseSymMatrix& a) {
    const auto n = a.dim();
    OptimizerVector out;
    if (a.frobenius_norm() <= kZeroMatrixNorm) {
        out.v = Eigen::VectorXd::Ones(n);
    } else {
        const auto m = minimize_on_spectral_interval(a);
        const double y = *m.x_star;
        out.y = y;
        out.endpoint = m.at_endpoint;
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
        if (!m.at_endpoint) {
            const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - y * a.matrix();
            const Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
            const double rcond = lu.rcond();
            if (rcond > 1e-14) {
                out.v = lu.solve(ones);
            } else {
                // 1/y is an eigenvalue whose eigenspace is orthogonal to 1: solve on the weighted spectrum
                const auto s = eig_sym(a);
                out.v = Eigen::VectorXd::Zero(n);
                for (const auto& c : cluster_weights(s)) {
                    const double d = 1.0 - c.value * y;
                    if (std::abs(d) <= pole_tolerance(y) * std::abs(c.value)) {
                        std::ostringstream msg;
                        msg << "extract_optimizer: y = " << y << " sits on a weighted pole (rcond " << rcond << ")";
                        throw NumericalError(msg.str());
                    }
                    const auto basis = s.eigenvectors.middleCols(c.first, c.count);
                    out.v += basis * (basis.transpose() * ones) / d;
                }
            }
        } else {
            const auto s = eig_sym(a);
            const auto spaces = eigenspaces(s);
            const bool left = y < 0.0;
            const auto& end = left ? spaces.front() : spaces.back();
            // cluster sum over the other eigenvectors, then the kernel component
            out.v = Eigen::VectorXd::Zero(n);
            double slope = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i >= end.first && i < end.first + end.count) continue;
                const double c = s.eigenvectors.col(i).dot(ones);
                const double d = 1.0 - s.eigenvalues(i) * y;
                out.v += (c / d) * s.eigenvectors.col(i);
                slope += s.eigenvalues(i) * c * c / (d * d);
            }
            // the unit kernel vector whose eigenvalue is exactly 1/y
            const Eigen::Index kernel = left ? end.first : end.first + end.count - 1;
            out.v += std::sqrt(std::max(0.0, -y * slope)) * s.eigenvectors.col(kernel);
            const Eigen::VectorXd c = s.eigenvectors.transpose() * ones;
            if (c.segment(end.first, end.count).squaredNorm() > 0.0) {
                // try both signs of the kernel component; one starts above the target
                for (double sign : {1.0, -1.0}) {
                    Eigen::VectorXd x = s.eigenvectors.transpose() * out.v;
                    x(kernel) *= sign;
                    if (const auto fixed = certify(x, s.eigenvalues, c, m.value)) {
                        out.v = s.eigenvectors * *fixed;
                        break;
                    }
                }
            }
        }
    }
    out.norm_sq = out.v.squaredNorm();
    out.residual_orth = std::abs(out.v.dot(a.matrix() * out.v));
    out.residual_sphere = std::abs(out.norm_sq - out.v.sum());
    return out;
}

}  // namespace lovasz
