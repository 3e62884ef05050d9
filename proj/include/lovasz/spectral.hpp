#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lovasz/errors.hpp"
#include "lovasz/graph.hpp"

namespace lovasz {

/// Thresholds used when turning a floating-point spectrum into the
/// eigenvalue/projection-weight pairs of a walk-generating function.
template <typename Scalar>
struct SpectralTolerances {
    Scalar eig;      // residual bound |M u - lambda u|
    Scalar cluster;  // eigenvalues closer than this are one eigenspace
    Scalar weight;   // projection weights at or below this count as zero

    static SpectralTolerances defaults(Scalar frobenius_norm, Eigen::Index n) {
        using std::max;
        return {Scalar(1e-10) * frobenius_norm, Scalar(1e-7) * max(Scalar(1), frobenius_norm),
                Scalar(1e-9) * Scalar(n)};
    }
};

/// One eigenspace: eigenvalues [first, first + count) of the ascending list.
template <typename Scalar>
struct Cluster {
    Scalar value;   // representative eigenvalue
    Scalar weight;  // <1, P 1>
    Eigen::Index first;
    Eigen::Index count;
};

template <typename Scalar>
struct SpectralData {
    VectorX<Scalar> eigenvalues;   // ascending
    MatrixX<Scalar> eigenvectors;  // orthonormal columns, matching eigenvalues
    SpectralTolerances<Scalar> tol;
    int sweeps = 0;

    Eigen::Index dim() const { return eigenvalues.size(); }
    Scalar lambda_min() const { return eigenvalues(0); }
    Scalar lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }

    /// Squared overlaps <1, u_i>^2, one per eigenvector.
    VectorX<Scalar> overlaps() const {
        return (eigenvectors.transpose() * VectorX<Scalar>::Ones(dim())).array().square().matrix();
    }
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const MatrixX<Scalar>& a) {
    using std::sqrt;
    Scalar s(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < j; ++i) s += 2 * a(i, j) * a(i, j);
    return sqrt(s);
}

}  // namespace detail

/// Symmetric eigendecomposition by cyclic Jacobi rotations. Eigenvalues come
/// back ascending. Throws NumericalError when the sweep cap is reached and the
/// residual still exceeds tol.eig.
template <typename Scalar>
SpectralData<Scalar> eig_sym(const SymMatrix<Scalar>& m, int max_sweeps = 100) {
    using std::abs;
    using std::sqrt;
    const Eigen::Index n = m.dim();
    const Scalar norm = m.frobenius_norm();

    MatrixX<Scalar> a = m.matrix();
    MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);
    const Scalar stop = std::numeric_limits<Scalar>::epsilon() * norm;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= stop) break;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq == Scalar(0)) continue;
                const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
                const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + 1));
                const Scalar c = 1 / sqrt(t * t + 1);
                const Scalar s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = Scalar(0);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

    SpectralData<Scalar> out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(order[k], order[k]);
        out.eigenvectors.col(k) = v.col(order[k]);
    }
    out.tol = SpectralTolerances<Scalar>::defaults(norm, n);
    out.sweeps = sweep;

    if (sweep == max_sweeps) {
        const Scalar residual =
            (m.matrix() * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal()).norm();
        if (residual > out.tol.eig)
            throw NumericalError("eig_sym: no convergence after " + std::to_string(max_sweeps) +
                                 " sweeps, residual " + std::to_string(static_cast<double>(residual)));
    }
    return out;
}

/// Groups the ascending spectrum into eigenspaces. Neighbouring eigenvalues
/// within `tol_cluster` of each other are chained into one cluster; the
/// representative value is the overlap-weighted mean (plain mean when the
/// cluster is orthogonal to the all-ones vector). Every cluster is returned,
/// including zero-weight ones.
template <typename Scalar>
std::vector<Cluster<Scalar>> eigenspaces(const SpectralData<Scalar>& s, Scalar tol_cluster) {
    std::vector<Cluster<Scalar>> out;
    const VectorX<Scalar> w = s.overlaps();
    const Eigen::Index n = s.dim();
    for (Eigen::Index i = 0; i < n;) {
        Eigen::Index j = i + 1;
        while (j < n && s.eigenvalues(j) - s.eigenvalues(j - 1) <= tol_cluster) ++j;
        const Scalar weight = w.segment(i, j - i).sum();
        Scalar value;
        if (weight > Scalar(0))
            value = w.segment(i, j - i).dot(s.eigenvalues.segment(i, j - i)) / weight;
        else
            value = s.eigenvalues.segment(i, j - i).mean();
        out.push_back({value, weight, i, j - i});
        i = j;
    }
    return out;
}

template <typename Scalar>
std::vector<Cluster<Scalar>> eigenspaces(const SpectralData<Scalar>& s) {
    return eigenspaces(s, s.tol.cluster);
}

/// Clusters that carry weight: the (lambda, <1, P_lambda 1>) pairs of a
/// walk-generating function. Weights at or below `tol_weight` are dropped.
template <typename Scalar>
std::vector<Cluster<Scalar>> cluster_weights(const SpectralData<Scalar>& s, Scalar tol_cluster,
                                             Scalar tol_weight) {
    auto all = eigenspaces(s, tol_cluster);
    std::erase_if(all, [&](const Cluster<Scalar>& c) { return c.weight <= tol_weight; });
    return all;
}

template <typename Scalar>
std::vector<Cluster<Scalar>> cluster_weights(const SpectralData<Scalar>& s) {
    return cluster_weights(s, s.tol.cluster, s.tol.weight);
}

}  // namespace lovasz
