#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lovasz/spectral.hpp"
#include "lovasz/theta.hpp"

namespace lovasz {

namespace {

void check_gamma(const SpectralData<double>& s, double gamma, const char* which) {
    const double lmin = s.dim() ? s.lambda_min() : 0.0;
    const double lmax = s.dim() ? s.lambda_max() : 0.0;
    const double slack = 1e-9 * (1.0 + std::max(std::abs(lmin), std::abs(lmax)));
    if (gamma >= -lmin - slack || gamma <= -lmax + slack) return;
    std::ostringstream msg;
    msg.precision(17);
    msg << "product_adjacency: gamma_" << which << " = " << gamma << " lies in the forbidden band (" << -lmax
        << ", " << -lmin << ")";
    throw DomainError(msg.str());
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Candidate gammas: a few points on each admissible ray, plus the one that
// maps onto the factor's own interval minimiser x* via gamma = -1/x*.
std::vector<double> gamma_grid(const DenseSymMatrix& a) {
    if (a.frobenius_norm() <= kZeroMatrixNorm) return {1.0, -1.0};
    const auto s = eig_sym(a);
    std::vector<double> grid;
    for (double f : {1.0, 1.5, 2.5}) {
        grid.push_back(-s.lambda_min() * f);
        grid.push_back(-s.lambda_max() * f);
    }
    const auto m = minimize_on_spectral_interval(a);
    if (m.x_star && *m.x_star != 0.0) grid.push_back(-1.0 / *m.x_star);
    return grid;
}

double random_gamma(const SpectralData<double>& s, std::mt19937_64& rng) {
    const double lmin = s.dim() ? s.lambda_min() : 0.0;
    const double lmax = s.dim() ? s.lambda_max() : 0.0;
    const double scale = std::max({1.0, std::abs(lmin), std::abs(lmax)});
    std::uniform_real_distribution<double> offset(0.05 * scale, 3.0 * scale);
    std::bernoulli_distribution upper(0.5);
    return upper(rng) ? -lmin + offset(rng) : -lmax - offset(rng);
}

}  // namespace

DenseSymMatrix product_matrix(const DenseSymMatrix& a_g, const DenseSymMatrix& a_h, double gamma_g,
                              double gamma_h) {
    check_gamma(eig_sym(a_g), gamma_g, "G");
    check_gamma(eig_sym(a_h), gamma_h, "H");
    const auto ng = a_g.dim(), nh = a_h.dim();
    const Eigen::MatrixXd left = a_g.matrix() + gamma_g * Eigen::MatrixXd::Identity(ng, ng);
    const Eigen::MatrixXd right = a_h.matrix() + gamma_h * Eigen::MatrixXd::Identity(nh, nh);
    Eigen::MatrixXd m = kron(left, right);
    m.diagonal().array() -= gamma_g * gamma_h;
    return DenseSymMatrix(std::move(m));
}

WeightedAdjacency product_adjacency(const WeightedAdjacency& g, const WeightedAdjacency& h, double gamma_g,
                                    double gamma_h) {
    return WeightedAdjacency::from_matrix(strong_product(g.graph(), h.graph()),
                                          product_matrix(g.matrix(), h.matrix(), gamma_g, gamma_h));
}

Eigen::VectorXd product_eigenvalues(const DenseSymMatrix& a_g, const DenseSymMatrix& a_h, double gamma_g,
                                    double gamma_h) {
    const auto sg = eig_sym(a_g);
    const auto sh = eig_sym(a_h);
    std::vector<double> vals;
    for (Eigen::Index j = 0; j < sg.dim(); ++j)
        for (Eigen::Index k = 0; k < sh.dim(); ++k)
            vals.push_back((sg.eigenvalues(j) + gamma_g) * (sh.eigenvalues(k) + gamma_h) - gamma_g * gamma_h);
    std::sort(vals.begin(), vals.end());
    return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

SubmultiplicativityReport submultiplicativity_check(const Graph& g, const Graph& h, std::uint64_t seed,
                                                    int factorization_samples) {
    const auto a_g = adjacency(g);
    const auto a_h = adjacency(h);
    SubmultiplicativityReport r;
    r.rhs = minimize_on_spectral_interval(a_g).value * minimize_on_spectral_interval(a_h).value;

    r.lhs = std::numeric_limits<double>::infinity();
    for (double gg : gamma_grid(a_g)) {
        for (double gh : gamma_grid(a_h)) {
            r.lhs = std::min(r.lhs, minimize_on_spectral_interval(product_matrix(a_g, a_h, gg, gh)).value);
            ++r.grid_points;
        }
    }
    r.ok = r.lhs <= r.rhs + 1e-6;

    // W_{A_GH}(-1/(gG gH)) = W_G(-1/gG) W_H(-1/gH)
    const auto sg = eig_sym(a_g);
    const auto sh = eig_sym(a_h);
    const auto wg = build(sg);
    const auto wh = build(sh);
    std::mt19937_64 rng(seed);
    r.factorization_ok = true;
    for (int k = 0; k < factorization_samples; ++k) {
        const double gg = random_gamma(sg, rng);
        const double gh = random_gamma(sh, rng);
        const auto w_prod = build(product_matrix(a_g, a_h, gg, gh));
        const double lhs = eval(w_prod, -1.0 / (gg * gh));
        const double rhs = eval(wg, -1.0 / gg) * eval(wh, -1.0 / gh);
        const double err = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        r.factorization_max_rel_error = std::max(r.factorization_max_rel_error, err);
        ++r.factorization_checks;
    }
    r.factorization_ok = r.factorization_max_rel_error <= 1e-8;
    return r;
}

}  // namespace lovasz
