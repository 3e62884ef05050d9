#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lovasz/walkgen.hpp"

namespace lovasz {

/// f(x) = sum_i alpha_i / (1 - beta_i x) with alpha_i > 0 and the beta_i
/// distinct and strictly descending.
class ReciprocalSum {
public:
    /// Throws DomainError unless the invariants above hold.
    ReciprocalSum(std::vector<double> alphas, std::vector<double> betas);

    /// Terms of a walk-generating function, reordered by descending rate.
    static ReciprocalSum from_walkgen(const WalkGenFunction& w);

    const std::vector<double>& alphas() const { return alphas_; }
    const std::vector<double>& betas() const { return betas_; }
    std::size_t order() const { return betas_.size(); }

    bool is_constant() const { return betas_.size() == 1 && betas_.front() == 0.0; }
    bool has_negative_rate() const { return betas_.back() < 0.0; }
    bool has_positive_rate() const { return betas_.front() > 0.0; }

    /// Finite poles 1/beta, ascending.
    std::vector<double> poles() const;

    // Unchecked: callers keep x off the poles.
    double value(double x) const;
    double deriv(double x) const;
    double second_deriv(double x) const;

    /// Limit of f at +-infinity: alpha of the beta = 0 term, else 0.
    double limit_at_infinity() const;

private:
    std::vector<double> alphas_;
    std::vector<double> betas_;
};

struct CriticalPoint {
    double x;
    double value;
    int curvature;  // sign of f'' at x: -1, 0 or +1
};

struct CriticalReport {
    std::vector<CriticalPoint> critical_points;
    std::optional<CriticalPoint> maximal;
    std::optional<std::pair<double, double>> strip;
    std::optional<std::pair<double, double>> strip_min;  // (x, f(x))
    int critical_points_in_strip = 0;
    bool duality_holds = false;
};

bool has_critical_points(const ReciprocalSum& f);

/// (1/beta_N, 1/beta_1) when beta_N < 0 < beta_1.
std::optional<std::pair<double, double>> central_strip(const ReciprocalSum& f);

/// Default scan range: every finite pole with margin, and at least [-1, 1].
std::pair<double, double> default_scan_range(const ReciprocalSum& f);

/// Sign changes of f' located by a dense scan of every pole-free interval
/// (20000 Chebyshev-clustered samples each) plus bisection. Outside
/// `x_range` the two unbounded tails are scanned in the variable s = 1/x.
/// A constant f reports the single representative point x = 0.
std::vector<CriticalPoint> enumerate_critical_points(const ReciprocalSum& f, std::pair<double, double> x_range);
std::vector<CriticalPoint> enumerate_critical_points(const ReciprocalSum& f);

/// Minimum of f on its central strip by bisection on f' (f is strictly
/// convex there). Empty when the strip does not exist.
std::optional<std::pair<double, double>> strip_minimum(const ReciprocalSum& f);

/// Checks that the largest critical value equals the strip minimum
/// (to `rel_tol` relative), that the maximal critical point lies strictly inside
/// the strip, and that the strip holds exactly one critical point, a minimum.
CriticalReport verify_duality(const ReciprocalSum& f, double rel_tol = 1e-8);

}  // namespace lovasz
