#include "lovasz/walkgen.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lovasz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double value_unchecked(const WalkGenFunction& w, double x) {
    double s = 0.0;
    for (const auto& t : w.terms) s += t.weight / (1.0 - t.rate * x);
    return s;
}

double deriv_unchecked(const WalkGenFunction& w, double x) {
    double s = 0.0;
    for (const auto& t : w.terms) {
        const double d = 1.0 - t.rate * x;
        s += t.weight * t.rate / (d * d);
    }
    return s;
}

void check_pole(const WalkGenFunction& w, double x) {
    for (const auto& t : w.terms) {
        if (t.rate == 0.0) continue;
        const double pole = 1.0 / t.rate;
        if (std::abs(x - pole) <= pole_tolerance(x)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "walk-generating function: x = " << x << " is on the pole 1/" << t.rate << " = " << pole;
            throw DomainError(msg.str());
        }
    }
}

struct Analysis {
    SpectralData<double> spectrum;
    WalkGenFunction w;
    bool min_pole = false;  // lambda_min eigenspace carries weight
    bool max_pole = false;
};

Analysis analyze(const DenseSymMatrix& a) {
    Analysis out{eig_sym(a), {}, false, false};
    out.w = build(out.spectrum);
    const auto spaces = eigenspaces(out.spectrum);
    if (!spaces.empty()) {
        out.min_pole = spaces.front().weight > out.spectrum.tol.weight;
        out.max_pole = spaces.back().weight > out.spectrum.tol.weight;
    }
    return out;
}

// Convex minimisation of W on [lo, hi] by bisection on the sign of W'.
// A pole endpoint has W = +inf there and is never evaluated.
IntervalMin minimize_convex(const WalkGenFunction& w, double lo, bool lo_pole, double hi, bool hi_pole) {
    IntervalMin out;
    out.lo = lo;
    out.hi = hi;
    if (!lo_pole && deriv_unchecked(w, lo) >= 0.0) {
        out.x_star = lo;
        out.at_endpoint = true;
    } else if (!hi_pole && deriv_unchecked(w, hi) <= 0.0) {
        out.x_star = hi;
        out.at_endpoint = true;
    } else {
        double a = lo, b = hi;
        double mid = 0.5 * (a + b);
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (a + b);
            const double d = deriv_unchecked(w, mid);
            if (d == 0.0) break;
            (d > 0.0 ? b : a) = mid;
            if (b - a <= 1e-15 * std::max({1.0, std::abs(a), std::abs(b)})) {
                mid = 0.5 * (a + b);
                break;
            }
        }
        out.x_star = mid;
    }
    out.value = value_unchecked(w, *out.x_star);
    out.derivative_at_x = deriv_unchecked(w, *out.x_star);
    return out;
}

IntervalMin zero_matrix_min(const DenseSymMatrix& a) {
    IntervalMin out;
    out.value = static_cast<double>(a.dim());
    out.lo = -kInf;
    out.hi = kInf;
    return out;
}

void require_spectral_interval(const SpectralData<double>& s) {
    if (!(s.lambda_min() < 0.0 && s.lambda_max() > 0.0))
        throw DomainError("walk-generating function: need lambda_min < 0 < lambda_max "
                          "(a nonzero matrix with zero diagonal)");
}

}  // namespace

WalkGenFunction build(const SpectralData<double>& s) {
    WalkGenFunction w;
    w.n_total = static_cast<double>(s.dim());
    for (const auto& c : cluster_weights(s)) w.terms.push_back({c.weight, c.value});
    return w;
}

WalkGenFunction build(const DenseSymMatrix& a) { return build(eig_sym(a)); }

double eval(const WalkGenFunction& w, double x) {
    check_pole(w, x);
    return value_unchecked(w, x);
}

double eval_deriv(const WalkGenFunction& w, double x) {
    check_pole(w, x);
    return deriv_unchecked(w, x);
}

double eval_second_deriv(const WalkGenFunction& w, double x) {
    check_pole(w, x);
    double s = 0.0;
    for (const auto& t : w.terms) {
        const double d = 1.0 - t.rate * x;
        s += 2.0 * t.weight * t.rate * t.rate / (d * d * d);
    }
    return s;
}

IntervalMin minimize_on_spectral_interval(const DenseSymMatrix& a) {
    if (a.frobenius_norm() <= kZeroMatrixNorm) return zero_matrix_min(a);
    const auto an = analyze(a);
    require_spectral_interval(an.spectrum);
    return minimize_convex(an.w, 1.0 / an.spectrum.lambda_min(), an.min_pole, 1.0 / an.spectrum.lambda_max(),
                           an.max_pole);
}

IntervalMin minimize_on_subinterval(const DenseSymMatrix& a, double lo, double hi) {
    if (a.frobenius_norm() <= kZeroMatrixNorm) return zero_matrix_min(a);
    const auto an = analyze(a);
    require_spectral_interval(an.spectrum);
    const double left = 1.0 / an.spectrum.lambda_min();
    const double right = 1.0 / an.spectrum.lambda_max();

    bool lo_pole = false, hi_pole = false;
    if (std::abs(lo - left) <= pole_tolerance(left)) {
        lo = left;
        lo_pole = an.min_pole;
    }
    if (std::abs(hi - right) <= pole_tolerance(right)) {
        hi = right;
        hi_pole = an.max_pole;
    }
    if (!(lo <= hi) || lo < left || hi > right) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "minimize_on_subinterval: [" << lo << ", " << hi << "] is not inside the spectral interval ["
            << left << ", " << right << "]";
        throw DomainError(msg.str());
    }
    return minimize_convex(an.w, lo, lo_pole, hi, hi_pole);
}

std::vector<std::pair<double, std::optional<double>>> sample(const WalkGenFunction& w, double lo, double hi,
                                                             int k) {
    std::vector<std::pair<double, std::optional<double>>> out;
    if (k <= 0) return out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double x = k == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (k - 1);
        bool on_pole = false;
        for (const auto& t : w.terms)
            if (t.rate != 0.0 && std::abs(x - 1.0 / t.rate) <= pole_tolerance(x)) on_pole = true;
        out.emplace_back(x, on_pole ? std::nullopt : std::optional<double>(value_unchecked(w, x)));
    }
    return out;
}

}  // namespace lovasz
