#include "lovasz/reciprocal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lovasz {

namespace {

constexpr int kSamplesPerInterval = 20000;

// f'(1/s) * (1/s)^2 = sum alpha beta / (s - beta)^2, same sign as f' for s != 0.
double tail_deriv(const ReciprocalSum& f, double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.order(); ++i) {
        const double d = s - f.betas()[i];
        acc += f.alphas()[i] * f.betas()[i] / (d * d);
    }
    return acc;
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection on a sign change of g in [a, b].
template <typename G>
double refine(G&& g, double a, double b) {
    int sa = sign(g(a));
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const int sm = sign(g(m));
        if (sm == 0) return m;
        if (sm == sa) {
            a = m;
        } else {
            b = m;
        }
        if (std::abs(b - a) <= 1e-16 * std::max({1.0, std::abs(a), std::abs(b)})) break;
    }
    return 0.5 * (a + b);
}

// Appends every root of g found on the sample grid.
template <typename G>
void scan(G&& g, const std::vector<double>& grid, std::vector<double>& roots) {
    if (grid.empty()) return;
    double prev = g(grid[0]);
    if (prev == 0.0) roots.push_back(grid[0]);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double cur = g(grid[k]);
        if (cur == 0.0) {
            roots.push_back(grid[k]);
        } else if (prev != 0.0 && sign(prev) != sign(cur)) {
            roots.push_back(refine(g, grid[k - 1], grid[k]));
        }
        prev = cur;
    }
}

// Interior grid of (a, b), denser towards both ends; ends included on request.
std::vector<double> clustered_grid(double a, double b, bool include_a, bool include_b) {
    std::vector<double> g;
    g.reserve(kSamplesPerInterval + 1);
    if (include_a) g.push_back(a);
    for (int k = 1; k < kSamplesPerInterval; ++k) {
        const double t = (1.0 - std::cos(std::numbers::pi * k / kSamplesPerInterval)) / 2.0;
        g.push_back(a + (b - a) * t);
    }
    if (include_b) g.push_back(b);
    return g;
}

std::vector<double> uniform_open_grid(double a, double b) {
    std::vector<double> g;
    g.reserve(kSamplesPerInterval);
    for (int k = 0; k < kSamplesPerInterval; ++k) g.push_back(a + (b - a) * k / kSamplesPerInterval);
    return g;
}

int curvature_sign(const ReciprocalSum& f, double x) {
    const double c = f.second_deriv(x);
    double scale = 0.0;
    for (std::size_t i = 0; i < f.order(); ++i) {
        const double d = 1.0 - f.betas()[i] * x;
        scale += std::abs(2.0 * f.alphas()[i] * f.betas()[i] * f.betas()[i] / (d * d * d));
    }
    return std::abs(c) <= 1e-12 * scale ? 0 : sign(c);
}

}  // namespace

ReciprocalSum::ReciprocalSum(std::vector<double> alphas, std::vector<double> betas)
    : alphas_(std::move(alphas)), betas_(std::move(betas)) {
    if (alphas_.size() != betas_.size()) throw DomainError("ReciprocalSum: alphas and betas differ in length");
    if (alphas_.empty()) throw DomainError("ReciprocalSum: needs at least one term");
    for (double a : alphas_)
        if (!(a > 0.0)) throw DomainError("ReciprocalSum: alphas must be strictly positive");
    for (std::size_t i = 1; i < betas_.size(); ++i)
        if (!(betas_[i - 1] > betas_[i])) throw DomainError("ReciprocalSum: betas must be strictly descending");
}

ReciprocalSum ReciprocalSum::from_walkgen(const WalkGenFunction& w) {
    std::vector<double> a, b;
    for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
        a.push_back(it->weight);
        b.push_back(it->rate);
    }
    return ReciprocalSum(std::move(a), std::move(b));
}

std::vector<double> ReciprocalSum::poles() const {
    std::vector<double> p;
    for (double b : betas_)
        if (b != 0.0) p.push_back(1.0 / b);
    std::sort(p.begin(), p.end());
    return p;
}

double ReciprocalSum::value(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < order(); ++i) s += alphas_[i] / (1.0 - betas_[i] * x);
    return s;
}

double ReciprocalSum::deriv(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < order(); ++i) {
        const double d = 1.0 - betas_[i] * x;
        s += alphas_[i] * betas_[i] / (d * d);
    }
    return s;
}

double ReciprocalSum::second_deriv(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < order(); ++i) {
        const double d = 1.0 - betas_[i] * x;
        s += 2.0 * alphas_[i] * betas_[i] * betas_[i] / (d * d * d);
    }
    return s;
}

double ReciprocalSum::limit_at_infinity() const {
    for (std::size_t i = 0; i < order(); ++i)
        if (betas_[i] == 0.0) return alphas_[i];
    return 0.0;
}

bool has_critical_points(const ReciprocalSum& f) {
    return (f.has_negative_rate() && f.has_positive_rate()) || f.is_constant();
}

std::optional<std::pair<double, double>> central_strip(const ReciprocalSum& f) {
    if (!(f.has_negative_rate() && f.has_positive_rate())) return std::nullopt;
    return std::pair{1.0 / f.betas().back(), 1.0 / f.betas().front()};
}

std::pair<double, double> default_scan_range(const ReciprocalSum& f) {
    const auto p = f.poles();
    if (p.empty()) return {-1.0, 1.0};
    const double lo = p.front() - 0.5 * std::abs(p.front()) - 1.0;
    const double hi = p.back() + 0.5 * std::abs(p.back()) + 1.0;
    return {std::min(lo, -1.0), std::max(hi, 1.0)};
}

std::vector<CriticalPoint> enumerate_critical_points(const ReciprocalSum& f, std::pair<double, double> x_range) {
    if (f.is_constant()) return {{0.0, f.value(0.0), 0}};
    auto [lo, hi] = x_range;
    const auto poles = f.poles();
    if (!poles.empty() && (lo >= poles.front() || hi <= poles.back()))
        throw DomainError("enumerate_critical_points: x_range must strictly contain every pole");
    if (!(lo < 0.0 && hi > 0.0)) throw DomainError("enumerate_critical_points: x_range must contain 0");

    std::vector<double> roots;
    auto fprime = [&](double x) { return f.deriv(x); };

    // bounded pieces between range ends and poles
    std::vector<double> cuts{lo};
    cuts.insert(cuts.end(), poles.begin(), poles.end());
    cuts.push_back(hi);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const bool a_is_end = k == 0;
        const bool b_is_end = k + 2 == cuts.size();
        scan(fprime, clustered_grid(cuts[k], cuts[k + 1], a_is_end, b_is_end), roots);
    }

    // unbounded tails in s = 1/x: (-inf, lo) <-> (1/lo, 0), (hi, inf) <-> (0, 1/hi)
    auto gs = [&](double s) { return tail_deriv(f, s); };
    std::vector<double> tail_roots;
    scan(gs, uniform_open_grid(1.0 / lo, 0.0), tail_roots);
    scan(gs, uniform_open_grid(1.0 / hi, 0.0), tail_roots);
    for (double s : tail_roots)
        if (s != 0.0) roots.push_back(1.0 / s);

    std::sort(roots.begin(), roots.end());
    std::vector<CriticalPoint> out;
    for (double x : roots) {
        if (!out.empty() && std::abs(x - out.back().x) <= 1e-9 * (1.0 + std::abs(x))) continue;
        out.push_back({x, f.value(x), curvature_sign(f, x)});
    }
    return out;
}

std::vector<CriticalPoint> enumerate_critical_points(const ReciprocalSum& f) {
    return enumerate_critical_points(f, default_scan_range(f));
}

std::optional<std::pair<double, double>> strip_minimum(const ReciprocalSum& f) {
    const auto strip = central_strip(f);
    if (!strip) return std::nullopt;
    // f' runs from -inf to +inf across the strip; the ends are poles
    double a = strip->first, b = strip->second;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double d = f.deriv(m);
        if (d == 0.0) {
            a = b = m;
            break;
        }
        (d > 0.0 ? b : a) = m;
        if (std::abs(b - a) <= 1e-16 * std::max({1.0, std::abs(a), std::abs(b)})) break;
    }
    const double x = 0.5 * (a + b);
    return std::pair{x, f.value(x)};
}

CriticalReport verify_duality(const ReciprocalSum& f, double rel_tol) {
    CriticalReport r;
    r.strip = central_strip(f);
    if (f.is_constant()) {
        r.critical_points = enumerate_critical_points(f);
        r.duality_holds = true;
        return r;
    }
    r.critical_points = enumerate_critical_points(f);
    if (r.critical_points.empty()) {
        // non-constant without critical points: only consistent when f is monotone
        r.duality_holds = !has_critical_points(f);
        return r;
    }
    r.maximal = *std::max_element(r.critical_points.begin(), r.critical_points.end(),
                                  [](const CriticalPoint& a, const CriticalPoint& b) { return a.value < b.value; });
    if (!r.strip) return r;

    r.strip_min = strip_minimum(f);
    const CriticalPoint* in_strip = nullptr;
    for (const auto& c : r.critical_points) {
        if (c.x > r.strip->first && c.x < r.strip->second) {
            ++r.critical_points_in_strip;
            in_strip = &c;
        }
    }
    const double target = r.strip_min->second;
    const bool values_agree = std::abs(r.maximal->value - target) <= rel_tol * std::abs(target);
    const bool inside = r.maximal->x > r.strip->first && r.maximal->x < r.strip->second;
    const bool unique_min = r.critical_points_in_strip == 1 && in_strip->curvature > 0;
    r.duality_holds = values_agree && inside && unique_min;
    return r;
}

}  // namespace lovasz
