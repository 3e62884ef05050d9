#include "lovasz/bounds.hpp"

#include <cmath>

#include "lovasz/spectral.hpp"
#include "lovasz/walkgen.hpp"

namespace lovasz {

namespace {

constexpr double kConditionTol = 1e-9;

}  // namespace

std::optional<double> hoffman_regular(const Graph& g) {
    if (g.size() == 0 || !g.is_regular()) return std::nullopt;
    const auto s = eig_sym(adjacency(g));
    const double l1 = s.lambda_max(), ln = s.lambda_min();
    return -ln * g.order() / (l1 - ln);
}

double walkgen_bound(const Graph& g) {
    if (g.size() == 0) return g.order();
    const auto a = adjacency(g);
    const auto s = eig_sym(a);
    return minimize_on_subinterval(a, 1.0 / s.lambda_min(), 0.0).value;
}

ClosedFormBound closed_form_bound(const Graph& g) {
    if (g.size() == 0) throw DomainError("closed_form_bound: graph has no edges");
    const auto s = eig_sym(adjacency(g));
    const double n = g.order();
    const double l1 = s.lambda_max(), ln = s.lambda_min();
    const auto spaces = eigenspaces(s);
    const double w1 = spaces.back().weight;
    // n - w1 without cancellation; negligible weights count as zero
    double rest = 0.0;
    for (std::size_t i = 0; i + 1 < spaces.size(); ++i)
        if (spaces[i].weight > s.tol.weight) rest += spaces[i].weight;

    ClosedFormBound out;
    out.top_weight = w1;
    out.condition = -ln * rest / (l1 * w1);
    out.condition_satisfied = out.condition <= 1.0 + kConditionTol;
    if (!out.condition_satisfied) return out;

    // r = sqrt(condition) = (1 - ln x) / (1 - l1 x) at the stationary point
    const double r = std::sqrt(std::max(0.0, out.condition));
    out.x = -(1.0 - r) / (-ln + l1 * r);
    const double ratio = std::sqrt(l1 * rest / (-ln * w1));
    out.value = (-n * ln / (l1 - ln)) * (w1 / n) * (1.0 + ratio) * (1.0 + ratio);
    return out;
}

double laplacian_bound(const Graph& g) {
    if (g.size() == 0) return g.order();
    const double mu1 = eig_sym(laplacian(g)).lambda_max();
    return g.order() * (1.0 - min_degree(g) / mu1);
}

BoundReport report(const Graph& g, std::optional<int> known_alpha) {
    BoundReport r;
    r.n = g.order();
    r.hoffman_regular = hoffman_regular(g);
    r.walkgen_bound = walkgen_bound(g);
    if (g.size() > 0) r.closed_form = closed_form_bound(g);
    r.laplacian_bound = laplacian_bound(g);
    r.dominance_ok = r.walkgen_bound <= r.laplacian_bound + kDominanceTol;
    r.independence_witness = known_alpha;
    if (known_alpha) {
        const double floor = *known_alpha - kWitnessTol;
        r.witness_ok = r.walkgen_bound >= floor && r.laplacian_bound >= floor;
        if (r.hoffman_regular) r.witness_ok = r.witness_ok && *r.hoffman_regular >= floor;
        if (r.closed_form && r.closed_form->value) r.witness_ok = r.witness_ok && *r.closed_form->value >= floor;
    }
    return r;
}

}  // namespace lovasz
