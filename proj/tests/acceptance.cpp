// One line per acceptance criterion: PASS/FAIL, measured detail, runtime
// against its budget. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "generators.hpp"
#include "lovasz/bounds.hpp"
#include "lovasz/reciprocal.hpp"
#include "lovasz/theta.hpp"
#include "oracles.hpp"

using namespace lovasz;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Graph named(const char* name, int n = -1) {
    return n < 0 ? generate_named(name) : generate_named(name, {{"n", n}});
}

std::string num(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Outcome golomb_value() {
    const double w = walkgen_bound(named("golomb"));
    return {std::abs(w - 4.744) <= 0.002, "walkgen=" + num(w)};
}

Outcome p17_value() {
    const Graph p17 = named("path", 17);
    const double w = walkgen_bound(p17);
    const auto r = verify_duality(ReciprocalSum::from_walkgen(build(adjacency(p17))));
    const bool crit = r.maximal && std::abs(r.maximal->value - 9.0) <= 1e-6 && r.strip &&
                      r.maximal->x > r.strip->first && r.maximal->x < r.strip->second;
    return {std::abs(w - 9.0) <= 1e-6 && crit,
            "walkgen=" + num(w, 15) + " maximal_critical=" + (r.maximal ? num(r.maximal->value, 15) : "none") +
                " at x=" + (r.maximal ? num(r.maximal->x) : "none")};
}

Outcome regular_collapse() {
    std::vector<Graph> gs{named("cycle", 5), named("cycle", 7), named("petersen")};
    for (int n = 2; n <= 8; ++n) gs.push_back(named("complete", n));
    double worst = 0.0;
    for (const auto& g : gs) {
        const auto ev = oracle::eigenvalues(oracle::dense_adjacency(g));
        const double l1 = ev(ev.size() - 1), ln = ev(0);
        const double hoffman = -g.order() * ln / (l1 - ln);
        worst = std::max(worst, std::abs(walkgen_bound(g) - hoffman));
    }
    return {worst <= 1e-9, std::to_string(gs.size()) + " graphs, max |diff|=" + num(worst, 3)};
}

Outcome dominance() {
    const auto corpus = gen::corpus(500, 2024);
    int isolated = 0, fails = 0;
    double worst = -1e300;
    for (const auto& [label, g] : corpus) {
        isolated += min_degree(g) == 0 && g.order() > 0;
        const double gap = walkgen_bound(g) - laplacian_bound(g);
        worst = std::max(worst, gap);
        fails += gap > 1e-8;
    }
    return {fails == 0 && corpus.size() >= 500,
            std::to_string(corpus.size()) + " graphs (" + std::to_string(isolated) +
                " with isolated vertices), max walkgen-laplacian=" + num(worst, 3)};
}

Outcome duality() {
    gen::Source src(7);
    int ok = 0, iff_ok = 0, with = 0;
    for (int k = 0; k < 500; ++k) {
        const int n = src.integer(2, 6);
        const ReciprocalSum f(src.alphas(n), src.betas(n, true));
        const auto r = verify_duality(f, 1e-8);
        ok += r.duality_holds && r.critical_points_in_strip == 1;
    }
    for (int k = 0; k < 500; ++k) {
        const int n = src.integer(2, 6);
        const ReciprocalSum f(src.alphas(n), src.betas(n, k % 2 == 0));
        const bool predicted = has_critical_points(f);
        with += predicted;
        iff_ok += predicted == !enumerate_critical_points(f).empty();
    }
    return {ok == 500 && iff_ok == 500 && with > 0 && with < 500,
            "duality " + std::to_string(ok) + "/500, existence iff " + std::to_string(iff_ok) + "/500 (" +
                std::to_string(with) + " with critical points)"};
}

Outcome scaling() {
    gen::Source src(6);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const DenseSymMatrix a(src.weighted(src.graph_with_edge(3, 10)));
        worst = std::max(worst, std::abs(optimal_scaling(a).value - minimize_on_spectral_interval(a).value));
    }
    return {worst <= 1e-6, "100 weighted matrices, max |diff|=" + num(worst, 3)};
}

Outcome optimizer() {
    std::vector<Eigen::MatrixXd> cases;
    for (const auto& [label, g] : gen::corpus(500, 2024)) cases.push_back(oracle::dense_adjacency(g));
    gen::Source src(77);
    for (int k = 0; k < 100; ++k) cases.push_back(src.weighted(src.graph_with_edge(2, 10)));
    double orth = 0.0, sphere = 0.0, gap = 0.0;
    for (const auto& a : cases) {
        const DenseSymMatrix m(a);
        const auto ov = extract_optimizer(m);
        const double target =
            m.frobenius_norm() == 0.0 ? static_cast<double>(a.rows()) : minimize_on_spectral_interval(m).value;
        const double scale = std::max(1.0, ov.norm_sq);
        orth = std::max(orth, std::abs(ov.v.dot(a * ov.v)) / (scale * std::max(1.0, a.norm())));
        sphere = std::max(sphere, std::abs(ov.v.squaredNorm() - ov.v.sum()) / scale);
        gap = std::max(gap, std::abs(ov.norm_sq - target));
    }
    return {orth <= 1e-7 && sphere <= 1e-7 && gap <= 1e-6,
            std::to_string(cases.size()) + " matrices, max orth=" + num(orth, 3) + " sphere=" + num(sphere, 3) +
                " |norm_sq-min|=" + num(gap, 3)};
}

Outcome theta_sandwich() {
    struct Case {
        std::string label;
        Graph g;
        double theta;
        bool closed;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 8; ++n) {
        const Graph k = named("complete", n);
        cases.push_back({"K" + std::to_string(n), k, 1.0, oracle::brute_alpha(k) == 1 && walkgen_bound(k) <= 1 + 1e-9});
    }
    const Graph c5 = named("cycle", 5);
    // theta(C5)^2 = theta(C5 x C5) >= alpha(C5 x C5) = 5, and walkgen(C5) = sqrt 5
    cases.push_back({"C5", c5, std::sqrt(5.0),
                     oracle::brute_alpha(strong_product(c5, c5)) == 5 &&
                         std::abs(walkgen_bound(c5) - std::sqrt(5.0)) <= 1e-9});
    const Graph pet = named("petersen");
    cases.push_back({"Petersen", pet, 4.0, oracle::brute_alpha(pet) == 4 && std::abs(walkgen_bound(pet) - 4) <= 1e-9});
    const Graph p17 = named("path", 17);
    cases.push_back({"P17", p17, 9.0, oracle::brute_alpha(p17) == 9 && std::abs(walkgen_bound(p17) - 9) <= 1e-6});

    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        const double upper = minimize_theta(c.g).upper;
        const bool ok = c.closed && std::abs(upper - c.theta) <= 1e-3;
        pass = pass && ok;
        if (c.label == "K8" || c.label[0] != 'K') detail += c.label + "=" + num(upper, 8) + (ok ? " " : "(!) ");
    }
    return {pass, detail + "(K1..K8 all checked)"};
}

Outcome submultiplicativity() {
    const std::vector<std::pair<Graph, Graph>> pairs{
        {named("cycle", 5), named("cycle", 5)},    {named("complete", 2), named("complete", 2)},
        {named("empty", 2), named("empty", 3)},    {named("cycle", 5), named("path", 4)},
        {named("petersen"), named("complete", 2)}, {named("cycle", 5), named("complete", 3)},
        {named("path", 4), named("path", 4)},      {named("cycle", 7), named("complete", 2)},
        {named("complete", 3), named("empty", 2)}, {named("golomb"), named("complete", 2)},
    };
    bool pass = true;
    double worst_fact = 0.0;
    int checks = 0;
    for (const auto& [g, h] : pairs) {
        const auto r = submultiplicativity_check(g, h, 1, 50);
        pass = pass && r.lhs <= r.rhs + 1e-6 && r.factorization_checks == 50 && r.factorization_max_rel_error <= 1e-8;
        worst_fact = std::max(worst_fact, r.factorization_max_rel_error);
        checks += r.factorization_checks;
    }
    const Graph c5 = named("cycle", 5);
    const double est = submultiplicativity_check(c5, c5).lhs;
    const int alpha = oracle::brute_alpha(strong_product(c5, c5));
    pass = pass && std::abs(est - 5.0) <= 1e-2 && alpha == 5;
    return {pass, std::to_string(checks) + " factorization checks, max rel err=" + num(worst_fact, 3) +
                      "; theta-estimate(C5xC5)=" + num(est, 12) + " alpha=" + std::to_string(alpha)};
}

Outcome isolated_vertex() {
    const auto corpus = gen::corpus(50, 99);
    double worst = 0.0;
    for (std::size_t i = 0; i < 50; ++i) {
        const Graph& g = corpus[i].graph;
        worst = std::max(worst, std::abs(walkgen_bound(g.with_isolated_vertex()) - walkgen_bound(g) - 1.0));
    }
    return {worst <= 1e-8, "50 graphs, max |diff-1|=" + num(worst, 3)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Golomb walk-generating bound 4.744 +- 0.002", 1, golomb_value},
        {2, "P17 bound 9 and maximal critical value 9 in the strip", 1, p17_value},
        {3, "regular graphs collapse to the Hoffman ratio", 1, regular_collapse},
        {4, "walk-generating bound dominates the Laplacian bound", 30, dominance},
        {5, "maximal critical point equals the strip minimum", 10, duality},
        {6, "scaling duality min_t = min_x", 60, scaling},
        {7, "optimizer vector certificate", 30, optimizer},
        {8, "theta estimates on sandwich-closed graphs", 120, theta_sandwich},
        {9, "sub-multiplicativity under the strong product", 120, submultiplicativity},
        {10, "isolated vertex adds exactly one", 5, isolated_vertex},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("%s  criterion %2d  %s: %s [%.3fs / %.0fs budget%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
