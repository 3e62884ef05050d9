#include "lovasz/random.hpp"

#include <algorithm>

namespace lovasz {

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph random_corpus_graph(Rng& rng) {
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    std::uniform_int_distribution<int> pad(0, 7);
    Graph g = random_graph(order(rng), density(rng), rng);
    const int extra = pad(rng);
    if (extra >= 6) {
        for (int k = 0; k < extra - 5; ++k) g = g.with_isolated_vertex();
    }
    return g;
}

WeightedAdjacency random_weighted(const Graph& g, Rng& rng) {
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::bernoulli_distribution sign(0.5);
    std::vector<double> w;
    w.reserve(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) w.push_back(sign(rng) ? mag(rng) : -mag(rng));
    return WeightedAdjacency(g, std::move(w));
}

WeightedAdjacency random_weighted_instance(Rng& rng) {
    std::uniform_int_distribution<int> order(3, 10);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    for (;;) {
        Graph g = random_graph(order(rng), density(rng), rng);
        if (g.size() > 0) return random_weighted(g, rng);
    }
}

ReciprocalSum random_reciprocal(Rng& rng, bool mixed) {
    std::uniform_int_distribution<int> count(2, 6);
    std::uniform_real_distribution<double> beta(-5.0, 5.0);
    std::uniform_real_distribution<double> alpha(0.1, 3.0);
    std::bernoulli_distribution coin(0.5);
    const int n = count(rng);
    const double side = coin(rng) ? 1.0 : -1.0;
    for (;;) {
        std::vector<double> betas;
        for (int i = 0; i < n; ++i) {
            double b = beta(rng);
            if (!mixed) b = side * std::abs(b);
            betas.push_back(b);
        }
        if (mixed) {
            betas[0] = std::abs(betas[0]);
            betas[1] = -std::abs(betas[1]);
        }
        std::sort(betas.begin(), betas.end(), std::greater<>());
        bool distinct = true;
        for (std::size_t i = 0; i < betas.size(); ++i) {
            if (std::abs(betas[i]) < 1e-3) distinct = false;
            if (i > 0 && betas[i - 1] - betas[i] < 1e-3) distinct = false;
        }
        if (!distinct) continue;
        std::vector<double> alphas;
        for (int i = 0; i < n; ++i) alphas.push_back(alpha(rng));
        return ReciprocalSum(std::move(alphas), std::move(betas));
    }
}

std::vector<NamedGraph> named_fixtures() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string label, Graph g) { out.push_back({std::move(label), std::move(g)}); };
    auto n_of = [](int n) { return std::map<std::string, int>{{"n", n}}; };

    add("golomb", generate_named("golomb"));
    add("golomb+v", generate_named("golomb").with_isolated_vertex());
    add("petersen", generate_named("petersen"));
    add("kneser(6,2)", generate_named("kneser", {{"n", 6}, {"k", 2}}));
    add("star(4)", parse_graph6("D?{"));
    for (int n = 3; n <= 9; ++n) add("cycle(" + std::to_string(n) + ")", generate_named("cycle", n_of(n)));
    for (int n = 1; n <= 8; ++n) add("complete(" + std::to_string(n) + ")", generate_named("complete", n_of(n)));
    for (int n : {1, 2, 3, 4, 5, 8, 17}) add("path(" + std::to_string(n) + ")", generate_named("path", n_of(n)));
    for (int n = 1; n <= 4; ++n) add("empty(" + std::to_string(n) + ")", generate_named("empty", n_of(n)));
    add("cycle(5)+v", generate_named("cycle", n_of(5)).with_isolated_vertex());
    add("path(4)+v", generate_named("path", n_of(4)).with_isolated_vertex());
    return out;
}

std::vector<NamedGraph> default_corpus(int random_count, std::uint64_t seed) {
    auto out = named_fixtures();
    Rng rng(seed);
    for (int i = 0; i < random_count; ++i) out.push_back({"random#" + std::to_string(i), random_corpus_graph(rng)});
    return out;
}

}  // namespace lovasz
