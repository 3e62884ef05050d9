#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lovasz/graph.hpp"
#include "lovasz/reciprocal.hpp"
#include "lovasz/theta.hpp"

namespace lovasz {

using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// n uniform in [1, 12], p uniform in [0.15, 0.85], and about one graph in
/// four padded with one or two isolated vertices.
Graph random_corpus_graph(Rng& rng);

/// Edge weights uniform in [-2, -0.1] u [0.1, 2].
WeightedAdjacency random_weighted(const Graph& g, Rng& rng);

/// Random graph on n in [3, 10] vertices with at least one edge, weighted.
WeightedAdjacency random_weighted_instance(Rng& rng);

/// N uniform in [2, 6], distinct betas in [-5, 5], alphas in [0.1, 3].
/// With `mixed` the betas include both signs; otherwise all share one sign.
ReciprocalSum random_reciprocal(Rng& rng, bool mixed);

struct NamedGraph {
    std::string label;
    Graph graph;
};

/// Small named families: Golomb, Petersen, cycles, complete graphs, paths,
/// edgeless graphs, a star and a Kneser graph, some with an isolated vertex.
std::vector<NamedGraph> named_fixtures();

/// named_fixtures() followed by `random_count` random corpus graphs.
std::vector<NamedGraph> default_corpus(int random_count, std::uint64_t seed);

}  // namespace lovasz
