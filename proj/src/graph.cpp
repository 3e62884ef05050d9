#include "lovasz/graph.hpp"

#include <algorithm>
#include <bit>

namespace lovasz {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw DomainError("Graph: negative vertex count");
    for (auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw DomainError("Graph: edge {" + std::to_string(i) + "," + std::to_string(j) +
                              "} has an endpoint outside [0," + std::to_string(n) + ")");
        if (i == j) throw DomainError("Graph: self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [i, j] : edges_) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

bool Graph::is_regular() const {
    const auto deg = degrees();
    return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

Graph Graph::with_isolated_vertex() const { return Graph(n_ + 1, edges_); }

DenseSymMatrix adjacency(const Graph& g) {
    MatrixX<double> a = MatrixX<double>::Zero(g.order(), g.order());
    for (const auto& [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
    return DenseSymMatrix(std::move(a));
}

DenseSymMatrix laplacian(const Graph& g) {
    MatrixX<double> l = MatrixX<double>::Zero(g.order(), g.order());
    for (const auto& [i, j] : g.edges()) {
        l(i, j) = l(j, i) = -1.0;
        l(i, i) += 1.0;
        l(j, j) += 1.0;
    }
    return DenseSymMatrix(std::move(l));
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    const auto deg = g.degrees();
    return *std::min_element(deg.begin(), deg.end());
}

Graph strong_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    auto idx = [nh](int i, int j) { return i * nh + j; };
    // g-edge with equal or adjacent h-coordinates
    for (const auto& [i, ip] : g.edges()) {
        for (int j = 0; j < nh; ++j) edges.emplace_back(idx(i, j), idx(ip, j));
        for (const auto& [j, jp] : h.edges()) {
            edges.emplace_back(idx(i, j), idx(ip, jp));
            edges.emplace_back(idx(i, jp), idx(ip, j));
        }
    }
    // equal g-coordinate, adjacent h-coordinates
    for (int i = 0; i < ng; ++i)
        for (const auto& [j, jp] : h.edges()) edges.emplace_back(idx(i, j), idx(i, jp));
    return Graph(ng * nh, std::move(edges));
}

namespace {

// Maximum independent set size within `candidates`: branch on the lowest
// candidate vertex, prune with the popcount bound.
int max_independent(const std::vector<std::uint64_t>& nbrs, std::uint64_t candidates, int current,
                    int& best) {
    if (candidates == 0) {
        best = std::max(best, current);
        return best;
    }
    if (current + std::popcount(candidates) <= best) return best;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    // include v
    max_independent(nbrs, candidates & ~bit & ~nbrs[v], current + 1, best);
    // exclude v; only useful if v has a neighbour among the candidates
    if (nbrs[v] & candidates) max_independent(nbrs, candidates & ~bit, current, best);
    return best;
}

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw DomainError("independence_number: n > 64 not supported");
    std::vector<std::uint64_t> nbrs(n, 0);
    for (const auto& [i, j] : g.edges()) {
        nbrs[i] |= std::uint64_t{1} << j;
        nbrs[j] |= std::uint64_t{1} << i;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = 0;
    return max_independent(nbrs, all, 0, best);
}

}  // namespace lovasz
