#include "lovasz/graph.hpp"

#include <array>
#include <bit>

namespace lovasz {

namespace {

int require(const std::map<std::string, int>& params, const std::string& key, std::string_view family) {
    const auto it = params.find(key);
    if (it == params.end())
        throw DomainError(std::string(family) + ": missing parameter '" + key + "'");
    return it->second;
}

// Node labels 1..10 of the Golomb drawing map to 0..9.
constexpr std::array<Edge, 18> kGolombEdges{{
    {1, 9}, {1, 10}, {9, 10},                  // outer triangle
    {1, 2}, {9, 7}, {10, 8},                   // spokes into the gadget
    {5, 2}, {5, 3}, {5, 4}, {5, 6}, {5, 7}, {5, 8},  // hub
    {2, 3}, {2, 4}, {3, 7}, {4, 8}, {6, 7}, {6, 8},  // inner hexagon
}};

Graph golomb() {
    std::vector<Edge> edges;
    for (const auto& [a, b] : kGolombEdges) edges.emplace_back(a - 1, b - 1);
    return Graph(10, std::move(edges));
}

Graph kneser(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw DomainError("kneser: need 1 <= k <= n");
    if (n > 20) throw DomainError("kneser: n > 20 not supported");
    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
        if (std::popcount(s) == k) sets.push_back(s);
    if (sets.size() > 2000) throw DomainError("kneser: more than 2000 vertices");
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if ((sets[a] & sets[b]) == 0) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(sets.size()), std::move(edges));
}

}  // namespace

Graph generate_named(std::string_view name, const std::map<std::string, int>& params) {
    if (name == "golomb") return golomb();
    if (name == "petersen") return kneser(5, 2);
    if (name == "kneser") return kneser(require(params, "n", name), require(params, "k", name));

    const int n = require(params, "n", name);
    if (n < 0) throw DomainError(std::string(name) + ": n must be non-negative");
    std::vector<Edge> edges;
    if (name == "empty") {
        return Graph::empty(n);
    } else if (name == "complete") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else if (name == "cycle") {
        if (n < 3) throw DomainError("cycle: n must be at least 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    } else if (name == "path") {
        if (n < 1) throw DomainError("path: n must be at least 1");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else {
        throw DomainError("unknown graph family '" + std::string(name) + "'");
    }
    return Graph(n, std::move(edges));
}

}  // namespace lovasz
