#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lovasz/errors.hpp"

namespace lovasz {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense real symmetric matrix. Symmetry is checked exactly on construction,
/// so every value of this type satisfies m(i,j) == m(j,i) bit for bit.
template <typename Scalar>
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(MatrixX<Scalar> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw DomainError("SymMatrix: matrix is not square");
        for (Eigen::Index j = 0; j < m_.cols(); ++j)
            for (Eigen::Index i = j + 1; i < m_.rows(); ++i)
                if (m_(i, j) != m_(j, i))
                    throw DomainError("SymMatrix: entries (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") and transpose differ");
    }

    /// Copies the lower triangle onto the upper one.
    static SymMatrix from_lower(MatrixX<Scalar> m) {
        m.template triangularView<Eigen::StrictlyUpper>() = m.transpose();
        return SymMatrix(std::move(m));
    }

    static SymMatrix zero(Eigen::Index n) { return SymMatrix(MatrixX<Scalar>::Zero(n, n)); }

    Eigen::Index dim() const { return m_.rows(); }
    const MatrixX<Scalar>& matrix() const { return m_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    Scalar frobenius_norm() const { return m_.norm(); }

private:
    MatrixX<Scalar> m_;
};

using DenseSymMatrix = SymMatrix<double>;

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored once as
/// (i, j) with i < j, sorted lexicographically; this order is also the
/// order of per-edge weight vectors everywhere in the library.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on self-loops or out-of-range endpoints.
    /// Duplicate edges (in either orientation) are collapsed.
    Graph(int n, std::vector<Edge> edges);

    static Graph empty(int n) { return Graph(n, {}); }

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    std::vector<int> degrees() const;
    bool is_regular() const;

    /// Same graph plus one isolated vertex labeled n.
    Graph with_isolated_vertex() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

Graph parse_graph6(std::string_view text);
Graph parse_edge_list(std::string_view text);

/// Named families: empty, complete, cycle, path, petersen, golomb, kneser.
/// Integer parameters are looked up by key: "n" for the sized families,
/// "n" and "k" for kneser. Throws DomainError on an unknown name or bad
/// parameters.
Graph generate_named(std::string_view name, const std::map<std::string, int>& params = {});

DenseSymMatrix adjacency(const Graph& g);
DenseSymMatrix laplacian(const Graph& g);
int min_degree(const Graph& g);

/// Vertex (i, j) of the product is i * order(h) + j.
Graph strong_product(const Graph& g, const Graph& h);

/// Exact independence number by branch and bound over bitmasks; n <= 64.
int independence_number(const Graph& g);

}  // namespace lovasz
