#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hampow {

/// Labeled simple graph on vertices 0..n-1 (1-based in all I/O), adjacency
/// stored as bit rows. Immutable in practice: operations build new graphs.
class Graph {
public:
    explicit Graph(int n);

    static Graph complete(int n);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + std::size_t(v) * words_, std::size_t(words_)};
    }
    int words_per_row() const { return words_; }

    /// Edges as 0-based (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const {
        return edges_ == static_cast<long long>(n_) * (n_ - 1) / 2;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    /// Number of edges with both endpoints in `mask` (words_per_row words).
    long long edges_within(std::span<const std::uint64_t> mask) const;

private:
    int n_;
    int words_;
    long long edges_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int v) const;
};

/// Induced subgraph together with the original (0-based) labels of its
/// vertices; labels[i] is the source vertex of the new vertex i.
struct InducedGraph {
    Graph graph;
    std::vector<int> labels;
};

/// H[S]-style induced subgraph; `vertices` need not be sorted, duplicates
/// rejected. Labels come out sorted ascending.
InducedGraph induced(const Graph& g, std::span<const int> vertices);

/// Disjoint union; vertices of `b` are shifted by a.order(). The offset map
/// keeps both operands auditable against their original labels.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components and the derived rank/core quantities.
struct Decomposition {
    std::vector<std::vector<int>> components;  ///< sorted lists, by min vertex
    std::vector<int> core_vertices;            ///< union of components of size > 2
    long long rank = 0;                        ///< |V| - c(F)
    long long core_rank = 0;                   ///< r(F°)
    int core_components = 0;                   ///< c(F°)
    long long core_edges = 0;                  ///< e(F°)
    bool is_good = false;  ///< no component of size exactly 2 (vertex set spans by construction)
};

Decomposition decompose(const Graph& g);

}  // namespace hampow
