#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmh {

using VertexId = int;

/// Sorted, duplicate-free list of vertex indices into a host graph.
using VertexSet = std::vector<VertexId>;

/// Undirected edge with endpoints normalized so that a < b.
struct Edge {
    VertexId a = -1;
    VertexId b = -1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple undirected graph. Vertices carry opaque string labels;
/// all algorithms work on dense indices. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);

    int n() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    VertexId index_of(const std::string& label) const;

    bool adjacent(VertexId u, VertexId v) const { return adj_[u][v] != 0; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return nbrs_[v]; }
    int degree(VertexId v) const { return static_cast<int>(nbrs_[v].size()); }

    std::vector<Edge> edges() const;
    bool is_connected() const;
    VertexSet all_vertices() const;

    /// BFS distances from src; -1 for unreachable vertices.
    std::vector<int> bfs_distances(VertexId src) const;

    /// Build directly from an index-based edge list (labels v0, v1, ...).
    static Graph from_index_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<std::string>* labels = nullptr);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<VertexId>> nbrs_;
    int edge_count_ = 0;
};

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

enum class NeighborhoodKind { Link, Star };

/// link(v) = neighbors of v; star(v) = link(v) plus v itself.
VertexSet neighborhood(const Graph& g, VertexId v, NeighborhoodKind kind);

/// All inclusion-maximal complete vertex sets, lexicographically ordered.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct JoinDecomposition {
    std::vector<VertexSet> parts;   // the finest join factors
    bool trivial = false;           // singleton input
};

/// Finest join partition of the subgraph induced on S, or nullopt when the
/// complement of the induced subgraph is connected (|S| >= 2, not a join).
std::optional<JoinDecomposition> join_decomposition(const Graph& g, const VertexSet& S);

/// All inclusion-maximal vertex sets inducing a join of >= 2 nonempty parts.
std::vector<VertexSet> maximal_joins(const Graph& g);

/// Block/cut-vertex decomposition of a connected graph.
BlockDecomposition blocks(const Graph& g);

/// Cartesian product of the factors; vertex labels are tuples "(a,b,...)".
Graph cartesian_product(const std::vector<Graph>& factors);

/// Exact backtracking isomorphism search. Returns a vertex mapping
/// g1 -> g2 or nullopt. Throws when either graph exceeds the size guard.
std::optional<std::vector<VertexId>> are_isomorphic(const Graph& g1, const Graph& g2,
                                                    int size_guard = 12);

// Set helpers shared across modules. All inputs/outputs sorted.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, VertexId v);
bool is_subset(const VertexSet& small, const VertexSet& big);

}  // namespace qmh
