#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cbramsey/vertex_set.hpp"

namespace cbramsey {

using Edge = std::pair<int, int>;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is one VertexSet row per vertex, so neighbourhood unions and
/// intersections run word-parallel. Rows are symmetric and irreflexive.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph.
    explicit Graph(int order);

    /// Throws Error(InvalidVertex) on out-of-range endpoints or self-loops.
    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const { return static_cast<int>(rows_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }
    int min_degree() const;
    int max_degree() const;

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;
    /// Subgraph induced by `vs`; vertex i of the result is vs[i].
    Graph induced(std::span<const int> vs) const;
    /// Relabelled copy: vertex v becomes perm[v].
    Graph relabeled(std::span<const int> perm) const;

    /// Scans every row; true iff adjacency is symmetric and irreflexive.
    bool well_formed() const;

    bool operator==(const Graph& o) const { return rows_ == o.rows_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// Mutable staging area; `build()` freezes it into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int order);

    int order() const { return static_cast<int>(rows_.size()); }
    /// Idempotent. Throws Error(InvalidVertex) for bad endpoints or u == v.
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& add_clique(std::span<const int> vs);
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }

    Graph build() &&;
    Graph build() const&;

private:
    std::vector<VertexSet> rows_;
};

struct BlockDecomposition {
    /// Each block sorted ascending; blocks ordered by their sorted vertex lists.
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
};

/// Biconnected structure of the component of `root` inside G[mask].
///
/// `parent` is the DFS tree parent (-1 for the root and for vertices outside
/// the component); `edge_block[v]` is the block holding tree edge
/// (parent[v], v). Blocks of a single isolated root are not reported.
struct RootedBlocks {
    std::vector<int> parent;
    std::vector<int> edge_block;
    std::vector<std::vector<int>> blocks;
    VertexSet reached;
};

RootedBlocks rooted_blocks(const Graph& g, const VertexSet& mask, int root);

// Builders.
Graph clique(int size);
Graph edgeless(int size);
Graph cycle_graph(int size);
Graph path_graph(int size);
Graph complete_bipartite(int a, int b);
Graph petersen();

/// Parts laid out consecutively; part i is offset by the orders of parts before it.
Graph disjoint_union(std::span<const Graph> parts);

/// Quotient by the transitive closure of `pairs`. Each class becomes one
/// vertex; classes are numbered by their smallest member.
Graph identify(const Graph& g, std::span<const Edge> pairs);

/// Vertices outside s that are adjacent to no member of s.
std::vector<int> complement_common_neighbors(const Graph& g, std::span<const int> s);

/// Visits every independent set of exactly `size` vertices in lexicographic
/// order. `visit` returns false to stop early. Returns the number visited.
std::size_t for_each_independent_set(const Graph& g, int size,
                                     const std::function<bool(std::span<const int>)>& visit);
std::vector<std::vector<int>> independent_sets(const Graph& g, int size);

std::vector<std::vector<int>> connected_components(const Graph& g);
BlockDecomposition blocks(const Graph& g);

bool is_clique(const Graph& g, std::span<const int> vs);
bool is_block_clique(const Graph& g);

}  // namespace cbramsey
