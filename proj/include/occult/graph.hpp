#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "occult/support.hpp"

namespace occult {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized u < v

/// Simple undirected graph over opaque integer vertex ids. No loops, no
/// parallel edges. Vertex ids are stable: induced subgraphs keep the host's
/// ids. Iteration order is ascending id everywhere, so every operation built
/// on top is deterministic.
///
/// Values are treated as immutable once built; the mutators exist for
/// construction only.
class Graph {
public:
    Graph() = default;

    /// Graph with vertices 0..n-1 and no edges.
    static Graph with_vertex_count(int n);

    /// Graph with vertices 0..n-1 and the given edges.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::vector<VertexId> vertices() const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const;

    /// Edges as normalized pairs (u < v), sorted lexicographically.
    std::vector<Edge> edge_list() const;

    /// True when the vertex ids are exactly 0..n-1.
    bool has_contiguous_ids() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::map<VertexId, std::vector<VertexId>> adj_;  // sorted neighbor lists
    std::size_t edge_count_ = 0;
};

/// An induced path p_1..p_k in a host graph: consecutive vertices adjacent,
/// non-consecutive ones non-adjacent.
struct PathWitness {
    std::vector<VertexId> verts;

    std::size_t size() const { return verts.size(); }
    int length() const { return static_cast<int>(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }

    /// The two ends (equal for a single-vertex path).
    std::vector<VertexId> ends() const;
    /// Interior P* = everything but the ends.
    std::vector<VertexId> interior() const;
    bool contains(VertexId v) const;

    bool operator==(const PathWitness&) const = default;
};

/// An induced cycle c_1..c_k, k >= 3: adjacency exactly between cyclically
/// consecutive vertices. Stored in canonical form: smallest vertex first,
/// second vertex smaller than last (fixes rotation and reflection).
struct CycleWitness {
    std::vector<VertexId> verts;

    int length() const { return static_cast<int>(verts.size()); }
    bool contains(VertexId v) const;

    /// Canonicalize an arbitrary cyclic order.
    static CycleWitness canonical(std::vector<VertexId> cyclic);

    bool operator==(const CycleWitness&) const = default;
};

CheckResult check_path(const Graph& g, const PathWitness& p);
CheckResult check_cycle(const Graph& g, const CycleWitness& c);

// ---------------------------------------------------------------------------
// Core operations.

/// Subgraph induced by X; ids are preserved. Throws PreconditionError when X
/// contains an unknown id.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& x);

/// True iff there is no edge with one end in X and one in Y. X and Y must be
/// disjoint subsets of V(G).
bool is_anticomplete(const Graph& g, const std::vector<VertexId>& x,
                     const std::vector<VertexId>& y);

struct LineGraphResult {
    Graph graph;                       // vertices 0..m-1
    std::vector<Edge> edge_of_vertex;  // line-graph vertex -> host edge
};

/// Line graph: one vertex per edge of g, adjacent iff the edges share an end.
LineGraphResult line_graph(const Graph& g);

struct SubdivisionResult {
    Graph graph;
    std::map<VertexId, VertexId> vertex_map;  // original id -> new id
};

/// Replace every edge uv by a fresh path with lengths.at(uv) edges.
/// All lengths must be >= 1; length 1 keeps the edge.
SubdivisionResult subdivide(const Graph& g, const std::map<Edge, int>& lengths);

/// Convenience: subdivide every edge into `k` edges.
SubdivisionResult subdivide_uniform(const Graph& g, int k);

/// Length of a shortest cycle; empty for forests. The shortest cycle is
/// always induced, so this is also the shortest induced cycle length.
std::optional<int> girth(const Graph& g);

struct InducedCycles {
    std::vector<CycleWitness> cycles;  // ordered by (length, lexicographic)
    bool complete = true;              // false: budget exceeded, list partial
    std::uint64_t steps_used = 0;
};

/// All induced cycles of length >= min_length, deterministically ordered by
/// (length, lexicographic canonical form). The budget bounds both search steps
/// and the number of cycles collected; on exhaustion the result is marked
/// incomplete and carries the cycles found so far.
InducedCycles enumerate_induced_cycles(const Graph& g, int min_length,
                                       std::uint64_t budget);

// Small helpers used across modules.
bool is_stable_set(const Graph& g, const std::vector<VertexId>& xs);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// BFS distances from src; unreachable vertices get -1.
std::map<VertexId, int> bfs_distances(const Graph& g, VertexId src);

}  // namespace occult
