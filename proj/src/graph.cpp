#include "occult/graph.hpp"

#include <algorithm>
#include <queue>

namespace occult {

Graph Graph::with_vertex_count(int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g = with_vertex_count(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_vertex(VertexId v) {
    adj_.emplace(v, std::vector<VertexId>{});
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw PreconditionError("no-loops", "loop at vertex " + std::to_string(u));
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw PreconditionError("unknown-vertex",
                                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") references a vertex not in the graph");
    auto& nu = iu->second;
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v)
        throw PreconditionError("no-parallel-edges",
                                "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    nu.insert(pos, v);
    auto& nv = iv->second;
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw PreconditionError("unknown-vertex", "vertex " + std::to_string(v));
    return it->second;
}

int Graph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adj_)
        for (VertexId v : nbrs)
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::has_contiguous_ids() const {
    int expected = 0;
    for (const auto& [v, _] : adj_)
        if (v != expected++) return false;
    return true;
}

// --- Path / cycle witnesses -------------------------------------------------

std::vector<VertexId> PathWitness::ends() const {
    if (verts.empty()) return {};
    if (verts.size() == 1) return {verts.front()};
    return {verts.front(), verts.back()};
}

std::vector<VertexId> PathWitness::interior() const {
    if (verts.size() <= 2) return {};
    return std::vector<VertexId>(verts.begin() + 1, verts.end() - 1);
}

bool PathWitness::contains(VertexId v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool CycleWitness::contains(VertexId v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

CycleWitness CycleWitness::canonical(std::vector<VertexId> cyclic) {
    if (cyclic.size() < 3) throw PreconditionError("cycle-size", "cycles need >= 3 vertices");
    auto min_it = std::min_element(cyclic.begin(), cyclic.end());
    std::rotate(cyclic.begin(), min_it, cyclic.end());
    if (cyclic.size() >= 3 && cyclic[1] > cyclic.back())
        std::reverse(cyclic.begin() + 1, cyclic.end());
    return CycleWitness{std::move(cyclic)};
}

CheckResult check_path(const Graph& g, const PathWitness& p) {
    const auto& vs = p.verts;
    for (VertexId v : vs)
        if (!g.has_vertex(v)) return Violation{"unknown-vertex", std::to_string(v)};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return Violation{"distinct-vertices", std::to_string(vs[i])};
            bool adjacent = g.has_edge(vs[i], vs[j]);
            bool consecutive = (j == i + 1);
            if (consecutive && !adjacent)
                return Violation{"consecutive-adjacent",
                                 std::to_string(vs[i]) + "," + std::to_string(vs[j])};
            if (!consecutive && adjacent)
                return Violation{"induced",
                                 "chord " + std::to_string(vs[i]) + "," + std::to_string(vs[j])};
        }
    return std::nullopt;
}

CheckResult check_cycle(const Graph& g, const CycleWitness& c) {
    const auto& vs = c.verts;
    if (vs.size() < 3) return Violation{"cycle-size", "needs >= 3 vertices"};
    for (VertexId v : vs)
        if (!g.has_vertex(v)) return Violation{"unknown-vertex", std::to_string(v)};
    const std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (vs[i] == vs[j]) return Violation{"distinct-vertices", std::to_string(vs[i])};
            bool adjacent = g.has_edge(vs[i], vs[j]);
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (consecutive && !adjacent)
                return Violation{"consecutive-adjacent",
                                 std::to_string(vs[i]) + "," + std::to_string(vs[j])};
            if (!consecutive && adjacent)
                return Violation{"induced",
                                 "chord " + std::to_string(vs[i]) + "," + std::to_string(vs[j])};
        }
    return std::nullopt;
}

// --- Core operations ---------------------------------------------------------

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& x) {
    Graph out;
    std::set<VertexId> keep;
    for (VertexId v : x) {
        if (!g.has_vertex(v))
            throw PreconditionError("unknown-vertex", "vertex " + std::to_string(v));
        keep.insert(v);
        out.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : g.neighbors(v))
            if (v < w && keep.count(w)) out.add_edge(v, w);
    return out;
}

bool is_anticomplete(const Graph& g, const std::vector<VertexId>& x,
                     const std::vector<VertexId>& y) {
    std::set<VertexId> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    for (VertexId v : xs)
        if (ys.count(v))
            throw PreconditionError("disjointness",
                                    "sets share vertex " + std::to_string(v));
    for (VertexId v : xs) {
        if (!g.has_vertex(v)) throw PreconditionError("unknown-vertex", std::to_string(v));
        for (VertexId w : g.neighbors(v))
            if (ys.count(w)) return false;
    }
    for (VertexId v : ys)
        if (!g.has_vertex(v)) throw PreconditionError("unknown-vertex", std::to_string(v));
    return true;
}

LineGraphResult line_graph(const Graph& g) {
    LineGraphResult res;
    res.edge_of_vertex = g.edge_list();
    const int m = static_cast<int>(res.edge_of_vertex.size());
    res.graph = Graph::with_vertex_count(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& [a, b] = res.edge_of_vertex[i];
            const auto& [c, d] = res.edge_of_vertex[j];
            if (a == c || a == d || b == c || b == d) res.graph.add_edge(i, j);
        }
    return res;
}

SubdivisionResult subdivide(const Graph& g, const std::map<Edge, int>& lengths) {
    SubdivisionResult res;
    VertexId next = 0;
    for (VertexId v : g.vertices()) {
        res.vertex_map[v] = next;
        res.graph.add_vertex(next);
        ++next;
    }
    for (const Edge& e : g.edge_list()) {
        auto it = lengths.find(e);
        if (it == lengths.end())
            throw PreconditionError("missing-length",
                                    "edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") has no assigned length");
        int len = it->second;
        if (len < 1)
            throw PreconditionError("positive-length",
                                    "edge length must be >= 1, got " + std::to_string(len));
        VertexId prev = res.vertex_map[e.first];
        for (int i = 1; i < len; ++i) {
            res.graph.add_vertex(next);
            res.graph.add_edge(prev, next);
            prev = next++;
        }
        res.graph.add_edge(prev, res.vertex_map[e.second]);
    }
    return res;
}

SubdivisionResult subdivide_uniform(const Graph& g, int k) {
    std::map<Edge, int> lengths;
    for (const Edge& e : g.edge_list()) lengths[e] = k;
    return subdivide(g, lengths);
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through edge uv = 1 + dist(u, v) in G - uv.
    std::optional<int> best;
    for (const Edge& e : g.edge_list()) {
        std::map<VertexId, int> dist;
        std::queue<VertexId> q;
        dist[e.first] = 0;
        q.push(e.first);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            if (v == e.second) break;
            for (VertexId w : g.neighbors(v)) {
                if (v == e.first && w == e.second) continue;
                if (v == e.second && w == e.first) continue;
                if (!dist.count(w)) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        auto it = dist.find(e.second);
        if (it != dist.end()) {
            int len = it->second + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

namespace {

// DFS for induced cycles with lengths in [min_len, max_len]. The path starts
// at its smallest vertex; each extension must avoid adjacency to everything
// but the previous vertex; a closing vertex is adjacent to exactly the last
// and the first. Reflections are cut by requiring path[1] < closing vertex.
struct CycleDfs {
    const Graph& g;
    int min_len;
    int max_len;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool exhausted = false;
    std::vector<VertexId> path;
    std::vector<CycleWitness>& out;

    bool step() {
        if (++steps > budget) {
            exhausted = true;
            return false;
        }
        return true;
    }

    void run(VertexId start) {
        path = {start};
        extend();
    }

    void extend() {
        if (exhausted) return;
        VertexId start = path.front();
        VertexId last = path.back();
        const int k = static_cast<int>(path.size());
        for (VertexId w : g.neighbors(last)) {
            if (exhausted) return;
            if (w <= start) continue;
            if (!step()) return;
            bool adj_mid = false;
            for (int i = 1; i + 1 < k && !adj_mid; ++i)
                if (g.has_edge(w, path[i])) adj_mid = true;
            if (adj_mid) continue;
            bool adj_start = k >= 2 && g.has_edge(w, start);
            if (adj_start && k + 1 >= min_len && k + 1 <= max_len && path[1] < w) {
                std::vector<VertexId> cyc = path;
                cyc.push_back(w);
                out.push_back(CycleWitness{std::move(cyc)});
                if (out.size() > budget) {
                    exhausted = true;
                    return;
                }
            }
            if (!adj_start && k + 1 < max_len) {
                path.push_back(w);
                extend();
                path.pop_back();
            }
        }
    }
};

}  // namespace

InducedCycles enumerate_induced_cycles(const Graph& g, int min_length, std::uint64_t budget) {
    if (min_length < 3)
        throw PreconditionError("min-length", "min_length must be >= 3");
    if (budget < 1) throw PreconditionError("budget", "budget must be >= 1");
    InducedCycles res;
    const int n = static_cast<int>(g.vertex_count());
    // Short cycles first, one length per pass, so that a budget cut still
    // leaves a useful pool; then a single combined pass for the long tail.
    const int short_cap = std::min(n, std::max(min_length + 1, 12));
    auto run_pass = [&](int lo, int hi) {
        std::size_t tail_start = res.cycles.size();
        for (VertexId v : g.vertices()) {
            CycleDfs dfs{g, lo, hi, budget, res.steps_used, false, {}, res.cycles};
            dfs.run(v);
            res.steps_used = dfs.steps;
            if (dfs.exhausted) {
                res.complete = false;
                break;
            }
        }
        std::sort(res.cycles.begin() + static_cast<std::ptrdiff_t>(tail_start),
                  res.cycles.end(), [](const CycleWitness& a, const CycleWitness& b) {
                      if (a.verts.size() != b.verts.size())
                          return a.verts.size() < b.verts.size();
                      return a.verts < b.verts;
                  });
        return res.complete;
    };
    for (int len = min_length; len <= short_cap && res.complete; ++len)
        if (!run_pass(len, len)) return res;
    if (short_cap < n) run_pass(short_cap + 1, n);
    return res;
}

bool is_stable_set(const Graph& g, const std::vector<VertexId>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (g.has_edge(xs[i], xs[j])) return false;
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::set<VertexId> seen;
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::map<VertexId, int> bfs_distances(const Graph& g, VertexId src) {
    std::map<VertexId, int> dist;
    for (VertexId v : g.vertices()) dist[v] = -1;
    std::queue<VertexId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace occult
