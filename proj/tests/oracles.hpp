// Brute-force oracles, kept deliberately independent of the library's
// algorithms: subsets and exhaustive quantification instead of scans and
// boundary arithmetic. Tests freeze expected values computed here.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "occult/asterism.hpp"
#include "occult/detectors.hpp"
#include "occult/generators.hpp"
#include "occult/graph.hpp"
#include "occult/support.hpp"

namespace oracles {

using namespace occult;

// All induced cycles of length >= min_len by testing every vertex subset:
// the induced subgraph must be connected and 2-regular.
inline std::vector<CycleWitness> subset_induced_cycles(const Graph& g, int min_len) {
    std::vector<VertexId> vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::vector<CycleWitness> out;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        int size = std::popcount(mask);
        if (size < min_len) continue;
        std::vector<VertexId> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) subset.push_back(vs[static_cast<std::size_t>(i)]);
        bool cycle = true;
        for (VertexId v : subset) {
            int deg = 0;
            for (VertexId w : subset)
                if (v != w && g.has_edge(v, w)) ++deg;
            if (deg != 2) {
                cycle = false;
                break;
            }
        }
        if (!cycle) continue;
        // connected 2-regular graph on `size` vertices = one cycle
        std::set<VertexId> seen;
        std::vector<VertexId> stack{subset.front()};
        seen.insert(subset.front());
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : subset)
                if (w != v && g.has_edge(v, w) && seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != subset.size()) continue;
        // walk it into cyclic order
        std::vector<VertexId> cyc{subset.front()};
        std::set<VertexId> used{subset.front()};
        while (cyc.size() < subset.size()) {
            bool advanced = false;
            for (VertexId w : subset)
                if (!used.count(w) && g.has_edge(cyc.back(), w)) {
                    cyc.push_back(w);
                    used.insert(w);
                    advanced = true;
                    break;
                }
            if (!advanced) break;
        }
        if (cyc.size() == subset.size()) out.push_back(CycleWitness::canonical(cyc));
    }
    std::sort(out.begin(), out.end(), [](const CycleWitness& a, const CycleWitness& b) {
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });
    return out;
}

// Girth via the subset oracle (the shortest cycle is induced).
inline std::optional<int> subset_girth(const Graph& g) {
    auto cycles = subset_induced_cycles(g, 3);
    if (cycles.empty()) return std::nullopt;
    return cycles.front().length();
}

// All routes by growing explicit induced paths from each S-vertex.
inline std::vector<std::vector<VertexId>> grow_routes(const Graph& g,
                                                      const OrderedAsterism& a) {
    std::set<VertexId> sset(a.s.begin(), a.s.end());
    std::set<VertexId> lset(a.l.verts.begin(), a.l.verts.end());
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::function<void()> grow = [&] {
        VertexId last = path.back();
        for (VertexId w : g.neighbors(last)) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size() && induced; ++i)
                if (g.has_edge(w, path[i])) induced = false;
            if (!induced) continue;
            if (sset.count(w)) {
                if (path.size() >= 2 && w > path.front()) {
                    std::vector<VertexId> route = path;
                    route.push_back(w);
                    out.push_back(std::move(route));
                }
                continue;
            }
            if (!lset.count(w)) continue;
            path.push_back(w);
            grow();
            path.pop_back();
        }
    };
    for (VertexId x : a.s) {
        path = {x};
        grow();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All pieces by checking every contiguous subpath of L against the clauses.
struct OraclePiece {
    std::vector<VertexId> verts;
    bool internal;
    bool open;
};

inline std::vector<OraclePiece> literal_pieces(const Graph& g, const OrderedAsterism& a) {
    const auto& lv = a.l.verts;
    const int n = static_cast<int>(lv.size());
    std::vector<OraclePiece> out;
    auto has_s_neighbor = [&](VertexId v) {
        for (VertexId x : a.s)
            if (g.has_edge(x, v)) return true;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ok = true;
            for (VertexId end : {lv[static_cast<std::size_t>(i)], lv[static_cast<std::size_t>(j)]}) {
                bool is_l_end = (end == lv.front() || end == lv.back());
                if (!is_l_end && !has_s_neighbor(end)) ok = false;
            }
            for (int k = i + 1; k < j && ok; ++k)
                if (has_s_neighbor(lv[static_cast<std::size_t>(k)])) ok = false;
            if (!ok) continue;
            OraclePiece p;
            p.verts.assign(lv.begin() + i, lv.begin() + j + 1);
            p.internal = (i > 0 && j < n - 1);
            bool common = false;
            for (VertexId x : a.s)
                if (g.has_edge(x, lv[static_cast<std::size_t>(i)]) &&
                    g.has_edge(x, lv[static_cast<std::size_t>(j)]))
                    common = true;
            p.open = !common;
            out.push_back(std::move(p));
        }
    return out;
}

inline bool literal_interrupted(const Graph& g, const OrderedAsterism& a) {
    for (int i = 1; i <= a.order(); ++i) {
        OrderedAsterism pre;
        pre.l = a.l;
        pre.s.assign(a.s.begin(), a.s.begin() + (i - 1));
        for (const auto& p : literal_pieces(g, pre)) {
            if (!p.open) continue;
            bool meets = false;
            for (VertexId w : p.verts)
                if (g.has_edge(a.s[static_cast<std::size_t>(i - 1)], w)) meets = true;
            if (!meets) return false;
        }
    }
    return true;
}

inline bool literal_o_invaded(const Graph& g, const OrderedAsterism& a, int o) {
    for (int i = 1; i <= a.order(); ++i) {
        OrderedAsterism pre;
        pre.l = a.l;
        pre.s.assign(a.s.begin(), a.s.begin() + (i - 1));
        for (const auto& p : literal_pieces(g, pre)) {
            if (p.open || static_cast<int>(p.verts.size()) - 1 < o) continue;
            bool meets = false;
            for (VertexId w : p.verts)
                if (g.has_edge(a.s[static_cast<std::size_t>(i - 1)], w)) meets = true;
            if (!meets) return false;
        }
    }
    return true;
}

// Exhaustive t-subset detectors.
inline bool subset_has_clique(const Graph& g, int t) {
    std::vector<VertexId> vs = g.vertices();
    std::vector<int> idx(static_cast<std::size_t>(t));
    std::function<bool(int, int)> rec = [&](int from, int chosen) {
        if (chosen == t) {
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j)
                    if (!g.has_edge(vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                                    vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]))
                        return false;
            return true;
        }
        for (int i = from; i < static_cast<int>(vs.size()); ++i) {
            idx[static_cast<std::size_t>(chosen)] = i;
            if (rec(i + 1, chosen + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

inline bool subset_has_biclique(const Graph& g, int t) {
    std::vector<VertexId> vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (n > 20) throw std::invalid_argument("subset biclique oracle: graph too large");
    std::vector<std::uint64_t> stable_sets;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        if (std::popcount(mask) != t) continue;
        bool stable = true;
        for (int i = 0; i < n && stable; ++i)
            for (int j = i + 1; j < n && stable; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) &&
                    g.has_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
                    stable = false;
        if (stable) stable_sets.push_back(mask);
    }
    for (std::size_t i = 0; i < stable_sets.size(); ++i)
        for (std::size_t j = i + 1; j < stable_sets.size(); ++j) {
            if (stable_sets[i] & stable_sets[j]) continue;
            bool complete = true;
            for (int u = 0; u < n && complete; ++u)
                for (int v = 0; v < n && complete; ++v)
                    if ((stable_sets[i] >> u & 1) && (stable_sets[j] >> v & 1) &&
                        !g.has_edge(vs[static_cast<std::size_t>(u)], vs[static_cast<std::size_t>(v)]))
                        complete = false;
            if (complete) return true;
        }
    return false;
}

// Exact maximum matching by branching on the lowest-id vertex.
inline int max_matching(const Graph& g) {
    std::vector<VertexId> vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[vs[static_cast<std::size_t>(i)]] = i;
    std::map<std::uint64_t, int> memo;
    std::function<int(std::uint64_t)> rec = [&](std::uint64_t alive) -> int {
        if (!alive) return 0;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(alive);
        int best = rec(alive & ~(1ull << v));
        for (VertexId w : g.neighbors(vs[static_cast<std::size_t>(v)])) {
            int wi = index[w];
            if (alive >> wi & 1)
                best = std::max(best, 1 + rec(alive & ~(1ull << v) & ~(1ull << wi)));
        }
        memo[alive] = best;
        return best;
    };
    return rec(n == 64 ? ~0ull : (1ull << n) - 1);
}

// Interval brute force over subsets.
inline int interval_max_stable(const std::vector<std::pair<int, int>>& spans) {
    const int n = static_cast<int>(spans.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) {
                    bool disjoint = spans[static_cast<std::size_t>(i)].second <
                                        spans[static_cast<std::size_t>(j)].first ||
                                    spans[static_cast<std::size_t>(j)].second <
                                        spans[static_cast<std::size_t>(i)].first;
                    if (!disjoint) ok = false;
                }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline int interval_max_clique(const std::vector<std::pair<int, int>>& spans) {
    const int n = static_cast<int>(spans.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        int lo = std::numeric_limits<int>::min(), hi = std::numeric_limits<int>::max();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                lo = std::max(lo, spans[static_cast<std::size_t>(i)].first);
                hi = std::min(hi, spans[static_cast<std::size_t>(i)].second);
            }
        if (lo <= hi || mask == 0) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Brute-force (c,o)-perforation decision: enumerate induced cycles by
// subsets, then try every c-subset of cycles for pairwise disjointness and
// anticompleteness.
inline bool brute_force_perforated(const Graph& g, int c, int o) {
    auto cycles = subset_induced_cycles(g, o + 2);
    const int m = static_cast<int>(cycles.size());
    std::vector<int> chosen;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == c) return true;  // packing found
        for (int i = from; i < m; ++i) {
            bool ok = true;
            for (int j : chosen) {
                for (VertexId u : cycles[static_cast<std::size_t>(i)].verts)
                    for (VertexId v : cycles[static_cast<std::size_t>(j)].verts)
                        if (u == v || g.has_edge(u, v)) ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            chosen.push_back(i);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return !rec(0);
}

// Seeded Erdos-Renyi-style graph with m attempted edges.
inline Graph random_graph(int n, int edge_attempts, std::uint64_t seed) {
    Rng rng(seed);
    Graph g = Graph::with_vertex_count(n);
    for (int k = 0; k < edge_attempts; ++k) {
        int u = rng.below(n), v = rng.below(n);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

// Random d-meager asterism of the exact given order: path of seeded length,
// every S-vertex gets 1..3 interior neighbors, capped at d owners per
// L-vertex.
inline GeneratedAsterism random_meager_asterism(int order, int d, std::uint64_t seed) {
    Rng rng(seed);
    // Room for up to 3 neighbors per S-vertex even at owner cap d = 1.
    int path_len = std::max(3 * order + 4, 8) + rng.below(order + 3);
    Graph g = Graph::with_vertex_count(path_len + 1 + order);
    OrderedAsterism a;
    for (int p = 0; p <= path_len; ++p) a.l.verts.push_back(p);
    for (int p = 0; p + 1 <= path_len; ++p) g.add_edge(p, p + 1);
    std::vector<int> owners(static_cast<std::size_t>(path_len + 1), 0);
    for (int i = 0; i < order; ++i) {
        VertexId x = path_len + 1 + i;
        a.s.push_back(x);
        int want = 1 + rng.below(3);
        int placed = 0;
        for (int tries = 0; tries < 200 && placed < want; ++tries) {
            int p = 1 + rng.below(path_len - 1);
            if (owners[static_cast<std::size_t>(p)] >= d) continue;
            if (g.has_edge(x, p)) continue;
            g.add_edge(x, p);
            ++owners[static_cast<std::size_t>(p)];
            ++placed;
        }
        if (placed == 0) {
            // always possible for desk-scale parameters; fall back to a scan
            for (int p = 1; p < path_len && placed == 0; ++p)
                if (owners[static_cast<std::size_t>(p)] < d && !g.has_edge(x, p)) {
                    g.add_edge(x, p);
                    ++owners[static_cast<std::size_t>(p)];
                    ++placed;
                }
        }
    }
    return {std::move(g), std::move(a)};
}

// Random (spacing)-ample interrupted ordered asterism built by cherry
// construction: layer i receives one neighbor inside every open prefix piece,
// and invades closed pieces only on a seeded coin flip, so deeper layers may
// genuinely miss them. Attachments sit at least `spacing` apart (routes have
// length >= spacing + 2); a slot keeps a margin of spacing * 2^{remaining
// layers} from its piece's ends so every open sub-piece stays attachable.
// Occasional double attachments create closed pieces too tight to invade,
// which is where misses come from. Returns empty when a layer has no room.
inline std::optional<GeneratedAsterism> random_interrupted_asterism(int order,
                                                                    std::uint64_t seed,
                                                                    int spacing = 2) {
    Rng rng(seed);
    int path_len =
        std::max(24 + 10 * order, 2 * spacing * (1 << order) + 8) + rng.below(8);
    GeneratedAsterism out;
    out.graph = Graph::with_vertex_count(path_len + 1 + order);
    for (int p = 0; p + 1 <= path_len; ++p) out.graph.add_edge(p, p + 1);
    for (int p = 0; p <= path_len; ++p) out.asterism.l.verts.push_back(p);
    OrderedAsterism built{{}, out.asterism.l};
    for (int i = 0; i < order; ++i) {
        const int margin = spacing * (1 << (order - 1 - i));
        std::vector<int> mine;
        for (const Piece& piece : pieces(out.graph, built)) {
            int a = piece.path.verts.front();
            int b = piece.path.verts.back();
            std::vector<int> slots;
            for (int p = a + margin; p <= b - margin; ++p) slots.push_back(p);
            bool want = piece.open || (!slots.empty() && rng.below(2) == 1);
            if (!want) continue;
            if (slots.empty()) {
                if (piece.open) return std::nullopt;  // cannot stay interrupted
                continue;                             // skip the closed piece
            }
            int p = slots[static_cast<std::size_t>(rng.below(static_cast<int>(slots.size())))];
            mine.push_back(p);
            if (piece.open && rng.below(3) == 0) {
                int gap = spacing + rng.below(2);
                if (p + gap <= b - margin) mine.push_back(p + gap);
            }
        }
        if (mine.empty()) return std::nullopt;
        VertexId x = path_len + 1 + i;
        out.asterism.s.push_back(x);
        built.s.push_back(x);
        for (int p : mine) out.graph.add_edge(x, p);
    }
    if (check_asterism(out.graph, out.asterism)) return std::nullopt;
    if (!is_d_ample(out.graph, out.asterism, spacing)) return std::nullopt;
    if (!is_interrupted(out.graph, out.asterism)) return std::nullopt;
    return out;
}

}  // namespace oracles
