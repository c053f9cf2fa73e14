#include "occult/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace occult {

namespace {

void require(bool cond, const std::string& clause, const std::string& detail) {
    if (!cond) throw PreconditionError(clause, detail);
}

}  // namespace

Graph wall(int t) {
    require(t >= 1, "t-positive", "t must be >= 1");
    if (t == 1) {
        // Degenerate single-row wall: one horizontal path.
        Graph p = Graph::with_vertex_count(4);
        for (int i = 0; i + 1 < 4; ++i) p.add_edge(i, i + 1);
        return p;
    }
    // t horizontal paths of 2t+2 vertices, vertical edges at alternating
    // columns between consecutive rows: each row pair carries t bricks.
    const int rows = t, cols = 2 * t + 2;
    auto id = [cols](int r, int c) { return r * cols + c; };
    Graph grid = Graph::with_vertex_count(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) grid.add_edge(id(r, c), id(r, c + 1));
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = r % 2; c < cols; c += 2) grid.add_edge(id(r, c), id(r + 1, c));
    // Drop the two degree-1 corners, then relabel to 0..n-1.
    std::vector<VertexId> keep;
    for (VertexId v : grid.vertices())
        if (grid.degree(v) > 1) keep.push_back(v);
    Graph trimmed = induced_subgraph(grid, keep);
    std::map<VertexId, VertexId> relabel;
    VertexId next = 0;
    for (VertexId v : trimmed.vertices()) relabel[v] = next++;
    Graph out = Graph::with_vertex_count(next);
    for (const Edge& e : trimmed.edge_list()) out.add_edge(relabel[e.first], relabel[e.second]);
    return out;
}

Graph complete(int t) {
    require(t >= 1, "t-positive", "t must be >= 1");
    Graph g = Graph::with_vertex_count(t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "side-positive", "both sides must be >= 1");
    Graph g = Graph::with_vertex_count(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

namespace {

// Builds the host graph for an occultation-shaped asterism: a path of
// path_len+1 vertices (ids 0..path_len) plus one vertex per S entry, attached
// at the listed positions. pi(i) = path_len + i.
GeneratedAsterism build_attached_path(int path_len,
                                      const std::vector<std::vector<int>>& neighbor_pos) {
    GeneratedAsterism out;
    out.graph = Graph::with_vertex_count(path_len + 1 + static_cast<int>(neighbor_pos.size()));
    for (int p = 0; p + 1 <= path_len; ++p) out.graph.add_edge(p, p + 1);
    for (int p = 0; p <= path_len; ++p) out.asterism.l.verts.push_back(p);
    for (std::size_t i = 0; i < neighbor_pos.size(); ++i) {
        VertexId x = path_len + 1 + static_cast<int>(i);
        out.asterism.s.push_back(x);
        for (int p : neighbor_pos[i]) out.graph.add_edge(x, p);
    }
    return out;
}

// Canonical neighbor positions of x_i on the unit-length occultation path:
// the odd multiples of 2^{s-i}.
std::vector<int> canonical_positions(int s, int i) {
    std::vector<int> out;
    const int step = 1 << (s - i);
    for (int k = step; k <= (1 << s); k += 2 * step) out.push_back(k);
    return out;
}

}  // namespace

GeneratedAsterism occultation(int s) {
    require(s >= 0, "s-nonnegative", "s must be >= 0");
    std::vector<std::vector<int>> pos;
    for (int i = 1; i <= s; ++i) pos.push_back(canonical_positions(s, i));
    return build_attached_path(1 << s, pos);
}

GeneratedAsterism full_occultation(const FullOccultationParams& params) {
    require(params.s >= 0, "s-nonnegative", "s must be >= 0");
    require(params.o >= 1, "o-positive", "o must be >= 1");
    require(params.min_gap >= 1, "min-gap", "min_gap must be >= 1");
    const int s = params.s;
    const int edges = 1 << s;
    std::vector<int> lens;
    if (params.subdivision.size() == 1)
        lens.assign(edges, params.subdivision.front());
    else if (static_cast<int>(params.subdivision.size()) == edges)
        lens = params.subdivision;
    else
        throw PreconditionError("subdivision-size",
                                "expected 1 or " + std::to_string(edges) + " lengths");
    for (int len : lens) require(len >= 1, "positive-length", "lengths must be >= 1");

    // Subdivide the canonical path: position k maps to the prefix sum.
    std::vector<int> at(edges + 1, 0);
    for (int k = 1; k <= edges; ++k) at[k] = at[k - 1] + lens[k - 1];
    std::vector<std::vector<int>> pos;
    for (int i = 1; i <= s; ++i) {
        std::vector<int> mapped;
        for (int k : canonical_positions(s, i)) mapped.push_back(at[k]);
        pos.push_back(mapped);
    }
    GeneratedAsterism out = build_attached_path(at[edges], pos);

    Rng rng(params.seed);
    auto gap_ok = [&](VertexId x, int p) {
        for (VertexId w : out.graph.neighbors(x)) {
            if (w > at[edges]) continue;  // only L-neighbors matter
            if (std::abs(w - p) < params.min_gap) return false;
        }
        return true;
    };
    for (const auto& [key, count] : params.extra) {
        auto [i, piece_index] = key;
        require(i >= 1 && i <= s, "extra-index", "i out of range");
        for (int placed = 0; placed < count; ++placed) {
            auto ps = pieces(out.graph, prefix(out.asterism, i - 1));
            require(piece_index >= 0 && piece_index < static_cast<int>(ps.size()),
                    "extra-piece", "piece index out of range for i=" + std::to_string(i));
            const Piece& piece = ps[static_cast<std::size_t>(piece_index)];
            VertexId x = out.asterism.s[static_cast<std::size_t>(i - 1)];
            std::vector<VertexId> candidates;
            for (VertexId v : piece.path.interior()) {
                bool owned = false;
                for (VertexId y : out.asterism.s)
                    if (out.graph.has_edge(y, v)) {
                        owned = true;
                        break;
                    }
                if (!owned && gap_ok(x, v)) candidates.push_back(v);
            }
            // Seed-chosen starting point, then scan for the first placement
            // that keeps the witness a full (s,o)-occultation.
            bool done = false;
            if (!candidates.empty()) {
                int start = rng.below(static_cast<int>(candidates.size()));
                for (std::size_t k = 0; k < candidates.size() && !done; ++k) {
                    VertexId v = candidates[(start + k) % candidates.size()];
                    Graph trial = out.graph;
                    trial.add_edge(x, v);
                    if (is_full_occultation(trial, out.asterism, params.o)) {
                        out.graph = std::move(trial);
                        done = true;
                    }
                }
            }
            require(done, "extra-placement",
                    "no admissible position for extra (" + std::to_string(i) + "," +
                        std::to_string(piece_index) + ")");
        }
    }
    return out;
}

GeneratedAsterism ample_interrupted_asterism(int s, int d, std::uint64_t seed) {
    require(s >= 0, "s-nonnegative", "s must be >= 0");
    require(d >= 0, "d-nonnegative", "d must be >= 0");
    Rng rng(seed);
    const int edges = 1 << s;
    std::vector<int> lens;
    for (int k = 0; k < edges; ++k) lens.push_back(d + 1 + rng.below(2));
    FullOccultationParams params;
    params.s = s;
    params.o = 1;
    params.subdivision = lens;
    params.seed = seed;
    return full_occultation(params);
}

GeneratedAsterism syzygy(int a, const std::vector<int>& gaps, std::uint64_t seed) {
    require(a >= 1, "a-positive", "a must be >= 1");
    require(!gaps.empty(), "gaps", "need at least one gap value");
    for (int gp : gaps) require(gp >= 1, "gaps", "gaps must be >= 1");
    Rng rng(seed);
    std::vector<std::vector<int>> pos;
    int cur = 1 + rng.below(2);
    for (int i = 0; i < a; ++i) {
        std::vector<int> block{cur};
        if (rng.below(2) == 1) {
            cur += 1 + rng.below(2);
            block.push_back(cur);
        }
        pos.push_back(block);
        if (i + 1 < a) cur += gaps[static_cast<std::size_t>(i) % gaps.size()];
    }
    int path_len = cur + 1 + rng.below(2);
    return build_attached_path(path_len, pos);
}

GeneratedGemini gemini(int g, int o, std::uint64_t seed) {
    require(g >= 1, "g-positive", "g must be >= 1");
    require(o >= 1, "o-positive", "o must be >= 1");
    Rng rng(seed);

    // Neighbor blocks for a 2o-ample syzygy: inter-block gaps >= 2o.
    auto make_blocks = [&](std::vector<std::vector<int>>& pos, int& path_len) {
        int cur = 1 + rng.below(2);
        for (int i = 0; i < g; ++i) {
            std::vector<int> block{cur};
            if (rng.below(2) == 1) {
                cur += 1;
                block.push_back(cur);
            }
            pos.push_back(block);
            if (i + 1 < g) cur += 2 * o + rng.below(2);
        }
        path_len = cur + 1 + rng.below(2);
    };

    std::vector<std::vector<int>> pos1, pos2;
    int len1 = 0, len2 = 0;
    make_blocks(pos1, len1);
    make_blocks(pos2, len2);
    std::vector<int> connector_len;
    for (int i = 0; i < g; ++i) {
        static const std::vector<int> choices{0, 2, 3};
        connector_len.push_back(choices[static_cast<std::size_t>(rng.below(3))]);
    }

    GeneratedGemini out;
    Graph& h = out.graph;
    VertexId next = 0;
    auto fresh = [&] { h.add_vertex(next); return next++; };

    std::vector<VertexId> l1, l2, s1, s2;
    for (int p = 0; p <= len1; ++p) l1.push_back(fresh());
    for (int p = 0; p + 1 <= len1; ++p) h.add_edge(l1[p], l1[p + 1]);
    for (int p = 0; p <= len2; ++p) l2.push_back(fresh());
    for (int p = 0; p + 1 <= len2; ++p) h.add_edge(l2[p], l2[p + 1]);
    for (int i = 0; i < g; ++i) s1.push_back(fresh());
    for (int i = 0; i < g; ++i)
        s2.push_back(connector_len[static_cast<std::size_t>(i)] == 0
                         ? s1[static_cast<std::size_t>(i)]
                         : fresh());
    for (int i = 0; i < g; ++i) {
        for (int p : pos1[static_cast<std::size_t>(i)])
            h.add_edge(s1[static_cast<std::size_t>(i)], l1[static_cast<std::size_t>(p)]);
        for (int p : pos2[static_cast<std::size_t>(i)])
            h.add_edge(s2[static_cast<std::size_t>(i)], l2[static_cast<std::size_t>(p)]);
    }
    for (int i = 0; i < g; ++i) {
        PathWitness q;
        int len = connector_len[static_cast<std::size_t>(i)];
        if (len == 0) {
            q.verts = {s1[static_cast<std::size_t>(i)]};
        } else {
            q.verts.push_back(s1[static_cast<std::size_t>(i)]);
            VertexId prev = s1[static_cast<std::size_t>(i)];
            for (int k = 1; k < len; ++k) {
                VertexId mid = fresh();
                h.add_edge(prev, mid);
                q.verts.push_back(mid);
                prev = mid;
            }
            h.add_edge(prev, s2[static_cast<std::size_t>(i)]);
            q.verts.push_back(s2[static_cast<std::size_t>(i)]);
        }
        out.gemini.connectors.paths.push_back(std::move(q));
    }
    out.gemini.first.s = s1;
    for (VertexId v : l1) out.gemini.first.l.verts.push_back(v);
    out.gemini.second.s = s2;
    for (VertexId v : l2) out.gemini.second.l.verts.push_back(v);
    return out;
}

GeneratedConstellation constellation(int s, int l, const std::vector<int>& lengths,
                                     std::uint64_t seed) {
    require(s >= 0, "s-nonnegative", "s must be >= 0");
    require(l >= 1, "l-positive", "l must be >= 1");
    require(!lengths.empty(), "lengths", "need at least one path length");
    for (int len : lengths) require(len >= 0, "lengths", "lengths must be >= 0");
    Rng rng(seed);
    GeneratedConstellation out;
    Graph& h = out.graph;
    VertexId next = 0;
    auto fresh = [&] { h.add_vertex(next); return next++; };
    for (int j = 0; j < l; ++j) {
        int len = lengths[static_cast<std::size_t>(j) % lengths.size()];
        PathWitness p;
        p.verts.push_back(fresh());
        for (int k = 0; k < len; ++k) {
            VertexId v = fresh();
            h.add_edge(p.verts.back(), v);
            p.verts.push_back(v);
        }
        out.constellation.paths.paths.push_back(std::move(p));
    }
    for (int i = 0; i < s; ++i) {
        VertexId x = fresh();
        out.constellation.s.push_back(x);
        for (const PathWitness& p : out.constellation.paths.paths) {
            int count = 1 + rng.below(2);
            std::set<int> chosen;
            for (int k = 0; k < count; ++k)
                chosen.insert(rng.below(static_cast<int>(p.verts.size())));
            for (int idx : chosen) h.add_edge(x, p.verts[static_cast<std::size_t>(idx)]);
        }
    }
    out.constellation.plain = true;
    return out;
}

GeneratedAsterism sample_asterism() {
    // 25-vertex path (positions 1..25 = ids 0..24) with five attached
    // vertices. Neighbor positions, 1-based:
    //   x1: 5 8 11 | x2: 3 8 11 13 20 21 | x3: 12 14 19 | x4: 9 11 16
    //   x5: 17 20 22
    // Pieces: 15 total, 13 internal; [5,8] is closed, [17,19] is open, and
    // the transition graph has exactly the six edges
    // {x1x2, x2x3, x2x5, x3x4, x3x5, x4x5}.
    std::vector<std::vector<int>> pos = {
        {5, 8, 11}, {3, 8, 11, 13, 20, 21}, {12, 14, 19}, {9, 11, 16}, {17, 20, 22}};
    for (auto& block : pos)
        for (int& p : block) --p;  // to 0-based positions = ids
    return build_attached_path(24, pos);
}

SampleAsterismWithCherry sample_asterism_with_cherry() {
    GeneratedAsterism base = sample_asterism();
    SampleAsterismWithCherry out{std::move(base.graph), std::move(base.asterism), 30};
    out.graph.add_vertex(30);
    for (int p : {2, 4, 9, 12, 13, 14, 16, 17, 19, 21, 23})  // 1-based positions
        out.graph.add_edge(30, p - 1);
    return out;
}

}  // namespace occult
