#include "occult/detectors.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace occult {

std::vector<VertexId> Polypath::all_vertices() const {
    std::vector<VertexId> out;
    for (const auto& p : paths) out.insert(out.end(), p.verts.begin(), p.verts.end());
    return out;
}

std::vector<VertexId> Polypath::all_ends() const {
    std::vector<VertexId> out;
    for (const auto& p : paths)
        for (VertexId e : p.ends()) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CheckResult check_polypath(const Graph& g, const Polypath& pp, bool require_plain) {
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < pp.paths.size(); ++i) {
        if (pp.paths[i].empty()) return Violation{"empty-path", "path " + std::to_string(i)};
        if (auto bad = check_path(g, pp.paths[i]))
            return Violation{"path", "path " + std::to_string(i) + ": " + to_string(*bad)};
        for (VertexId v : pp.paths[i].verts)
            if (!seen.insert(v).second)
                return Violation{"disjointness",
                                 "vertex " + std::to_string(v) + " on two paths"};
    }
    if (require_plain)
        for (std::size_t i = 0; i < pp.paths.size(); ++i)
            for (std::size_t j = i + 1; j < pp.paths.size(); ++j)
                for (VertexId u : pp.paths[i].verts)
                    for (VertexId v : pp.paths[j].verts)
                        if (g.has_edge(u, v))
                            return Violation{"plainness",
                                             "edge between paths " + std::to_string(i) +
                                                 " and " + std::to_string(j)};
    return std::nullopt;
}

// --- Clique / biclique -----------------------------------------------------------

namespace {

bool extend_clique(const Graph& g, std::vector<VertexId>& cur,
                   const std::vector<VertexId>& cands, std::size_t t) {
    if (cur.size() == t) return true;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cands.size() - i + cur.size() < t) return false;
        VertexId v = cands[i];
        std::vector<VertexId> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
        cur.push_back(v);
        if (extend_clique(g, cur, next, t)) return true;
        cur.pop_back();
    }
    return false;
}

// Enumerates stable t-subsets of `pool` in lexicographic order, invoking
// `visit` on each; stops when visit returns true.
bool each_stable_subset(const Graph& g, const std::vector<VertexId>& pool, std::size_t t,
                        std::vector<VertexId>& cur, std::size_t from,
                        const std::function<bool(const std::vector<VertexId>&)>& visit) {
    if (cur.size() == t) return visit(cur);
    for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool.size() - i + cur.size() < t) return false;
        VertexId v = pool[i];
        bool ok = true;
        for (VertexId u : cur)
            if (g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        if (each_stable_subset(g, pool, t, cur, i + 1, visit)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexId>> contains_clique(const Graph& g, int t) {
    if (t < 1) throw PreconditionError("t-positive", "t must be >= 1");
    std::vector<VertexId> cur;
    if (extend_clique(g, cur, g.vertices(), static_cast<std::size_t>(t))) return cur;
    return std::nullopt;
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> contains_biclique(
    const Graph& g, int t) {
    if (t < 1) throw PreconditionError("t-positive", "t must be >= 1");
    std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> found;
    std::vector<VertexId> cur;
    each_stable_subset(g, g.vertices(), static_cast<std::size_t>(t), cur, 0,
                       [&](const std::vector<VertexId>& a) {
                           // Common neighborhood of A; A is stable so it is disjoint from A.
                           std::vector<VertexId> common;
                           for (VertexId v : g.neighbors(a.front())) {
                               bool all = true;
                               for (std::size_t i = 1; i < a.size() && all; ++i)
                                   if (!g.has_edge(a[i], v)) all = false;
                               if (all) common.push_back(v);
                           }
                           if (common.size() < static_cast<std::size_t>(t)) return false;
                           std::vector<VertexId> bcur;
                           return each_stable_subset(
                               g, common, static_cast<std::size_t>(t), bcur, 0,
                               [&](const std::vector<VertexId>& b) {
                                   found = std::make_pair(a, b);
                                   return true;
                               });
                       });
    return found;
}

// --- Perforation -----------------------------------------------------------------

namespace {

bool cycles_conflict(const Graph& g, const CycleWitness& a, const CycleWitness& b) {
    for (VertexId u : a.verts)
        for (VertexId v : b.verts) {
            if (u == v) return true;
            if (g.has_edge(u, v)) return true;
        }
    return false;
}

// Bounded DFS for an independent set of size c in the conflict relation over
// `cycles`. Deterministic: candidates scanned in index order. Returns indices
// or nullopt; sets `exhausted` when the node budget runs out.
struct PackingSearch {
    const std::vector<std::vector<std::size_t>>& conflicts;  // adjacency lists
    std::size_t n;
    int c;
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::optional<std::vector<std::size_t>> run() {
        std::vector<std::size_t> chosen;
        std::vector<bool> blocked(n, false);
        if (dfs(0, chosen, blocked)) return chosen;
        return std::nullopt;
    }

    bool dfs(std::size_t from, std::vector<std::size_t>& chosen, std::vector<bool>& blocked) {
        if (chosen.size() == static_cast<std::size_t>(c)) return true;
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        for (std::size_t i = from; i < n; ++i) {
            if (blocked[i]) continue;
            if (n - i < static_cast<std::size_t>(c) - chosen.size()) return false;
            std::vector<std::size_t> newly;
            for (std::size_t j : conflicts[i])
                if (j > i && !blocked[j]) {
                    blocked[j] = true;
                    newly.push_back(j);
                }
            chosen.push_back(i);
            if (dfs(i + 1, chosen, blocked)) return true;
            if (exhausted) return false;
            chosen.pop_back();
            for (std::size_t j : newly) blocked[j] = false;
        }
        return false;
    }
};

}  // namespace

PerforationVerdict is_perforated(const Graph& g, int c, int o, std::uint64_t budget) {
    if (c < 1) throw PreconditionError("c-positive", "c must be >= 1");
    if (o < 1) throw PreconditionError("o-positive", "o must be >= 1");
    PerforationVerdict verdict;
    verdict.budget.budget = budget;

    InducedCycles enumerated = enumerate_induced_cycles(g, o + 2, budget);
    verdict.budget.enumeration_steps = enumerated.steps_used;
    verdict.budget.cycles_found = enumerated.cycles.size();
    verdict.budget.enumeration_complete = enumerated.complete;

    const auto& cycles = enumerated.cycles;
    const std::size_t n = cycles.size();
    std::vector<std::vector<std::size_t>> conflicts(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cycles_conflict(g, cycles[i], cycles[j])) {
                conflicts[i].push_back(j);
                conflicts[j].push_back(i);
            }
    PackingSearch search{conflicts, n, c, budget};
    auto packing = search.run();
    verdict.budget.search_nodes = search.nodes;

    if (packing) {
        verdict.kind = PerforationVerdict::Kind::NotPerforated;
        for (std::size_t i : *packing) verdict.witness.push_back(cycles[i]);
        return verdict;
    }
    if (enumerated.complete && !search.exhausted) {
        verdict.kind = PerforationVerdict::Kind::Perforated;
        return verdict;
    }
    verdict.kind = PerforationVerdict::Kind::Indeterminate;
    return verdict;
}

CheckResult check_cycle_packing(const Graph& g, const std::vector<CycleWitness>& cycles,
                                int c, int o) {
    if (static_cast<int>(cycles.size()) < c)
        return Violation{"count", "need " + std::to_string(c) + " cycles, have " +
                                      std::to_string(cycles.size())};
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (auto bad = check_cycle(g, cycles[i]))
            return Violation{"induced-cycle",
                             "cycle " + std::to_string(i) + ": " + to_string(*bad)};
        if (cycles[i].length() < o + 2)
            return Violation{"length", "cycle " + std::to_string(i) + " has length " +
                                           std::to_string(cycles[i].length()) + " < " +
                                           std::to_string(o + 2)};
    }
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            for (VertexId u : cycles[i].verts)
                for (VertexId v : cycles[j].verts) {
                    if (u == v)
                        return Violation{"disjointness", "cycles " + std::to_string(i) +
                                                             "," + std::to_string(j) +
                                                             " share vertex " +
                                                             std::to_string(u)};
                    if (g.has_edge(u, v))
                        return Violation{"anticompleteness",
                                         "edge between cycles " + std::to_string(i) + "," +
                                             std::to_string(j)};
                }
    return std::nullopt;
}

// --- Strong blocks ------------------------------------------------------------------

CheckResult verify_strong_block(const Graph& g, int k, const StrongBlockWitness& w) {
    if (k < 1) throw PreconditionError("k-positive", "k must be >= 1");
    if (static_cast<int>(w.b.size()) < k)
        return Violation{"cardinality", "|B| = " + std::to_string(w.b.size()) + " < k"};
    std::set<VertexId> bset(w.b.begin(), w.b.end());
    if (bset.size() != w.b.size()) return Violation{"distinct", "B has repeats"};
    for (VertexId v : w.b)
        if (!g.has_vertex(v)) return Violation{"unknown-vertex", std::to_string(v)};

    for (std::size_t i = 0; i < w.b.size(); ++i)
        for (std::size_t j = i + 1; j < w.b.size(); ++j) {
            VertexId x = std::min(w.b[i], w.b[j]), y = std::max(w.b[i], w.b[j]);
            auto it = w.paths.find({x, y});
            if (it == w.paths.end() || static_cast<int>(it->second.size()) < k)
                return Violation{"path-count", "pair {" + std::to_string(x) + "," +
                                                   std::to_string(y) + "} lacks " +
                                                   std::to_string(k) + " paths"};
            std::set<std::vector<VertexId>> distinct;
            std::set<VertexId> interiors;
            for (const auto& p : it->second) {
                if (auto bad = check_path(g, p))
                    return Violation{"path", to_string(*bad)};
                auto ends = p.ends();
                if (ends.size() != 2 ||
                    std::set<VertexId>(ends.begin(), ends.end()) !=
                        std::set<VertexId>{x, y})
                    return Violation{"path-ends", "pair {" + std::to_string(x) + "," +
                                                      std::to_string(y) + "}"};
                std::vector<VertexId> key = p.verts;
                if (key.front() > key.back()) std::reverse(key.begin(), key.end());
                if (!distinct.insert(key).second)
                    return Violation{"distinct-paths", "pair {" + std::to_string(x) + "," +
                                                           std::to_string(y) + "}"};
                for (VertexId v : p.interior())
                    if (!interiors.insert(v).second)
                        return Violation{"internal-disjointness",
                                         "vertex " + std::to_string(v) + " interior to two "
                                         "paths of pair {" +
                                             std::to_string(x) + "," + std::to_string(y) +
                                             "}"};
            }
        }

    // Cross condition: V(P_{x,y}) and V(P_{x',y'}) meet exactly in shared ends.
    std::vector<std::pair<Edge, std::set<VertexId>>> systems;
    for (const auto& [pair, paths] : w.paths) {
        std::set<VertexId> vs;
        for (const auto& p : paths) vs.insert(p.verts.begin(), p.verts.end());
        systems.emplace_back(pair, std::move(vs));
    }
    for (std::size_t i = 0; i < systems.size(); ++i)
        for (std::size_t j = i + 1; j < systems.size(); ++j) {
            std::set<VertexId> allowed;
            const auto& [p1, v1] = systems[i];
            const auto& [p2, v2] = systems[j];
            for (VertexId v : {p1.first, p1.second})
                if (v == p2.first || v == p2.second) allowed.insert(v);
            for (VertexId v : v1)
                if (v2.count(v) && !allowed.count(v))
                    return Violation{"cross-disjointness",
                                     "vertex " + std::to_string(v) + " shared by systems"};
            for (VertexId v : allowed)
                if (!v1.count(v) || !v2.count(v))
                    return Violation{"cross-disjointness",
                                     "shared end " + std::to_string(v) + " missing"};
        }
    return std::nullopt;
}

bool is_d_stable(const Graph& g, const std::vector<VertexId>& s, int d) {
    if (d < 1) throw PreconditionError("d-positive", "d must be >= 1");
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto dist = bfs_distances(g, s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int dij = dist.at(s[j]);
            if (dij >= 0 && dij <= d) return false;
        }
    }
    return true;
}

// --- Structure validators --------------------------------------------------------------

CheckResult validate_constellation(const Graph& g, const Constellation& c,
                                   bool require_plain) {
    if (auto bad = check_polypath(g, c.paths, require_plain)) return bad;
    std::set<VertexId> on_paths;
    for (VertexId v : c.paths.all_vertices()) on_paths.insert(v);
    std::set<VertexId> sset;
    for (VertexId x : c.s) {
        if (!g.has_vertex(x)) return Violation{"unknown-vertex", std::to_string(x)};
        if (!sset.insert(x).second)
            return Violation{"distinct", "repeated S-vertex " + std::to_string(x)};
        if (on_paths.count(x))
            return Violation{"disjointness",
                             "S-vertex " + std::to_string(x) + " lies on a path"};
    }
    for (std::size_t i = 0; i < c.s.size(); ++i)
        for (std::size_t j = i + 1; j < c.s.size(); ++j)
            if (g.has_edge(c.s[i], c.s[j]))
                return Violation{"stability", std::to_string(c.s[i]) + " adjacent to " +
                                                  std::to_string(c.s[j])};
    for (VertexId x : c.s)
        for (std::size_t i = 0; i < c.paths.size(); ++i) {
            bool found = false;
            for (VertexId w : c.paths.paths[i].verts)
                if (g.has_edge(x, w)) {
                    found = true;
                    break;
                }
            if (!found)
                return Violation{"universal-neighbor",
                                 "S-vertex " + std::to_string(x) +
                                     " has no neighbor in path " + std::to_string(i)};
        }
    return std::nullopt;
}

CheckResult validate_bundle(const Graph& g, const Bundle& b, bool require_plain) {
    for (VertexId x : b.s)
        if (!g.has_vertex(x)) return Violation{"unknown-vertex", std::to_string(x)};
    return check_polypath(g, b.paths, require_plain);
}

CheckResult validate_gemini(const Graph& g, const Gemini& gem) {
    const auto& g1 = gem.first;
    const auto& g2 = gem.second;
    if (auto bad = check_asterism(g, g1))
        return Violation{"first-asterism", to_string(*bad)};
    if (auto bad = check_asterism(g, g2))
        return Violation{"second-asterism", to_string(*bad)};
    if (g1.order() != g2.order() ||
        static_cast<int>(gem.connectors.size()) != g1.order())
        return Violation{"arity", "orders and connector count must agree"};

    std::set<VertexId> v1(g1.s.begin(), g1.s.end());
    v1.insert(g1.l.verts.begin(), g1.l.verts.end());
    std::set<VertexId> v2(g2.s.begin(), g2.s.end());
    v2.insert(g2.l.verts.begin(), g2.l.verts.end());
    std::set<VertexId> s1(g1.s.begin(), g1.s.end());
    std::set<VertexId> s2(g2.s.begin(), g2.s.end());

    // (G1): shared vertices are exactly shared S-vertices.
    for (VertexId v : v1)
        if (v2.count(v) && !(s1.count(v) && s2.count(v)))
            return Violation{"G1", "vertex " + std::to_string(v) +
                                       " shared outside S1 and S2"};

    // (G2): the private parts are anticomplete.
    for (VertexId u : v1) {
        if (v2.count(u)) continue;
        for (VertexId v : v2) {
            if (v1.count(v)) continue;
            if (g.has_edge(u, v))
                return Violation{"G2", "edge " + std::to_string(u) + "," +
                                           std::to_string(v) + " between private parts"};
        }
    }

    // (G3): plain polypath avoiding both L's, with the right ends, where a
    // connector may touch L_i only through its i-side S-end.
    if (auto bad = check_polypath(g, gem.connectors, /*require_plain=*/true))
        return Violation{"G3", to_string(*bad)};
    std::set<VertexId> l1(g1.l.verts.begin(), g1.l.verts.end());
    std::set<VertexId> l2(g2.l.verts.begin(), g2.l.verts.end());
    for (int i = 0; i < g1.order(); ++i) {
        const PathWitness& q = gem.connectors.paths[static_cast<std::size_t>(i)];
        for (VertexId v : q.verts)
            if (l1.count(v) || l2.count(v))
                return Violation{"G3", "connector " + std::to_string(i) + " meets a path"};
        VertexId a = g1.s[static_cast<std::size_t>(i)];
        VertexId b = g2.s[static_cast<std::size_t>(i)];
        std::set<VertexId> want{a, b};
        auto ends = q.ends();
        std::set<VertexId> have(ends.begin(), ends.end());
        if (have != want)
            return Violation{"G3", "connector " + std::to_string(i) + " has wrong ends"};
        for (VertexId v : q.verts) {
            if (v != a)
                for (VertexId w : g.neighbors(v))
                    if (l1.count(w))
                        return Violation{"G3", "connector " + std::to_string(i) +
                                                   " touches the first path off its end"};
            if (v != b)
                for (VertexId w : g.neighbors(v))
                    if (l2.count(w))
                        return Violation{"G3", "connector " + std::to_string(i) +
                                                   " touches the second path off its end"};
        }
    }
    return std::nullopt;
}

CheckResult validate_patch(const Graph& g, const std::vector<VertexId>& x, const Patch& p,
                           int d, bool require_plain) {
    if (!g.has_vertex(p.center))
        return Violation{"unknown-vertex", std::to_string(p.center)};
    if (auto bad = check_polypath(g, p.paths, require_plain)) return bad;
    std::set<VertexId> xset(x.begin(), x.end());
    for (VertexId v : p.paths.all_vertices())
        if (v == p.center) return Violation{"P1", "center lies on a path"};  // (P1)
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        const PathWitness& l = p.paths.paths[i];
        if (l.length() < d)
            return Violation{"P2", "path " + std::to_string(i) + " has length " +
                                       std::to_string(l.length()) + " < " +
                                       std::to_string(d)};
        // (P3): L meets X exactly in one end, and the center's neighborhood

        // on L is exactly the other end.
        std::vector<VertexId> in_x;
        for (VertexId v : l.verts)
            if (xset.count(v)) in_x.push_back(v);
        std::vector<VertexId> center_nbrs;
        for (VertexId v : l.verts)
            if (g.has_edge(p.center, v)) center_nbrs.push_back(v);
        auto ends = l.ends();
        if (in_x.size() != 1 ||
            std::find(ends.begin(), ends.end(), in_x.front()) == ends.end())
            return Violation{"P3", "path " + std::to_string(i) +
                                       " must meet X in exactly one end"};
        if (center_nbrs.size() != 1 ||
            std::find(ends.begin(), ends.end(), center_nbrs.front()) == ends.end())
            return Violation{"P3", "center must see path " + std::to_string(i) +
                                       " in exactly one end"};
        if (l.length() >= 1 && in_x.front() == center_nbrs.front())
            return Violation{"P3", "anchors of path " + std::to_string(i) + " coincide"};
    }
    return std::nullopt;
}

CheckResult validate_match(const Graph& g, const std::vector<VertexId>& x, const Match& m,
                           int d, bool require_plain) {
    if (auto bad = check_polypath(g, m.paths, require_plain)) return bad;
    std::set<VertexId> xset(x.begin(), x.end());
    for (std::size_t i = 0; i < m.paths.size(); ++i)
        if (m.paths.paths[i].length() < d)
            return Violation{"M1", "path " + std::to_string(i) + " has length " +
                                       std::to_string(m.paths.paths[i].length()) + " < " +
                                       std::to_string(d)};
    std::set<VertexId> ends;
    for (VertexId e : m.paths.all_ends()) ends.insert(e);
    for (VertexId v : m.paths.all_vertices()) {
        bool in_x = xset.count(v) != 0;
        bool is_end = ends.count(v) != 0;
        if (in_x != is_end)
            return Violation{"M2", "vertex " + std::to_string(v) +
                                       (in_x ? " in X but not an end" : " an end not in X")};
    }
    return std::nullopt;
}

}  // namespace occult
