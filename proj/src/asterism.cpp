#include "occult/asterism.hpp"

#include <algorithm>
#include <set>

namespace occult {

namespace {

// Position machinery over L. Positions are 0-based indices into l.verts.
struct LIndex {
    std::vector<VertexId> lv;
    std::map<VertexId, int> pos;

    explicit LIndex(const PathWitness& l) : lv(l.verts) {
        for (int i = 0; i < static_cast<int>(lv.size()); ++i) pos[lv[i]] = i;
    }
    int n() const { return static_cast<int>(lv.size()); }
};

// Sorted positions of x's neighbors on L.
std::vector<int> neighbor_positions(const Graph& g, const LIndex& li, VertexId x) {
    std::vector<int> out;
    for (VertexId w : g.neighbors(x)) {
        auto it = li.pos.find(w);
        if (it != li.pos.end()) out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool any_in_range(const std::vector<int>& sorted, int lo, int hi) {
    if (lo > hi) return false;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
    return it != sorted.end() && *it <= hi;
}

// Sorted distinct positions of L-vertices with a neighbor in the given
// S-subset (piece boundaries).
std::vector<int> boundary_positions(const Graph& g, const LIndex& li,
                                    const std::vector<VertexId>& s_subset) {
    std::set<int> bs;
    for (VertexId x : s_subset)
        for (int p : neighbor_positions(g, li, x)) bs.insert(p);
    return {bs.begin(), bs.end()};
}

PathWitness segment(const LIndex& li, int a, int b) {
    PathWitness p;
    p.verts.assign(li.lv.begin() + a, li.lv.begin() + b + 1);
    return p;
}

// Pieces of the asterism (s_subset, L) in left-to-right order.
std::vector<Piece> pieces_of_subset(const Graph& g, const LIndex& li,
                                    const std::vector<VertexId>& s_subset) {
    std::vector<Piece> out;
    const int n = li.n();
    if (n < 2) return out;  // pieces have nonzero length
    std::vector<int> cuts = boundary_positions(g, li, s_subset);
    std::vector<int> marks;
    marks.push_back(0);
    for (int c : cuts)
        if (c != 0 && c != n - 1) marks.push_back(c);
    marks.push_back(n - 1);
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        int a = marks[i], b = marks[i + 1];
        if (a >= b) continue;
        Piece piece;
        piece.path = segment(li, a, b);
        piece.internal = (a > 0 && b < n - 1);
        // Open iff the ends have no common neighbor in the S-subset.
        bool common = false;
        for (VertexId x : s_subset)
            if (g.has_edge(x, li.lv[a]) && g.has_edge(x, li.lv[b])) {
                common = true;
                break;
            }
        piece.open = !common;
        out.push_back(std::move(piece));
    }
    return out;
}

std::vector<VertexId> prefix_subset(const OrderedAsterism& a, int i) {
    return {a.s.begin(), a.s.begin() + i};
}

}  // namespace

std::vector<VertexId> OrderedAsterism::all_vertices() const {
    std::vector<VertexId> out = s;
    out.insert(out.end(), l.verts.begin(), l.verts.end());
    return out;
}

CheckResult check_asterism(const Graph& g, const OrderedAsterism& a) {
    if (auto bad = check_path(g, a.l))
        return Violation{"path", "L is not an induced path: " + to_string(*bad)};
    std::set<VertexId> sset;
    for (VertexId x : a.s) {
        if (!g.has_vertex(x)) return Violation{"unknown-vertex", std::to_string(x)};
        if (!sset.insert(x).second)
            return Violation{"distinct", "repeated S-vertex " + std::to_string(x)};
        if (a.l.contains(x))
            return Violation{"disjointness", "S-vertex " + std::to_string(x) + " lies on L"};
    }
    for (std::size_t i = 0; i < a.s.size(); ++i)
        for (std::size_t j = i + 1; j < a.s.size(); ++j)
            if (g.has_edge(a.s[i], a.s[j]))
                return Violation{"stability", std::to_string(a.s[i]) + " adjacent to " +
                                                  std::to_string(a.s[j])};
    const auto inter = a.l.interior();
    for (VertexId x : a.s) {
        bool found = false;
        for (VertexId w : inter)
            if (g.has_edge(x, w)) {
                found = true;
                break;
            }
        if (!found)
            return Violation{"interior-neighbor",
                             "S-vertex " + std::to_string(x) + " has no neighbor in L*"};
    }
    for (VertexId x : a.s)
        for (VertexId e : a.l.ends())
            if (g.has_edge(x, e))
                return Violation{"end-anticompleteness",
                                 "S-vertex " + std::to_string(x) + " adjacent to L-end " +
                                     std::to_string(e)};
    return std::nullopt;
}

std::variant<OrderedAsterism, Violation> validate_asterism(const Graph& g,
                                                           const std::vector<VertexId>& s,
                                                           const PathWitness& l) {
    OrderedAsterism a{s, l};
    if (auto bad = check_asterism(g, a)) return *bad;
    return a;
}

std::vector<Route> routes(const Graph& g, const OrderedAsterism& a) {
    LIndex li(a.l);
    const int n = li.n();
    std::vector<std::vector<int>> npos;
    npos.reserve(a.s.size());
    for (VertexId x : a.s) npos.push_back(neighbor_positions(g, li, x));

    std::vector<Route> out;
    std::vector<std::pair<int, int>> interiors;
    auto try_route = [&](std::size_t xi, std::size_t yi, int p, int q) {
        // a.s[xi] attaches at position p, a.s[yi] at q, p <= q.
        if (!g.has_edge(a.s[xi], li.lv[p]) || !g.has_edge(a.s[yi], li.lv[q])) return;
        if (any_in_range(npos[xi], p + 1, q)) return;
        if (any_in_range(npos[yi], p, q - 1)) return;
        Route r;
        r.path.verts.push_back(a.s[xi]);
        for (int k = p; k <= q; ++k) r.path.verts.push_back(li.lv[k]);
        r.path.verts.push_back(a.s[yi]);
        interiors.emplace_back(p, q);
        out.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < a.s.size(); ++i)
        for (std::size_t j = i + 1; j < a.s.size(); ++j)
            for (int p = 0; p < n; ++p)
                for (int q = p; q < n; ++q) {
                    try_route(i, j, p, q);
                    if (p < q) try_route(j, i, p, q);
                }
    for (std::size_t r = 0; r < out.size(); ++r) {
        bool minimal = true;
        for (std::size_t o = 0; o < out.size() && minimal; ++o) {
            if (o == r) continue;
            auto [p1, q1] = interiors[o];
            auto [p0, q0] = interiors[r];
            if (p0 <= p1 && q1 <= q0 && (p0 < p1 || q1 < q0)) minimal = false;
        }
        out[r].minimal = minimal;
    }
    return out;
}

std::vector<Route> minimal_routes(const Graph& g, const OrderedAsterism& a) {
    std::vector<Route> all = routes(g, a);
    std::vector<Route> out;
    for (auto& r : all)
        if (r.minimal) out.push_back(std::move(r));
    return out;
}

std::vector<Piece> pieces(const Graph& g, const OrderedAsterism& a) {
    LIndex li(a.l);
    return pieces_of_subset(g, li, a.s);
}

bool is_d_ample(const Graph& g, const OrderedAsterism& a, int d) {
    if (d < 0) throw PreconditionError("d-nonnegative", "d must be >= 0");
    LIndex li(a.l);
    // Shortest route between x and y spans consecutive entries of the merged
    // neighbor-position list, so only those need checking.
    for (std::size_t i = 0; i < a.s.size(); ++i) {
        auto pi = neighbor_positions(g, li, a.s[i]);
        for (std::size_t j = i + 1; j < a.s.size(); ++j) {
            auto pj = neighbor_positions(g, li, a.s[j]);
            std::vector<std::pair<int, int>> merged;  // (position, side bits)
            for (int p : pi) merged.emplace_back(p, 1);
            for (int p : pj) merged.emplace_back(p, 2);
            std::sort(merged.begin(), merged.end());
            for (std::size_t k = 0; k < merged.size(); ++k) {
                if (k + 1 < merged.size() && merged[k].first == merged[k + 1].first) {
                    // Common neighbor: route of length 2.
                    if (2 < d + 2) return false;
                    ++k;
                    continue;
                }
                if (k + 1 < merged.size() && merged[k].second != merged[k + 1].second) {
                    int len = merged[k + 1].first - merged[k].first + 2;
                    if (len < d + 2) return false;
                }
            }
        }
    }
    return true;
}

bool is_ample(const Graph& g, const OrderedAsterism& a) { return is_d_ample(g, a, 1); }

bool is_d_meager(const Graph& g, const OrderedAsterism& a, int d) {
    if (d < 0) throw PreconditionError("d-nonnegative", "d must be >= 0");
    for (VertexId w : a.l.verts) {
        int count = 0;
        for (VertexId x : a.s)
            if (g.has_edge(x, w)) ++count;
        if (count > d) return false;
    }
    return true;
}

namespace {

bool meets(const Graph& g, VertexId x, const PathWitness& p) {
    for (VertexId w : p.verts)
        if (g.has_edge(x, w)) return true;
    return false;
}

}  // namespace

bool is_interrupted(const Graph& g, const OrderedAsterism& a) {
    LIndex li(a.l);
    for (int i = 1; i <= a.order(); ++i) {
        VertexId x = a.s[i - 1];
        for (const Piece& p : pieces_of_subset(g, li, prefix_subset(a, i - 1)))
            if (p.open && !meets(g, x, p.path)) return false;
    }
    return true;
}

bool is_o_invaded(const Graph& g, const OrderedAsterism& a, int o) {
    if (o < 1) throw PreconditionError("o-positive", "o must be >= 1");
    LIndex li(a.l);
    for (int i = 1; i <= a.order(); ++i) {
        VertexId x = a.s[i - 1];
        for (const Piece& p : pieces_of_subset(g, li, prefix_subset(a, i - 1)))
            if (!p.open && p.path.length() >= o && !meets(g, x, p.path)) return false;
    }
    return true;
}

bool is_full_occultation(const Graph& g, const OrderedAsterism& a, int o) {
    return is_ample(g, a) && is_interrupted(g, a) && is_o_invaded(g, a, o);
}

bool is_syzygy(const Graph& g, const OrderedAsterism& a) {
    LIndex li(a.l);
    std::vector<std::vector<int>> npos;
    for (VertexId x : a.s) npos.push_back(neighbor_positions(g, li, x));
    for (bool reversed : {false, true}) {
        bool ok = true;
        int prev_max = -1;
        for (std::size_t i = 0; i < npos.size() && ok; ++i) {
            if (npos[i].empty()) {
                ok = false;
                break;
            }
            int lo = npos[i].front(), hi = npos[i].back();
            if (reversed) {
                int n = li.n();
                int nlo = n - 1 - hi, nhi = n - 1 - lo;
                lo = nlo;
                hi = nhi;
            }
            if (lo <= prev_max) ok = false;
            prev_max = std::max(prev_max, hi);
        }
        if (ok) return true;
    }
    return false;
}

OrderedAsterism restrict_to(const OrderedAsterism& a, const std::vector<VertexId>& x) {
    std::set<VertexId> want(x.begin(), x.end());
    std::set<VertexId> have(a.s.begin(), a.s.end());
    for (VertexId v : want)
        if (!have.count(v))
            throw PreconditionError("subset", "vertex " + std::to_string(v) + " not in S");
    OrderedAsterism out;
    out.l = a.l;
    for (VertexId v : a.s)
        if (want.count(v)) out.s.push_back(v);
    return out;
}

OrderedAsterism prefix(const OrderedAsterism& a, int i) {
    if (i < 0 || i > a.order())
        throw PreconditionError("prefix-range", "index " + std::to_string(i));
    OrderedAsterism out;
    out.l = a.l;
    out.s.assign(a.s.begin(), a.s.begin() + i);
    return out;
}

TransitionGraph transition_graph(const Graph& g, const OrderedAsterism& a) {
    TransitionGraph tg;
    for (VertexId x : a.s) tg.graph.add_vertex(x);
    LIndex li(a.l);
    const int n = li.n();
    std::vector<std::vector<int>> npos;
    for (VertexId x : a.s) npos.push_back(neighbor_positions(g, li, x));
    // All S-neighbor positions of anyone, to test interiors quickly.
    for (std::size_t i = 0; i < a.s.size(); ++i)
        for (std::size_t j = i + 1; j < a.s.size(); ++j) {
            // Candidate certificates ordered by (interior length, left end).
            std::optional<Route> best;
            int best_len = 0, best_p = 0;
            auto consider = [&](std::size_t xi, std::size_t yi, int p, int q) {
                if (!g.has_edge(a.s[xi], li.lv[p]) || !g.has_edge(a.s[yi], li.lv[q])) return;
                if (any_in_range(npos[xi], p + 1, q)) return;
                if (any_in_range(npos[yi], p, q - 1)) return;
                for (std::size_t k = 0; k < a.s.size(); ++k) {
                    if (k == xi || k == yi) continue;
                    if (any_in_range(npos[k], p, q)) return;
                }
                if (best && (q - p > best_len || (q - p == best_len && p >= best_p))) return;
                Route r;
                r.path.verts.push_back(a.s[xi]);
                for (int t = p; t <= q; ++t) r.path.verts.push_back(li.lv[t]);
                r.path.verts.push_back(a.s[yi]);
                r.minimal = true;  // shortest valid certificate is minimal
                best = std::move(r);
                best_len = q - p;
                best_p = p;
            };
            for (int p = 0; p < n; ++p)
                for (int q = p; q < n; ++q) {
                    consider(i, j, p, q);
                    if (p < q) consider(j, i, p, q);
                }
            if (best) {
                VertexId u = a.s[i], v = a.s[j];
                Edge e = u < v ? Edge{u, v} : Edge{v, u};
                tg.graph.add_edge(e.first, e.second);
                tg.certificates.emplace(e, std::move(*best));
            }
        }
    return tg;
}

bool is_cherry(const Graph& g, const OrderedAsterism& a, VertexId x) {
    for (VertexId v : a.all_vertices())
        if (v == x)
            throw PreconditionError("cherry-disjoint",
                                    "x = " + std::to_string(x) + " lies in V(a)");
    for (VertexId e : a.l.ends())
        if (g.has_edge(x, e)) return false;  // (CH1)
    for (const Piece& p : pieces(g, a))
        if (p.open && !meets(g, x, p.path)) return false;  // (CH2)
    return true;
}

OrderedAsterism cher(const Graph& g, const OrderedAsterism& a_prime, VertexId x) {
    if (!is_cherry(g, a_prime, x))
        throw PreconditionError("cherry", std::to_string(x) + " is not a cherry on top");
    OrderedAsterism out = a_prime;
    out.s.push_back(x);
    if (auto bad = check_asterism(g, out))
        throw PreconditionError("cher-validity", to_string(*bad));
    return out;
}

namespace detail {

// Locate a'.l inside l_outer as a contiguous run; returns (lo, hi, reversed).
std::optional<std::tuple<int, int, bool>> locate_subpath(const PathWitness& l_outer,
                                                         const PathWitness& sub) {
    const auto& big = l_outer.verts;
    const auto& small = sub.verts;
    if (small.empty() || small.size() > big.size()) return std::nullopt;
    for (std::size_t i = 0; i + small.size() <= big.size(); ++i) {
        if (std::equal(small.begin(), small.end(), big.begin() + i))
            return std::tuple<int, int, bool>{static_cast<int>(i),
                                              static_cast<int>(i + small.size() - 1), false};
        if (std::equal(small.rbegin(), small.rend(), big.begin() + i))
            return std::tuple<int, int, bool>{static_cast<int>(i),
                                              static_cast<int>(i + small.size() - 1), true};
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<OrderedAsterism> interrupted_no_gain_extension(const Graph& g,
                                                             const PathWitness& l_outer,
                                                             const OrderedAsterism& a_prime,
                                                             int gain_limit) {
    auto loc = detail::locate_subpath(l_outer, a_prime.l);
    if (!loc)
        throw PreconditionError("containment", "L' is not a subpath of the outer path");
    auto [lo, hi, reversed] = *loc;
    (void)reversed;
    LIndex li(l_outer);
    const int n = li.n();
    std::vector<std::vector<int>> limited;
    for (int i = 0; i < gain_limit && i < a_prime.order(); ++i)
        limited.push_back(neighbor_positions(g, li, a_prime.s[i]));
    auto gains = [&](int p) {
        for (const auto& np : limited)
            if (std::binary_search(np.begin(), np.end(), p)) return true;
        return false;
    };
    auto candidate = [&](int a, int b) -> std::optional<OrderedAsterism> {
        OrderedAsterism ext = a_prime;
        ext.l = segment(li, a, b);
        if (check_asterism(g, ext)) return std::nullopt;
        if (!is_interrupted(g, ext)) return std::nullopt;
        return ext;
    };
    for (int k = 1; lo - k >= 0; ++k) {
        if (gains(lo - k)) break;
        if (auto ext = candidate(lo - k, hi)) return ext;
    }
    for (int k = 1; hi + k < n; ++k) {
        if (gains(hi + k)) break;
        if (auto ext = candidate(lo, hi + k)) return ext;
    }
    return std::nullopt;
}

bool is_candidate(const Graph& g, const OrderedAsterism& a_outer, VertexId x,
                  const OrderedAsterism& a_prime) {
    if (auto bad = check_asterism(g, a_prime))
        throw PreconditionError("candidate-asterism", to_string(*bad));
    if (!is_interrupted(g, a_prime))
        throw PreconditionError("candidate-interrupted", "a' is not interrupted");
    std::set<VertexId> souter(a_outer.s.begin(), a_outer.s.end());
    for (VertexId v : a_prime.s) {
        if (v == x) throw PreconditionError("containment", "x belongs to S'");
        if (!souter.count(v))
            throw PreconditionError("containment",
                                    "S' vertex " + std::to_string(v) + " not in outer S");
    }
    if (!detail::locate_subpath(a_outer.l, a_prime.l))
        throw PreconditionError("containment", "L' is not a subpath of outer L");
    return !interrupted_no_gain_extension(g, a_outer.l, a_prime, a_prime.order() - 1)
                .has_value();
}

}  // namespace occult
