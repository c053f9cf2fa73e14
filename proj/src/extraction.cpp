#include "occult/extraction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace occult {

namespace {

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > 1'000'000'000LL)
            throw PreconditionError("size-overflow", "parameter power exceeds desk scale");
    }
    return out;
}

std::string ids_to_string(const std::vector<VertexId>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace

IntervalSplit interval_split(const IntervalFamily& f, int a, int b) {
    if (a < 0 || b < 0) throw PreconditionError("thresholds", "a and b must be >= 0");
    for (const auto& [l, r] : f.spans)
        if (l > r) throw PreconditionError("interval", "left endpoint exceeds right");
    IntervalSplit out;
    if (a == 0) {
        out.kind = IntervalSplit::Kind::StableSet;
        return out;
    }
    if (b == 0) {
        out.kind = IntervalSplit::Kind::Clique;
        return out;
    }
    const int n = static_cast<int>(f.spans.size());
    // Greedy disjoint intervals by right endpoint: optimal for intervals.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& x = f.spans[static_cast<std::size_t>(i)];
        const auto& y = f.spans[static_cast<std::size_t>(j)];
        if (x.second != y.second) return x.second < y.second;
        if (x.first != y.first) return x.first < y.first;
        return i < j;
    });
    std::vector<int> picked;
    long long last_right = 0;
    bool first = true;
    for (int i : order) {
        const auto& [l, r] = f.spans[static_cast<std::size_t>(i)];
        if (first || l > last_right) {
            picked.push_back(i);
            last_right = r;
            first = false;
        }
    }
    if (static_cast<int>(picked.size()) >= a) {
        out.kind = IntervalSplit::Kind::StableSet;
        out.ids.assign(picked.begin(), picked.begin() + a);
        return out;
    }
    // Stabbing point: scan left endpoints ascending, take the first point
    // covered by at least b intervals.
    std::vector<int> points;
    for (const auto& [l, r] : f.spans) points.push_back(l);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (int p : points) {
        std::vector<int> covering;
        for (int i = 0; i < n; ++i) {
            const auto& [l, r] = f.spans[static_cast<std::size_t>(i)];
            if (l <= p && p <= r) covering.push_back(i);
        }
        if (static_cast<int>(covering.size()) >= b) {
            out.kind = IntervalSplit::Kind::Clique;
            out.ids.assign(covering.begin(), covering.begin() + b);
            out.point = p;
            return out;
        }
    }
    out.kind = IntervalSplit::Kind::Insufficient;
    return out;
}

// --- Syzygy or constellation -----------------------------------------------------

namespace {

struct SyzConParams {
    int a, l_target, s_target, d;
};

// Positions of x's neighbors inside the path, ascending; empty if none.
std::vector<int> positions_on(const Graph& g, const PathWitness& l, VertexId x) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(l.verts.size()); ++i)
        if (g.has_edge(x, l.verts[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
}

std::variant<SyzygyOutcome, ConstellationOutcome, InsufficientOutcome> syzcon_rec(
    const Graph& g, const std::vector<VertexId>& s_list, const PathWitness& l, int level_l,
    const SyzConParams& p, Trace& trace) {
    trace.note("level", "l=" + std::to_string(level_l) +
                            " |S|=" + std::to_string(s_list.size()));
    if (level_l == 1) {
        if (static_cast<int>(s_list.size()) < p.s_target)
            return InsufficientOutcome{"base level has " + std::to_string(s_list.size()) +
                                       " vertices, need " + std::to_string(p.s_target)};
        PathWitness inner;
        inner.verts = l.interior();
        if (inner.verts.empty())
            return InsufficientOutcome{"degenerate path at base level"};
        Constellation c;
        c.s.assign(s_list.begin(), s_list.begin() + p.s_target);
        c.paths.paths.push_back(std::move(inner));
        c.plain = true;
        trace.note("base", "plain (" + std::to_string(p.s_target) + ",1)-constellation");
        return ConstellationOutcome{std::move(c)};
    }
    const int b = static_cast<int>(
        ipow(p.a, level_l - 2) * (p.s_target + static_cast<long long>(p.d) * (level_l - 2)) +
        p.d);
    IntervalFamily fam;
    for (VertexId x : s_list) {
        auto pos = positions_on(g, l, x);
        if (pos.empty())
            return InsufficientOutcome{"vertex " + std::to_string(x) +
                                       " lost all path neighbors"};
        fam.spans.emplace_back(pos.front(), pos.back());
    }
    IntervalSplit split = interval_split(fam, p.a, b);
    if (split.kind == IntervalSplit::Kind::StableSet) {
        // Disjoint spans in left-to-right order form a syzygy.
        std::vector<std::pair<int, int>> keyed;
        for (int id : split.ids)
            keyed.emplace_back(fam.spans[static_cast<std::size_t>(id)].first, id);
        std::sort(keyed.begin(), keyed.end());
        SyzygyOutcome out;
        out.asterism.l = l;
        for (const auto& [_, id] : keyed)
            out.asterism.s.push_back(s_list[static_cast<std::size_t>(id)]);
        trace.note("stable-side", "syzygy on " + ids_to_string(out.asterism.s));
        return out;
    }
    if (split.kind == IntervalSplit::Kind::Clique) {
        const int u_pos = *split.point;
        VertexId u = l.verts[static_cast<std::size_t>(u_pos)];
        std::vector<VertexId> kept;
        for (int id : split.ids) {
            VertexId x = s_list[static_cast<std::size_t>(id)];
            if (!g.has_edge(x, u)) kept.push_back(x);
        }
        trace.note("clique-side", "stab position " + std::to_string(u_pos) + ", dropped " +
                                      std::to_string(split.ids.size() - kept.size()) +
                                      " neighbors of the stab vertex");
        PathWitness l1, l2;
        l1.verts.assign(l.verts.begin(), l.verts.begin() + u_pos + 1);
        l2.verts.assign(l.verts.begin() + u_pos, l.verts.end());
        auto sub = syzcon_rec(g, kept, l1, level_l - 1, p, trace);
        if (std::holds_alternative<SyzygyOutcome>(sub)) return sub;
        if (std::holds_alternative<InsufficientOutcome>(sub)) return sub;
        auto& con = std::get<ConstellationOutcome>(sub);
        PathWitness right_interior;
        right_interior.verts = l2.interior();
        if (right_interior.verts.empty())
            return InsufficientOutcome{"right half has empty interior"};
        con.constellation.paths.paths.push_back(std::move(right_interior));
        trace.note("append", "right-half interior added; paths now " +
                                 std::to_string(con.constellation.paths.size()));
        return sub;
    }
    return InsufficientOutcome{"interval split insufficient at level " +
                               std::to_string(level_l) + " with |F|=" +
                               std::to_string(fam.spans.size()) + ", a=" +
                               std::to_string(p.a) + ", b=" + std::to_string(b)};
}

}  // namespace

ExtractionOutcome asterism_to_syzygy_or_constellation(const Graph& g,
                                                      const OrderedAsterism& a,
                                                      int target_a, int target_l,
                                                      int target_s, int d) {
    if (target_a < 1) throw PreconditionError("target-a", "a must be >= 1");
    if (target_l < 1) throw PreconditionError("target-l", "l must be >= 1");
    if (target_s < 0) throw PreconditionError("target-s", "s must be >= 0");
    if (d < 0) throw PreconditionError("d-nonnegative", "d must be >= 0");
    if (auto bad = check_asterism(g, a))
        throw PreconditionError("asterism", to_string(*bad));
    if (!is_d_meager(g, a, d))
        throw PreconditionError("meagerness", "input asterism is not d-meager");

    ExtractionOutcome out;
    SyzConParams params{target_a, target_l, target_s, d};
    auto res = syzcon_rec(g, a.s, a.l, target_l, params, out.trace);
    if (std::holds_alternative<SyzygyOutcome>(res)) {
        auto& syz = std::get<SyzygyOutcome>(res);
        if (check_asterism(g, syz.asterism) || !is_syzygy(g, syz.asterism))
            throw std::logic_error("extracted syzygy failed re-validation");
        out.value = std::move(syz);
    } else if (std::holds_alternative<ConstellationOutcome>(res)) {
        auto& con = std::get<ConstellationOutcome>(res);
        if (validate_constellation(g, con.constellation, /*require_plain=*/true))
            throw std::logic_error("extracted constellation failed re-validation");
        out.value = std::move(con);
    } else {
        out.value = std::get<InsufficientOutcome>(res);
    }
    return out;
}

// --- Cherry composition ----------------------------------------------------------

OrderedAsterism cherry_extend(const Graph& g, const OrderedAsterism& a_outer,
                              const OrderedAsterism& a_prime, VertexId x) {
    if (auto bad = check_asterism(g, a_outer))
        throw PreconditionError("outer-asterism", to_string(*bad));
    if (!is_d_ample(g, a_outer, 2))
        throw PreconditionError("outer-2-ample", "outer asterism is not 2-ample");
    if (std::find(a_outer.s.begin(), a_outer.s.end(), x) == a_outer.s.end())
        throw PreconditionError("x-membership", "x must belong to the outer S");
    if (!is_candidate(g, a_outer, x, a_prime))
        throw PreconditionError("candidate", "a' is not a candidate inside the outer asterism");
    OrderedAsterism restr{a_prime.s, a_outer.l};
    if (!is_cherry(g, restr, x))
        throw PreconditionError("cherry", "x is not a cherry on top of the L-restriction");
    OrderedAsterism result = cher(g, a_prime, x);
    if (!is_d_ample(g, result, 2) || !is_interrupted(g, result))
        throw std::logic_error("cherry extension lost 2-ampleness or interruption");
    return result;
}

OrderedAsterism occultation_top(const Graph& g, const OrderedAsterism& a, int r,
                                int r_prime, int o, const OrderedAsterism& prior) {
    const int s = prior.order() + 1;
    if (!(r > r_prime && r_prime >= s - 1 && s - 1 >= 0))
        throw PreconditionError("indices", "need r > r' >= s-1 >= 0");
    if (r > a.order()) throw PreconditionError("indices", "r exceeds |S|");
    if (auto bad = check_asterism(g, a)) throw PreconditionError("asterism", to_string(*bad));
    if (!is_d_ample(g, a, 2)) throw PreconditionError("ampleness", "a is not 2-ample");
    if (!is_interrupted(g, a)) throw PreconditionError("interruption", "a is not interrupted");
    VertexId x = a.s[static_cast<std::size_t>(r - 1)];
    {
        OrderedAsterism pre = prefix(a, r_prime);
        for (const Piece& piece : pieces(g, pre))
            if (!piece.open && piece.path.length() >= o) {
                bool meets = false;
                for (VertexId w : piece.path.verts)
                    if (g.has_edge(x, w)) {
                        meets = true;
                        break;
                    }
                if (!meets)
                    throw PreconditionError("invasion",
                                            "pi(r) misses a closed a^{r'}-piece of length >= o");
            }
    }
    if (!is_full_occultation(g, prior, o))
        throw PreconditionError("prior", "prior is not a full (s-1,o)-occultation");
    {
        std::set<VertexId> allowed(a.s.begin(), a.s.begin() + r_prime);
        for (VertexId v : prior.s)
            if (!allowed.count(v))
                throw PreconditionError("prior", "prior S must sit inside the r'-prefix");
    }

    // Grow the prior's path to maximality: no interrupted same-order extension
    // may gain a neighbor of pi(1..s-2). Each accepted step preserves the
    // full-occultation property.
    OrderedAsterism cur = prior;
    while (auto ext = interrupted_no_gain_extension(g, a.l, cur, cur.order() - 1)) {
        if (!is_full_occultation(g, *ext, o))
            throw std::logic_error("maximalization step broke the occultation");
        cur = *ext;
    }
    return cherry_extend(g, a, cur, x);
}

// --- Interrupted to occultation ------------------------------------------------------

namespace {

bool meets_path(const Graph& g, VertexId x, const PathWitness& p) {
    for (VertexId w : p.verts)
        if (g.has_edge(x, w)) return true;
    return false;
}

struct OccRec {
    const Graph& g;
    int o;
    Trace& trace;

    std::variant<OccultationOutcome, CyclePackingOutcome, InsufficientOutcome> run(
        const OrderedAsterism& aa, int c, int s) {
        trace.note("recurse", "c=" + std::to_string(c) + " s=" + std::to_string(s) +
                                  " |S|=" + std::to_string(aa.order()));
        if (s <= 1) {
            OrderedAsterism result = prefix(aa, s);
            if (!is_full_occultation(g, result, o))
                throw std::logic_error("trivial case is not a full occultation");
            trace.note("base", "s<=1 asterism is already a full occultation");
            return OccultationOutcome{result, o};
        }
        const int r = static_cast<int>(ipow(s, c));
        const int r_prime = static_cast<int>(ipow(s - 1, c));
        VertexId x = aa.s[static_cast<std::size_t>(r - 1)];

        // First closed prefix piece of length >= o that x misses, in L-order.
        std::optional<Piece> missed;
        for (const Piece& piece : pieces(g, prefix(aa, r_prime)))
            if (!piece.open && piece.path.length() >= o && !meets_path(g, x, piece.path)) {
                missed = piece;
                break;
            }

        if (!missed) {
            auto sub = run(prefix(aa, r_prime), c, s - 1);
            if (std::holds_alternative<CyclePackingOutcome>(sub)) return sub;
            if (std::holds_alternative<InsufficientOutcome>(sub)) return sub;
            const auto& prior = std::get<OccultationOutcome>(sub).asterism;
            trace.note("top", "adding pi(" + std::to_string(r) + ") over a (" +
                                  std::to_string(s - 1) + "," + std::to_string(o) +
                                  ")-occultation");
            return OccultationOutcome{occultation_top(g, aa, r, r_prime, o, prior), o};
        }

        // Surgery branch: the missed piece plus its common neighbor is a cycle.
        const PathWitness& p = missed->path;
        VertexId z = -1;
        for (int i = 0; i < r_prime; ++i) {
            VertexId cand = aa.s[static_cast<std::size_t>(i)];
            if (g.has_edge(cand, p.verts.front()) && g.has_edge(cand, p.verts.back())) {
                z = cand;
                break;
            }
        }
        if (z < 0) throw std::logic_error("closed piece without a common neighbor");
        std::vector<VertexId> cyc = p.verts;
        cyc.push_back(z);
        CycleWitness h = CycleWitness::canonical(std::move(cyc));
        if (check_cycle(g, h))
            throw std::logic_error("missed piece did not close into an induced cycle");
        trace.note("cycle", "closed piece at " + ids_to_string(p.verts) + " with apex " +
                                std::to_string(z));
        if (c == 1) return CyclePackingOutcome{{h}};

        for (VertexId v : aa.s)
            if (v != z && meets_path(g, v, p))
                throw std::logic_error("piece is not anticomplete to S minus apex");

        // Carve the next asterism from a route between y = pi(r'+1) and z.
        VertexId y = aa.s[static_cast<std::size_t>(r_prime)];
        const int sc1 = static_cast<int>(ipow(s, c - 1));
        std::vector<VertexId> s_new(aa.s.begin() + (r - sc1), aa.s.begin() + r);

        auto ypos = positions_on(g, aa.l, y);
        auto zpos = positions_on(g, aa.l, z);
        std::vector<std::pair<int, int>> candidates;  // route interiors [lo, hi]
        auto consider = [&](int lo, int hi, const std::vector<int>& left,
                            const std::vector<int>& right) {
            if (!std::binary_search(left.begin(), left.end(), lo)) return;
            if (!std::binary_search(right.begin(), right.end(), hi)) return;
            auto inside = [&](const std::vector<int>& ps, int a2, int b2) {
                auto it = std::lower_bound(ps.begin(), ps.end(), a2);
                return it != ps.end() && *it <= b2;
            };
            if (inside(left, lo + 1, hi)) return;
            if (inside(right, lo, hi - 1)) return;
            candidates.emplace_back(lo, hi);
        };
        for (int lo = 0; lo < static_cast<int>(aa.l.size()); ++lo)
            for (int hi = lo; hi < static_cast<int>(aa.l.size()); ++hi) {
                consider(lo, hi, ypos, zpos);
                if (lo < hi) consider(lo, hi, zpos, ypos);
            }
        if (candidates.empty())
            throw std::logic_error("no route between pi(r'+1) and the apex");
        std::sort(candidates.begin(), candidates.end(),
                  [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                      if (a.second - a.first != b.second - b.first)
                          return a.second - a.first < b.second - b.first;
                      return a.first < b.first;
                  });
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());

        // Try the routes shortest-first; a carve is kept only when the
        // stripped interior re-validates and is separated from the cycle.
        auto end_owner = [&](int posi) {
            for (VertexId v : s_new)
                if (g.has_edge(v, aa.l.verts[static_cast<std::size_t>(posi)])) return true;
            return false;
        };
        std::optional<OrderedAsterism> carved;
        for (const auto& [qp, qq] : candidates) {
            // Strip two vertices at each end of the route interior (the end
            // and its route neighbor), then trim ends still owned by the
            // carved S-side.
            int lo = qp + 2, hi = qq - 2;
            while (lo <= hi && end_owner(lo)) ++lo;
            while (lo <= hi && end_owner(hi)) --hi;
            if (hi - lo < 2) continue;
            OrderedAsterism attempt;
            attempt.s = s_new;
            attempt.l.verts.assign(aa.l.verts.begin() + lo, aa.l.verts.begin() + hi + 1);
            if (check_asterism(g, attempt) || !is_d_ample(g, attempt, 2) ||
                !is_interrupted(g, attempt))
                continue;
            bool separated = true;
            for (VertexId v : attempt.all_vertices()) {
                for (VertexId w : h.verts)
                    if (v == w || g.has_edge(v, w)) {
                        separated = false;
                        break;
                    }
                if (!separated) break;
            }
            if (!separated) continue;
            trace.note("carve", "sub-asterism on " + ids_to_string(s_new) +
                                    " inside route [" + std::to_string(qp) + "," +
                                    std::to_string(qq) + "]");
            carved = std::move(attempt);
            break;
        }
        if (!carved) {
            trace.note("insufficient", "no route admits a valid sub-asterism");
            return carve_failure();
        }
        auto sub = run(*carved, c - 1, s);
        if (std::holds_alternative<OccultationOutcome>(sub)) return sub;
        if (std::holds_alternative<InsufficientOutcome>(sub)) return sub;
        auto packing = std::get<CyclePackingOutcome>(sub);
        packing.cycles.insert(packing.cycles.begin(), h);
        return packing;
    }

    static InsufficientOutcome carve_failure() {
        return InsufficientOutcome{"surgery produced no valid sub-asterism"};
    }
};

}  // namespace

ExtractionOutcome interrupted_to_occultation(const Graph& g, const OrderedAsterism& a,
                                             int c, int o, int s) {
    if (c < 1) throw PreconditionError("c-positive", "c must be >= 1");
    if (o < 1) throw PreconditionError("o-positive", "o must be >= 1");
    if (s < 0) throw PreconditionError("s-nonnegative", "s must be >= 0");
    if (auto bad = check_asterism(g, a)) throw PreconditionError("asterism", to_string(*bad));
    if (!is_d_ample(g, a, 2)) throw PreconditionError("ampleness", "a is not 2-ample");
    if (!is_interrupted(g, a)) throw PreconditionError("interruption", "a is not interrupted");
    const long long need = ipow(s, c);
    if (a.order() < need)
        throw PreconditionError("size", "need |S| >= s^c = " + std::to_string(need));

    ExtractionOutcome out;
    OccRec rec{g, o, out.trace};
    auto res = rec.run(prefix(a, static_cast<int>(need)), c, s);
    if (std::holds_alternative<OccultationOutcome>(res)) {
        const auto& occ = std::get<OccultationOutcome>(res);
        if (!is_full_occultation(g, occ.asterism, o))
            throw std::logic_error("outcome occultation failed re-validation");
        out.value = occ;
    } else if (std::holds_alternative<CyclePackingOutcome>(res)) {
        const auto& packing = std::get<CyclePackingOutcome>(res);
        if (auto bad = check_cycle_packing(g, packing.cycles, c, o))
            throw std::logic_error("outcome cycle packing failed re-validation: " +
                                   to_string(*bad));
        out.value = packing;
    } else {
        out.value = std::get<InsufficientOutcome>(res);
    }
    return out;
}

// --- Matching or cover ------------------------------------------------------------

MatchingOrCover matching_or_cover(const Graph& t, int c) {
    if (c < 1) throw PreconditionError("c-positive", "c must be >= 1");
    MatchingOrCover out;
    std::set<VertexId> used;
    std::vector<Edge> matched;
    for (const Edge& e : t.edge_list())
        if (!used.count(e.first) && !used.count(e.second)) {
            matched.push_back(e);
            used.insert(e.first);
            used.insert(e.second);
        }
    if (static_cast<int>(matched.size()) >= c) {
        out.is_matching = true;
        out.matching.assign(matched.begin(), matched.begin() + c);
        return out;
    }
    out.is_matching = false;
    for (const Edge& e : matched) {
        out.cover.push_back(e.first);
        out.cover.push_back(e.second);
    }
    std::sort(out.cover.begin(), out.cover.end());
    return out;
}

// --- Gemini to cycles --------------------------------------------------------------

namespace {

// Oriented block route between consecutive syzygy vertices a (= pi(2j-1)) and
// b (= pi(2j)): a, then the L-segment from a's outermost neighbor to b's
// nearest neighbor, then b.
PathWitness block_route(const Graph& g, const OrderedAsterism& ast, VertexId a, VertexId b) {
    auto pa = positions_on(g, ast.l, a);
    auto pb = positions_on(g, ast.l, b);
    if (pa.empty() || pb.empty())
        throw PreconditionError("syzygy-blocks", "a syzygy vertex has no path neighbors");
    PathWitness out;
    out.verts.push_back(a);
    if (pa.back() < pb.front()) {
        for (int i = pa.back(); i <= pb.front(); ++i)
            out.verts.push_back(ast.l.verts[static_cast<std::size_t>(i)]);
    } else if (pb.back() < pa.front()) {
        for (int i = pa.front(); i >= pb.back(); --i)
            out.verts.push_back(ast.l.verts[static_cast<std::size_t>(i)]);
    } else {
        throw PreconditionError("syzygy-blocks", "neighbor blocks interleave");
    }
    out.verts.push_back(b);
    return out;
}

// Appends path (oriented from `from`) to verts, skipping the shared first
// vertex. Zero-length paths contribute nothing.
void append_from(std::vector<VertexId>& verts, const PathWitness& path, VertexId from) {
    std::vector<VertexId> seq = path.verts;
    if (seq.back() == from && seq.front() != from) std::reverse(seq.begin(), seq.end());
    if (seq.front() != from)
        throw PreconditionError("orientation", "path does not start at the expected vertex");
    for (std::size_t i = 1; i < seq.size(); ++i) verts.push_back(seq[i]);
}

}  // namespace

std::vector<CycleWitness> gemini_to_cycles(const Graph& g, const Gemini& gem, int c, int o) {
    if (c < 1) throw PreconditionError("c-positive", "c must be >= 1");
    if (o < 1) throw PreconditionError("o-positive", "o must be >= 1");
    if (auto bad = validate_gemini(g, gem)) throw PreconditionError("gemini", to_string(*bad));
    if (gem.first.order() < 2 * c)
        throw PreconditionError("arity", "need 2c-syzygies, have order " +
                                             std::to_string(gem.first.order()));
    for (const OrderedAsterism* ast : {&gem.first, &gem.second}) {
        if (!is_syzygy(g, *ast))
            throw PreconditionError("syzygy", "gemini side is not a syzygy");
        if (!is_d_ample(g, *ast, 2 * o))
            throw PreconditionError("ampleness", "gemini side is not 2o-ample");
    }
    std::vector<CycleWitness> cycles;
    for (int j = 1; j <= c; ++j) {
        VertexId x1 = gem.first.s[static_cast<std::size_t>(2 * j - 2)];
        VertexId x2 = gem.first.s[static_cast<std::size_t>(2 * j - 1)];
        VertexId y1 = gem.second.s[static_cast<std::size_t>(2 * j - 2)];
        VertexId y2 = gem.second.s[static_cast<std::size_t>(2 * j - 1)];
        PathWitness p1 = block_route(g, gem.first, x1, x2);
        PathWitness p2 = block_route(g, gem.second, y2, y1);
        const PathWitness& q_even = gem.connectors.paths[static_cast<std::size_t>(2 * j - 1)];
        const PathWitness& q_odd = gem.connectors.paths[static_cast<std::size_t>(2 * j - 2)];

        std::vector<VertexId> verts{x1};
        append_from(verts, p1, x1);       // .. x2
        append_from(verts, q_even, x2);   // .. y2
        append_from(verts, p2, y2);       // .. y1
        append_from(verts, q_odd, y1);    // .. x1 again
        if (verts.back() != x1) throw std::logic_error("gemini cycle did not close");
        verts.pop_back();

        CycleWitness h = CycleWitness::canonical(std::move(verts));
        if (auto bad = check_cycle(g, h))
            throw std::logic_error("gemini cycle is not induced: " + to_string(*bad));
        if (h.length() < 4 * o + 4)
            throw std::logic_error("gemini cycle shorter than 4o+4");
        cycles.push_back(std::move(h));
    }
    if (auto bad = check_cycle_packing(g, cycles, c, o))
        throw std::logic_error("gemini cycles are not a packing: " + to_string(*bad));
    return cycles;
}

// --- Transition cycles ---------------------------------------------------------------

std::vector<CycleWitness> build_transition_cycles(const Graph& g, const OrderedAsterism& a1,
                                                  const OrderedAsterism& a2,
                                                  const std::vector<Edge>& matching, int o) {
    if (o < 1) throw PreconditionError("o-positive", "o must be >= 1");
    for (const OrderedAsterism* ast : {&a1, &a2}) {
        if (auto bad = check_asterism(g, *ast))
            throw PreconditionError("asterism", to_string(*bad));
        if (!is_d_ample(g, *ast, o + 2))
            throw PreconditionError("ampleness", "asterism is not (o+2)-ample");
    }
    if (std::set<VertexId>(a1.s.begin(), a1.s.end()) !=
        std::set<VertexId>(a2.s.begin(), a2.s.end()))
        throw PreconditionError("same-s", "the two asterisms must share S");
    for (VertexId u : a1.l.verts) {
        if (a2.l.contains(u))
            throw PreconditionError("disjoint-paths", "the two paths share a vertex");
        for (VertexId v : a2.l.verts)
            if (g.has_edge(u, v))
                throw PreconditionError("anticomplete-paths", "the two paths see each other");
    }
    std::set<VertexId> used;
    for (const Edge& e : matching) {
        if (!used.insert(e.first).second || !used.insert(e.second).second)
            throw PreconditionError("matching", "edges are not pairwise disjoint");
    }
    TransitionGraph t1 = transition_graph(g, a1);
    TransitionGraph t2 = transition_graph(g, a2);
    std::vector<CycleWitness> cycles;
    for (const Edge& e0 : matching) {
        Edge e = e0.first < e0.second ? e0 : Edge{e0.second, e0.first};
        auto i1 = t1.certificates.find(e);
        auto i2 = t2.certificates.find(e);
        if (i1 == t1.certificates.end() || i2 == t2.certificates.end())
            throw PreconditionError("certification",
                                    "matching edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) +
                                        ") is not certified in both transition graphs");
        std::vector<VertexId> verts{e.first};
        append_from(verts, i1->second.path, e.first);   // .. e.second through L1
        append_from(verts, i2->second.path, e.second);  // .. e.first through L2
        if (verts.back() != e.first) throw std::logic_error("transition cycle did not close");
        verts.pop_back();
        CycleWitness h = CycleWitness::canonical(std::move(verts));
        if (auto bad = check_cycle(g, h))
            throw std::logic_error("transition cycle is not induced: " + to_string(*bad));
        if (h.length() < 2 * o + 8)
            throw std::logic_error("transition cycle shorter than 2o+8");
        cycles.push_back(std::move(h));
    }
    if (auto bad =
            check_cycle_packing(g, cycles, static_cast<int>(matching.size()), o))
        throw std::logic_error("transition cycles are not a packing: " + to_string(*bad));
    return cycles;
}

}  // namespace occult
