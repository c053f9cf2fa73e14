#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "occult/graph.hpp"

namespace occult {

/// An ordered s-asterism (S, L): a stable set S listed in pi-order together
/// with an induced path L disjoint from S, where every S-vertex has a
/// neighbor in the interior of L and none has a neighbor at an end of L.
struct OrderedAsterism {
    std::vector<VertexId> s;  // s[i-1] = pi(i)
    PathWitness l;

    int order() const { return static_cast<int>(s.size()); }
    std::vector<VertexId> all_vertices() const;
    bool operator==(const OrderedAsterism&) const = default;
};

/// A route: induced path with two distinct S-ends and nonempty interior
/// inside L. Route interiors are exactly contiguous L-segments.
struct Route {
    PathWitness path;  // first and last are S-vertices
    bool minimal = false;

    VertexId end_a() const { return path.verts.front(); }
    VertexId end_b() const { return path.verts.back(); }
    std::vector<VertexId> interior() const { return path.interior(); }
};

/// A piece: nonzero-length subpath of L whose non-L-end endpoints have
/// S-neighbors and whose interior has none.
struct Piece {
    PathWitness path;
    bool internal = false;  // contained in L*
    bool open = false;      // ends have no common S-neighbor
};

struct TransitionGraph {
    Graph graph;  // vertex set = S
    std::map<Edge, Route> certificates;
};

// --- Validation ---------------------------------------------------------------

/// Checks the asterism clauses in definition order: stability of S,
/// L-inducedness and disjointness, interior neighbors, end anticompleteness.
CheckResult check_asterism(const Graph& g, const OrderedAsterism& a);

/// Spec-facing form: witness on success, first violated clause otherwise.
std::variant<OrderedAsterism, Violation> validate_asterism(const Graph& g,
                                                           const std::vector<VertexId>& s,
                                                           const PathWitness& l);

// --- Routes and pieces ---------------------------------------------------------

/// All routes, each flagged minimal or not, ordered by (end pair, interior
/// segment). The input must be a valid asterism.
std::vector<Route> routes(const Graph& g, const OrderedAsterism& a);
std::vector<Route> minimal_routes(const Graph& g, const OrderedAsterism& a);

/// All pieces in left-to-right L-order. Exactly two external pieces when
/// S is nonempty, one (all of L) when S is empty.
std::vector<Piece> pieces(const Graph& g, const OrderedAsterism& a);

// --- Predicates ----------------------------------------------------------------

/// Every route has length >= d+2. Every asterism is 0-ample; 1-ample = ample.
bool is_d_ample(const Graph& g, const OrderedAsterism& a, int d);
bool is_ample(const Graph& g, const OrderedAsterism& a);

/// Every L-vertex has at most d neighbors in S.
bool is_d_meager(const Graph& g, const OrderedAsterism& a, int d);

/// For every i, pi(i) has a neighbor in each open piece of the prefix a^{i-1}.
bool is_interrupted(const Graph& g, const OrderedAsterism& a);

/// For every i, pi(i) has a neighbor in each closed a^{i-1}-piece of length >= o.
bool is_o_invaded(const Graph& g, const OrderedAsterism& a, int o);

/// Ample and interrupted and o-invaded.
bool is_full_occultation(const Graph& g, const OrderedAsterism& a, int o);

/// Neighbor blocks of pi(1)..pi(s) strictly separated along L from one end.
bool is_syzygy(const Graph& g, const OrderedAsterism& a);

// --- Restriction ----------------------------------------------------------------

/// a|X: keep only the S-vertices in X, pi-order inherited. X must be a subset
/// of S.
OrderedAsterism restrict_to(const OrderedAsterism& a, const std::vector<VertexId>& x);

/// a^i = restriction to the first i vertices in pi-order.
OrderedAsterism prefix(const OrderedAsterism& a, int i);

// --- Transition graph -------------------------------------------------------------

/// Edge xy iff some route from x to y has its interior anticomplete to
/// S \ {x,y}. Certificates are chosen minimal (shortest interior, leftmost),
/// which makes matched certificate routes pairwise disjoint downstream.
TransitionGraph transition_graph(const Graph& g, const OrderedAsterism& a);

// --- Cherries and candidates -------------------------------------------------------

/// (CH1) x anticomplete to the ends of L, (CH2) x has a neighbor in every
/// open piece. x must not belong to V(a).
bool is_cherry(const Graph& g, const OrderedAsterism& a, VertexId x);

/// cher(a', x) = (S + x, L) with x last in pi-order. Requires is_cherry and
/// validates the result (in particular S + x must still be stable).
OrderedAsterism cher(const Graph& g, const OrderedAsterism& a_prime, VertexId x);

/// (CA): every proper extension of L_{a'} inside L_outer that is itself an
/// interrupted ordered asterism on the same S and order gains an L-neighbor
/// of some pi(i) with i <= s'-1. Checked by scanning single-sided extensions
/// of increasing length on both ends; a two-sided violation always yields a
/// single-sided one.
bool is_candidate(const Graph& g, const OrderedAsterism& a_outer, VertexId x,
                  const OrderedAsterism& a_prime);

/// Smallest single-sided extension of a' inside l_outer that stays an
/// interrupted ordered asterism while gaining no neighbor of pi(1..gain_limit);
/// empty when none exists. Left extensions are tried before right ones.
std::optional<OrderedAsterism> interrupted_no_gain_extension(const Graph& g,
                                                             const PathWitness& l_outer,
                                                             const OrderedAsterism& a_prime,
                                                             int gain_limit);

}  // namespace occult
