#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "occult/asterism.hpp"
#include "occult/detectors.hpp"
#include "occult/graph.hpp"

namespace occult {

// --- Interval split -------------------------------------------------------------

/// Closed integer intervals, one per index.
struct IntervalFamily {
    std::vector<std::pair<int, int>> spans;  // left <= right
};

struct IntervalSplit {
    enum class Kind { StableSet, Clique, Insufficient };
    Kind kind = Kind::Insufficient;
    std::vector<int> ids;           // interval indices
    std::optional<int> point;       // common point for Clique
};

/// Either a pairwise-disjoint intervals (in left-to-right order) or b
/// intervals sharing a common point. Guaranteed to succeed when |F| >= a*b;
/// Insufficient is only possible below that bound.
IntervalSplit interval_split(const IntervalFamily& f, int a, int b);

// --- Outcomes and traces ------------------------------------------------------------

struct TraceEvent {
    std::string step;
    std::string detail;
};

struct Trace {
    std::vector<TraceEvent> events;
    void note(std::string step, std::string detail) {
        events.push_back({std::move(step), std::move(detail)});
    }
};

struct SyzygyOutcome {
    OrderedAsterism asterism;
};
struct ConstellationOutcome {
    Constellation constellation;
};
struct OccultationOutcome {
    OrderedAsterism asterism;
    int o = 1;
};
struct CyclePackingOutcome {
    std::vector<CycleWitness> cycles;
};
struct InsufficientOutcome {
    std::string reason;
};

struct ExtractionOutcome {
    std::variant<SyzygyOutcome, ConstellationOutcome, OccultationOutcome,
                 CyclePackingOutcome, InsufficientOutcome>
        value;
    Trace trace;

    bool insufficient() const {
        return std::holds_alternative<InsufficientOutcome>(value);
    }
};

// --- Extraction procedures ------------------------------------------------------------

/// Recursive syzygy-or-constellation dichotomy on a d-meager asterism.
/// Base l = 1 returns (S, {L*}); otherwise the interval family of neighbor
/// spans is split with thresholds a and a^{l-2}(s+d(l-2))+d. The stable side
/// yields an a-syzygy ordered left to right; the clique side drops the at
/// most d S-neighbors of the common vertex and recurses on the left half,
/// appending the right half's interior to the returned constellation.
/// Guaranteed to succeed when |S| >= a^{l-1}(s+d(l-1)).
ExtractionOutcome asterism_to_syzygy_or_constellation(const Graph& g,
                                                      const OrderedAsterism& a,
                                                      int target_a, int target_l,
                                                      int target_s, int d);

/// Adds x as a cherry on top of the candidate a', inside the 2-ample outer
/// asterism. Validates every precondition (2-ampleness, candidacy, cherry),
/// returns cher(a', x) and asserts the result is 2-ample and interrupted.
OrderedAsterism cherry_extend(const Graph& g, const OrderedAsterism& a_outer,
                              const OrderedAsterism& a_prime, VertexId x);

/// Extends the prior full (s-1,o)-occultation to a maximal path, then adds
/// pi(r) as a cherry, yielding a full (s,o)-occultation inside a. Requires a
/// 2-ample and interrupted, r > r' >= s-1 >= 0, and pi(r) adjacent into every
/// closed a^{r'}-piece of length >= o.
OrderedAsterism occultation_top(const Graph& g, const OrderedAsterism& a, int r,
                                int r_prime, int o, const OrderedAsterism& prior);

/// Total dichotomy: from a 2-ample interrupted ordered asterism with at least
/// s^c vertices, produce either a full (s,o)-occultation (S and L inside the
/// input) or c pairwise disjoint anticomplete induced cycles of length
/// >= o+2. The recursion follows the missed-closed-piece surgery: the first
/// closed prefix piece avoided by the top vertex is turned into a cycle, a
/// sub-asterism is carved from a route next to it, and the procedure recurses
/// with c-1.
ExtractionOutcome interrupted_to_occultation(const Graph& g, const OrderedAsterism& a,
                                             int c, int o, int s);

struct MatchingOrCover {
    bool is_matching = false;
    std::vector<Edge> matching;     // c disjoint edges when is_matching
    std::vector<VertexId> cover;    // vertex cover of size < 2c otherwise
};

/// Greedy maximal matching; if it reaches c edges return c of them, else both
/// endpoints of every matched edge form a vertex cover of size < 2c.
MatchingOrCover matching_or_cover(const Graph& t, int c);

/// The explicit cycles of a gemini whose asterisms are 2o-ample 2c-syzygies:
/// H_j joins the block-pair routes of both sides through connectors 2j-1 and
/// 2j, giving c pairwise disjoint anticomplete induced cycles of length
/// >= 4o+4.
std::vector<CycleWitness> gemini_to_cycles(const Graph& g, const Gemini& gem, int c,
                                           int o);

/// Glues certified transition routes over two disjoint anticomplete paths
/// into c cycles of length >= 2o+8. Both asterisms must be (o+2)-ample with
/// the same S, and every matching edge must be certified in both transition
/// graphs.
std::vector<CycleWitness> build_transition_cycles(const Graph& g,
                                                  const OrderedAsterism& a1,
                                                  const OrderedAsterism& a2,
                                                  const std::vector<Edge>& matching, int o);

}  // namespace occult
