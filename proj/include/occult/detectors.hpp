#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "occult/asterism.hpp"
#include "occult/graph.hpp"

namespace occult {

// --- Multi-path structures ------------------------------------------------------

/// l pairwise vertex-disjoint induced paths; plain when also pairwise
/// anticomplete.
struct Polypath {
    std::vector<PathWitness> paths;
    std::size_t size() const { return paths.size(); }
    std::vector<VertexId> all_vertices() const;
    std::vector<VertexId> all_ends() const;
};

/// S-side plus polypath; S and the paths may intersect.
struct Bundle {
    std::vector<VertexId> s;
    Polypath paths;
    bool plain = false;
};

/// Stable S disjoint from the paths, every S-vertex with a neighbor in every
/// path; plain when the paths are pairwise anticomplete.
struct Constellation {
    std::vector<VertexId> s;
    Polypath paths;
    bool plain = false;
};

/// Two ordered asterisms joined by a plain polypath of connectors (G1)-(G3).
struct Gemini {
    OrderedAsterism first;
    OrderedAsterism second;
    Polypath connectors;
};

/// Single-vertex side plus an r-polypath anchored in X per (P1)-(P3).
struct Patch {
    VertexId center = 0;
    Polypath paths;
};

/// r-polypath whose intersection with X is exactly its end set, (M1)-(M2).
struct Match {
    Polypath paths;
};

CheckResult check_polypath(const Graph& g, const Polypath& p, bool require_plain);

// --- Substructure detectors --------------------------------------------------------

/// Vertices of an induced K_t, if any; deterministic (lexicographically
/// first in the ascending-vertex search order).
std::optional<std::vector<VertexId>> contains_clique(const Graph& g, int t);

/// Sides of an induced K_{t,t}, if any: two disjoint stable t-sets, complete
/// to each other. Exhaustive over stable t-subsets with pruning.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> contains_biclique(
    const Graph& g, int t);

// --- Perforation ----------------------------------------------------------------------

struct BudgetReport {
    std::uint64_t budget = 0;
    std::uint64_t enumeration_steps = 0;
    std::uint64_t cycles_found = 0;
    std::uint64_t search_nodes = 0;
    bool enumeration_complete = false;
};

struct PerforationVerdict {
    enum class Kind { Perforated, NotPerforated, Indeterminate };
    Kind kind = Kind::Indeterminate;
    /// For NotPerforated: c pairwise disjoint, pairwise anticomplete induced
    /// cycles, each of length >= o+2.
    std::vector<CycleWitness> witness;
    BudgetReport budget;
};

/// Decides whether G is (c,o)-perforated: no c pairwise disjoint and
/// anticomplete induced cycles, each of length >= o+2. Cycle enumeration and
/// the packing search are both budget-bounded; a packing found early yields
/// NotPerforated even when enumeration is incomplete, while Perforated
/// requires complete enumeration and a completed search.
PerforationVerdict is_perforated(const Graph& g, int c, int o, std::uint64_t budget);

/// Independent checker for NotPerforated witnesses: pairwise disjoint,
/// pairwise anticomplete, each an induced cycle of length >= o+2, and at
/// least c of them.
CheckResult check_cycle_packing(const Graph& g, const std::vector<CycleWitness>& cycles,
                                int c, int o);

// --- Strong blocks and stability ---------------------------------------------------------

/// Witness for a strong k-block: for every 2-subset of B, at least k distinct
/// pairwise internally disjoint paths, with path systems of different pairs
/// meeting only in shared ends.
struct StrongBlockWitness {
    std::vector<VertexId> b;
    std::map<Edge, std::vector<PathWitness>> paths;  // key: normalized pair of B
};

CheckResult verify_strong_block(const Graph& g, int k, const StrongBlockWitness& w);

/// No path of length <= d between distinct members of S (BFS distances > d).
bool is_d_stable(const Graph& g, const std::vector<VertexId>& s, int d);

// --- Structure validators ------------------------------------------------------------------

CheckResult validate_constellation(const Graph& g, const Constellation& c,
                                   bool require_plain);
CheckResult validate_bundle(const Graph& g, const Bundle& b, bool require_plain);
CheckResult validate_gemini(const Graph& g, const Gemini& gem);
CheckResult validate_patch(const Graph& g, const std::vector<VertexId>& x, const Patch& p,
                           int d, bool require_plain = false);
CheckResult validate_match(const Graph& g, const std::vector<VertexId>& x, const Match& m,
                           int d, bool require_plain = false);

}  // namespace occult
