#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "occult/asterism.hpp"
#include "occult/detectors.hpp"
#include "occult/graph.hpp"

namespace occult {

struct GeneratedAsterism {
    Graph graph;
    OrderedAsterism asterism;
};

struct GeneratedGemini {
    Graph graph;
    Gemini gemini;
};

struct GeneratedConstellation {
    Graph graph;
    Constellation constellation;
};

/// The t-by-t wall: t horizontal vertex-paths joined by vertical edges at
/// alternating columns, forming t-1 rows of t hexagonal bricks; maximum
/// degree 3 and treewidth exactly t. Built from the t x (2t+2) grid by
/// keeping alternating verticals and discarding the two degree-1 corners,
/// so |V| = t(2t+2) - 2 for t >= 2; wall(1) is a bare 4-vertex path.
Graph wall(int t);

Graph complete(int t);
Graph complete_bipartite(int a, int b);

/// The canonical s-occultation: L = v_0..v_{2^s} (ids 0..2^s) and
/// x_i = 2^s + i (i = 1..s), with x_i adjacent to v_k exactly when
/// k is an odd multiple of 2^{s-i}. pi(i) = x_i.
GeneratedAsterism occultation(int s);

struct FullOccultationParams {
    int s = 1;
    int o = 1;
    /// Extra neighbors: (i, piece index of the prefix a^{i-1}) -> count.
    std::map<std::pair<int, int>, int> extra;
    /// Length for every L-edge of the canonical occultation (>= 1 each);
    /// either one entry per edge or a single entry applied uniformly.
    std::vector<int> subdivision = {1};
    /// Extra edges are rejected when they would put two neighbors of one
    /// S-vertex closer than this along L. Keeping min_gap > g preserves
    /// prefix girth > g+2.
    int min_gap = 2;
    std::uint64_t seed = 0;
};

/// A full (s,o)-occultation built from the canonical occultation by
/// subdividing L and adding seed-chosen extra S-to-L edges. Every extra is
/// validated: placements breaking ampleness, interruption, o-invadedness or
/// the min_gap floor are rejected. Throws PreconditionError when a requested
/// extra cannot be placed at all.
GeneratedAsterism full_occultation(const FullOccultationParams& params);

/// A d-ample interrupted ordered s-asterism: the canonical occultation with
/// every L-edge subdivided into d+1 or d+2 edges (seed-chosen), which scales
/// all routes to length >= d+3 and preserves interruption and invadedness.
GeneratedAsterism ample_interrupted_asterism(int s, int d, std::uint64_t seed);

/// An a-syzygy: consecutive neighbor blocks along L separated by the given
/// gaps (cycled when shorter than a-1). Block sizes are seed-chosen in {1,2}.
GeneratedAsterism syzygy(int a, const std::vector<int>& gaps, std::uint64_t seed);

/// A g-gemini whose two asterisms are 2o-ample g-syzygies. Connector lengths
/// are seed-chosen from {0, 2, 3}; length 0 merges the two S-endpoints.
GeneratedGemini gemini(int g, int o, std::uint64_t seed);

/// A plain (s,l)-constellation with the given path lengths (cycled).
GeneratedConstellation constellation(int s, int l, const std::vector<int>& lengths,
                                     std::uint64_t seed);

/// A fixed 5-asterism on a 25-vertex path with a rich route/piece/transition
/// structure: 15 pieces (13 internal), open and closed showcase pieces, and a
/// transition graph with exactly six edges. Ships as the reference fixture
/// for the route, piece and transition-graph tests.
GeneratedAsterism sample_asterism();

struct SampleAsterismWithCherry {
    Graph graph;
    OrderedAsterism asterism;
    VertexId cherry;
};

/// sample_asterism() plus one extra vertex that is a cherry on top of it.
SampleAsterismWithCherry sample_asterism_with_cherry();

}  // namespace occult
