#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "occult/graph.hpp"

namespace occult {

/// Tree plus bags. Width is max bag size - 1, clamped at 0 so the empty
/// graph's single empty bag reports width 0.
struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;
    std::vector<std::pair<int, int>> tree_edges;  // indices into bags

    int width() const;
};

/// Checks the three decomposition axioms in order: bag contents, tree
/// structure, vertex coverage, edge coverage, connectedness of every
/// vertex's bag set. Returns the width on success.
std::variant<int, Violation> verify_decomposition(const Graph& g,
                                                  const TreeDecomposition& td);

struct TreewidthResult {
    std::optional<int> width;  // empty: indeterminate (node limit exhausted)
    int lower_bound = 0;
    int upper_bound = 0;
    TreeDecomposition decomposition;  // width == upper_bound
    std::uint64_t nodes_used = 0;
};

/// Exact treewidth via safe reductions (simplicial elimination, series
/// contraction) followed by memoized branch-and-bound over elimination
/// orders. node_limit caps search expansions; on exhaustion the result is
/// indeterminate and carries the proven bounds. Always emits the best known
/// decomposition.
TreewidthResult exact_treewidth(const Graph& g, std::uint64_t node_limit = 20'000'000);

/// Sound lower bound: combines the degree-3 reduction argument (a graph that
/// survives simplicial and series reductions has a K_4 subdivision, so
/// treewidth >= 3) with a contraction-degeneracy bound. Never exceeds the
/// exact value.
int treewidth_lower_bound(const Graph& g);

}  // namespace occult
