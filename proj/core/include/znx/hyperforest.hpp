#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace znx {

using Triple = std::array<int, 3>;

/// Checks the hyperforest count condition on a 3-uniform multi-hypergraph:
/// every nonempty set F of edges touches at least |F| + 1 vertices.
/// Returns a violating edge set (|F| >= |V(F)|) or nullopt.
///
/// For each vertex x, the edges must be matchable into distinct vertices
/// other than x; a failed augmentation yields the violating set through the
/// alternating-path closure.
std::optional<std::vector<std::size_t>> hyperforest_violation(std::size_t vertex_count,
                                                              const std::vector<Triple>& edges);

/// Sorted union of the vertices of the chosen edges.
std::vector<int> touched_vertices(const std::vector<Triple>& edges, const std::vector<std::size_t>& chosen);

}  // namespace znx
