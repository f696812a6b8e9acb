#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ridematch {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

/// Maximum-weight matching in a general undirected graph (Edmonds' blossom
/// algorithm with dual variables, O(n^3)). Vertices are 0..vertex_count-1;
/// self-loops are not allowed. With `max_cardinality` the result is the
/// heaviest among the maximum-cardinality matchings.
///
/// Returns mate[v], the partner of v or -1.
std::vector<int> max_weight_matching(int vertex_count,
                                     std::span<const WeightedEdge> edges,
                                     bool max_cardinality);

}  // namespace ridematch
