#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

/// Pairwise vertex-disjoint edges, sorted ascending.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  VertexSet covered(std::size_t universe) const;
  /// Disjoint edges, all present in g.
  bool valid_in(const Graph& g) const;

  bool operator==(const Matching&) const = default;
};

/// Maximum-cardinality matching via Edmonds' blossom algorithm.
///
/// Greedy initialisation and augmenting-path roots both scan vertices in
/// ascending order, so the result is a pure function of the graph.
Matching maximum_matching(const Graph& g);

/// Some matching with exactly k edges, or nullopt when the matching number is below k.
/// Augmentation stops as soon as k edges are reached.
std::optional<Matching> matching_of_size(const Graph& g, std::size_t k);

/// Exhaustive oracle for order <= 16. Throws OrderTooLargeForOracle beyond that.
Matching brute_force_maximum_matching(const Graph& g);

}  // namespace hajos
