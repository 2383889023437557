#pragma once

#include <cstddef>
#include <span>

#include "hajos/graph.hpp"

namespace hajos {

/// Complete multipartite graph; parts occupy consecutive index ranges in the given order.
Graph complete_multipartite(std::span<const std::size_t> part_sizes);

/// Burr's lower-bound graph: (chi - 1) parts of size target_order - 1, then one part of size s - 1.
/// Order is (chi - 1)(target_order - 1) + s - 1.
Graph burr_construction(std::size_t chi, std::size_t s, std::size_t target_order);

/// K_{n,n,1}: avoids a red Hajós graph and a blue K_{1,n}; n even, n >= 2.
Graph star_even_lower(std::size_t n);

/// Join of two copies of an l-edge matching, l = (n + 1) / 2; n odd, n >= 3.
/// Vertices 0..2l-1 form the first matching (pairs 2i, 2i+1), the rest the second.
Graph star_odd_lower(std::size_t n);

/// K_{2n,2n,1}: avoids a red Hajós graph and a blue fan F_n.
Graph fan_lower(std::size_t n);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

struct ChromaticInfo {
  std::size_t chi = 0;
  /// Smallest colour-class size, minimised over all proper chi-colourings.
  std::size_t surplus = 0;
  bool operator==(const ChromaticInfo&) const = default;
};

/// Exact chromatic number and surplus; order must be in [1, 12].
ChromaticInfo chromatic_info(const Graph& g);

/// (chi - 1)(m - 1) + s, the general Ramsey lower bound for a connected target on m vertices.
constexpr std::size_t burr_bound(std::size_t chi, std::size_t s, std::size_t m) { return (chi - 1) * (m - 1) + s; }

/// The Hajós graph on vertices 0..5: triangle 0,1,2 with apexes 3 (on 01), 4 (on 02), 5 (on 12).
Graph hajos_graph();

}  // namespace hajos
