#include "hajos/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "hajos/error.hpp"

namespace hajos {

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  const std::size_t order = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
  if (order > kMaxOrder) throw OrderTooLarge(std::to_string(order) + " > " + std::to_string(kMaxOrder));
  std::vector<std::size_t> part_of(order);
  std::size_t v = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (std::size_t i = 0; i < part_sizes[p]; ++i) part_of[v++] = p;
  GraphBuilder b(order);
  for (Vertex x = 0; x < order; ++x)
    for (Vertex y = x + 1; y < order; ++y)
      if (part_of[x] != part_of[y]) b.add_edge(x, y);
  return std::move(b).build();
}

Graph burr_construction(std::size_t chi, std::size_t s, std::size_t target_order) {
  if (chi < 2 || s < 1 || target_order < s)
    throw InvalidParameters("need chi >= 2, s >= 1, target_order >= s (got chi=" + std::to_string(chi) +
                            ", s=" + std::to_string(s) + ", target_order=" + std::to_string(target_order) + ")");
  const std::size_t order = (chi - 1) * (target_order - 1) + (s - 1);
  if (order > kMaxOrder) throw OrderTooLarge(std::to_string(order) + " > " + std::to_string(kMaxOrder));
  std::vector<std::size_t> parts(chi - 1, target_order - 1);
  parts.push_back(s - 1);
  return complete_multipartite(parts);
}

Graph star_even_lower(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw ParityError("star_even_lower needs even n >= 2, got " + std::to_string(n));
  return burr_construction(3, 2, n + 1);
}

Graph star_odd_lower(std::size_t n) {
  if (n < 3 || n % 2 != 1) throw ParityError("star_odd_lower needs odd n >= 3, got " + std::to_string(n));
  const std::size_t ell = (n + 1) / 2;
  if (4 * ell > kMaxOrder) throw OrderTooLarge(std::to_string(4 * ell) + " > " + std::to_string(kMaxOrder));
  GraphBuilder matching(2 * ell);
  for (Vertex i = 0; i < 2 * ell; i += 2) matching.add_edge(i, i + 1);
  const Graph side = std::move(matching).build();
  return join(side, side);
}

Graph fan_lower(std::size_t n) {
  if (n < 1) throw InvalidParameters("fan_lower needs n >= 1");
  return burr_construction(3, 2, 2 * n + 1);
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t order = g.order() + h.order();
  if (order > kMaxOrder) throw OrderTooLarge(std::to_string(order) + " > " + std::to_string(kMaxOrder));
  GraphBuilder b(order);
  const auto shift = static_cast<Vertex>(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = 0; y < h.order(); ++y) b.add_edge(x, y + shift);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t order = g.order() + h.order();
  if (order > kMaxOrder) throw OrderTooLarge(std::to_string(order) + " > " + std::to_string(kMaxOrder));
  GraphBuilder b(order);
  const auto shift = static_cast<Vertex>(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  return std::move(b).build();
}

namespace {

// Enumerates proper colourings with at most k colours, colours introduced in
// vertex order so each partition is visited once.
class Colorer {
 public:
  Colorer(const Graph& g, std::size_t k) : g_(g), k_(k), color_(g.order(), 0), class_size_(k, 0) {}

  bool any() {
    stop_at_first_ = true;
    found_ = false;
    extend(0, 0);
    return found_;
  }

  /// Minimum over proper colourings using exactly k colours of the smallest class.
  std::size_t min_smallest_class() {
    stop_at_first_ = false;
    best_ = std::numeric_limits<std::size_t>::max();
    extend(0, 0);
    return best_;
  }

 private:
  void extend(Vertex v, std::size_t used) {
    if (stop_at_first_ && found_) return;
    if (v == g_.order()) {
      if (used != k_) return;
      found_ = true;
      best_ = std::min(best_, *std::min_element(class_size_.begin(), class_size_.end()));
      return;
    }
    // Not enough vertices left to open the remaining colours.
    if (g_.order() - v < k_ - used) return;
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        if (color_[u] == c && g_.has_edge(u, v)) ok = false;
      if (!ok) continue;
      color_[v] = c;
      ++class_size_[c];
      extend(v + 1, std::max(used, c + 1));
      --class_size_[c];
      if (stop_at_first_ && found_) return;
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> class_size_;
  bool stop_at_first_ = true;
  bool found_ = false;
  std::size_t best_ = 0;
};

}  // namespace

ChromaticInfo chromatic_info(const Graph& g) {
  if (g.order() == 0) throw InvalidParameters("chromatic_info needs at least one vertex");
  if (g.order() > 12) throw OrderTooLargeForExact("order " + std::to_string(g.order()) + " > 12");
  std::size_t chi = 1;
  while (true) {
    // Exactly-k colourability is monotone in k up to the order, so the first feasible k is chi.
    Colorer probe(g, chi);
    if (probe.any()) break;
    ++chi;
  }
  Colorer all(g, chi);
  return {chi, all.min_smallest_class()};
}

Graph hajos_graph() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}});
}

}  // namespace hajos
