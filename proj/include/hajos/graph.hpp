#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hajos/vertex_set.hpp"

namespace hajos {

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalizes the endpoint order; throws LoopEdge when a == b.
  static Edge make(Vertex a, Vertex b);

  auto operator<=>(const Edge&) const = default;
};

class GraphBuilder;
class Graph;
Graph complement(const Graph& g);

/// Simple undirected graph on at most kMaxOrder vertices with one bitset row per vertex.
///
/// Immutable once built. Rows are sized to the order, so neighbourhood
/// intersections run word-parallel over ceil(order / 64) words.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph.
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_edges(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph complete(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t row_words() const { return stride_; }
  std::size_t edge_count() const;

  bool has_edge(Vertex u, Vertex v) const { return u != v && bits::test(row(u), v); }
  std::span<const Word> row(Vertex v) const { return {rows_.data() + v * stride_, stride_}; }

  VertexSet neighbors(Vertex v) const { return VertexSet::from_words(order_, row(v)); }
  VertexSet common_neighbors(Vertex u, Vertex v) const;
  VertexSet all_vertices() const { return VertexSet::full(order_); }

  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::size_t degree_in(Vertex v, const VertexSet& s) const { return bits::count_and(row(v), s.words()); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  std::vector<Edge> edges() const;

  /// True iff the rows are symmetric, loop-free, and carry no bits past the order.
  bool audit() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  friend Graph complement(const Graph& g);

  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  std::size_t order() const { return g_.order_; }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Word* row(Vertex v) { return g_.rows_.data() + v * g_.stride_; }
  void check(Vertex u, Vertex v) const;

  Graph g_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host vertex that became vertex i.
  std::vector<Vertex> to_host;
};

/// Subgraph induced by s; vertices keep their relative (ascending) order.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::string graph6_encode(const Graph& g);
/// Accepts a single graph6 record without header; a trailing newline is ignored.
Graph graph6_decode(std::string_view text);

}  // namespace hajos
