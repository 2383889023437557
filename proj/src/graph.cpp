#include "hajos/graph.hpp"

#include <algorithm>
#include <limits>

#include "hajos/error.hpp"

namespace hajos {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw LoopEdge("vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t order) : order_(order), stride_(words_for(order)), rows_(order * words_for(order), 0) {
  if (order > kMaxOrder) throw OrderTooLarge(std::to_string(order) + " > " + std::to_string(kMaxOrder));
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph Graph::from_edges(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::complete(std::size_t order) { return complement(Graph(order)); }

std::size_t Graph::edge_count() const { return bits::count(rows_) / 2; }

VertexSet Graph::common_neighbors(Vertex u, Vertex v) const {
  VertexSet s = neighbors(u);
  s.intersect_words(row(v));
  return s;
}

std::size_t Graph::min_degree() const {
  if (order_ == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u)
    for (auto v = bits::next(row(u), u + 1); v; v = bits::next(row(u), *v + 1)) out.push_back({u, *v});
  return out;
}

bool Graph::audit() const {
  if (rows_.size() != order_ * stride_) return false;
  for (Vertex u = 0; u < order_; ++u) {
    auto r = row(u);
    if (bits::test(r, u)) return false;
    bool ok = true;
    bits::for_each(r, [&](Vertex v) {
      if (v >= order_ || !bits::test(row(v), u)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(std::size_t order) : g_(order) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= g_.order_ || v >= g_.order_)
    throw EndpointOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ") in graph of order " +
                             std::to_string(g_.order_));
  if (u == v) throw LoopEdge("vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  row(u)[v / kWordBits] |= Word{1} << (v % kWordBits);
  row(v)[u / kWordBits] |= Word{1} << (u % kWordBits);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  row(u)[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  row(v)[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  return *this;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  const std::size_t n = g.order();
  const Word tail = n % kWordBits == 0 ? ~Word{0} : (Word{1} << (n % kWordBits)) - 1;
  for (std::size_t i = 0; i < out.rows_.size(); ++i) out.rows_[i] = ~g.rows_[i];
  for (Vertex u = 0; u < n; ++u) {
    Word* r = out.rows_.data() + u * out.stride_;
    r[out.stride_ - 1] &= tail;
    r[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  }
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out{Graph(s.size()), s.to_vector()};
  GraphBuilder b(out.to_host.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    for (std::size_t j = i + 1; j < out.to_host.size(); ++j)
      if (g.has_edge(out.to_host[i], out.to_host[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = std::move(b).build();
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

namespace {

constexpr int kG6Offset = 63;

void encode_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
}

int sextet(char c) {
  int x = static_cast<unsigned char>(c) - kG6Offset;
  if (x < 0 || x > 63) throw MalformedGraph6("byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
  return x;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  encode_order(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty record");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != static_cast<char>(126)) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == static_cast<char>(126))
      throw OrderTooLarge("8-byte order prefix (> 258047 vertices)");
    if (text.size() < 4) throw MalformedGraph6("truncated order prefix");
    n = (static_cast<std::size_t>(sextet(text[1])) << 12) | (static_cast<std::size_t>(sextet(text[2])) << 6) |
        static_cast<std::size_t>(sextet(text[3]));
    pos = 4;
  }
  if (n > kMaxOrder) throw OrderTooLarge(std::to_string(n) + " > " + std::to_string(kMaxOrder));

  const std::size_t bit_count = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bit_count + 5) / 6;
  if (text.size() - pos != expected)
    throw MalformedGraph6("expected " + std::to_string(expected) + " data bytes, found " +
                          std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = sextet(text[pos + k / 6]);
    if (byte & ((1 << (6 - k % 6)) - 1)) throw MalformedGraph6("nonzero padding bits");
  }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return std::move(b).build();
}

}  // namespace hajos
