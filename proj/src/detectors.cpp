#include "hajos/detectors.hpp"

#include <algorithm>

#include "hajos/matching.hpp"

namespace hajos {

std::array<Edge, 9> HajosEmbedding::edges() const {
  const auto [a, b, c] = triangle;
  const auto [ab, ac, bc] = apexes;
  return {Edge::make(a, b),  Edge::make(a, c),  Edge::make(b, c),  Edge::make(ab, a), Edge::make(ab, b),
          Edge::make(ac, a), Edge::make(ac, c), Edge::make(bc, b), Edge::make(bc, c)};
}

namespace {

template <std::size_t K>
bool distinct_in_range(const std::array<Vertex, K>& vs, std::size_t order) {
  for (std::size_t i = 0; i < K; ++i) {
    if (vs[i] >= order) return false;
    for (std::size_t j = i + 1; j < K; ++j)
      if (vs[i] == vs[j]) return false;
  }
  return true;
}

// First (up to) three members of N(x)∩N(y) other than `skip`.
std::vector<Vertex> apex_candidates(const Graph& g, Vertex x, Vertex y, Vertex skip) {
  std::vector<Vertex> out;
  auto rx = g.row(x);
  auto ry = g.row(y);
  for (auto v = bits::next_and(rx, ry, 0); v && out.size() < 3; v = bits::next_and(rx, ry, *v + 1))
    if (*v != skip) out.push_back(*v);
  return out;
}

}  // namespace

std::optional<HajosEmbedding> hajos_on_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
  // Truncating each candidate list to its three smallest members keeps the
  // lexicographically least system of distinct representatives reachable.
  const auto ab = apex_candidates(g, a, b, c);
  if (ab.empty()) return std::nullopt;
  const auto ac = apex_candidates(g, a, c, b);
  if (ac.empty()) return std::nullopt;
  const auto bc = apex_candidates(g, b, c, a);
  if (bc.empty()) return std::nullopt;
  for (Vertex x : ab)
    for (Vertex y : ac) {
      if (y == x) continue;
      for (Vertex z : bc)
        if (z != x && z != y) return HajosEmbedding{{a, b, c}, {x, y, z}};
    }
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (auto b = bits::next(ra, a + 1); b; b = bits::next(ra, *b + 1))
      if (auto c = bits::next_and(ra, g.row(*b), *b + 1)) return std::array<Vertex, 3>{a, *b, *c};
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (auto b = bits::next(ra, a + 1); b; b = bits::next(ra, *b + 1)) {
      VertexSet ab = g.common_neighbors(a, *b);
      for (auto c = ab.next(*b + 1); c; c = ab.next(*c + 1))
        if (auto d = bits::next_and(ab.words(), g.row(*c), *c + 1)) return std::array<Vertex, 4>{a, *b, *c, *d};
    }
  }
  return std::nullopt;
}

std::optional<K5MinusE> find_k5_minus_e(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (auto b = bits::next(ra, a + 1); b; b = bits::next(ra, *b + 1)) {
      VertexSet ab = g.common_neighbors(a, *b);
      if (ab.size() < 2) continue;
      for (auto c = ab.next(*b + 1); c; c = ab.next(*c + 1)) {
        VertexSet abc = ab;
        abc.intersect_words(g.row(*c));
        for (auto d = abc.next(*c + 1); d; d = abc.next(*d + 1)) {
          // A fifth vertex sees at least three of the four clique vertices.
          VertexSet abd = ab;
          abd.intersect_words(g.row(*d));
          VertexSet acd = g.common_neighbors(a, *c);
          acd.intersect_words(g.row(*d));
          VertexSet bcd = g.common_neighbors(*b, *c);
          bcd.intersect_words(g.row(*d));
          VertexSet fifth = abc | abd | acd | bcd;
          for (Vertex x : {a, *b, *c, *d}) fifth.erase(x);
          if (auto e = fifth.first()) return K5MinusE{{a, *b, *c, *d}, *e};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<W4Embedding> find_w4(const Graph& g) {
  for (Vertex hub = 0; hub < g.order(); ++hub) {
    if (g.degree(hub) < 4) continue;
    auto rh = g.row(hub);
    for (auto x = bits::next(rh, 0); x; x = bits::next(rh, *x + 1)) {
      VertexSet nx = g.neighbors(*x);
      nx.intersect_words(rh);
      if (nx.size() < 2) continue;
      for (auto y = bits::next(rh, *x + 1); y; y = bits::next(rh, *y + 1)) {
        auto c1 = bits::next_and(nx.words(), g.row(*y), 0);
        if (!c1) continue;
        auto c2 = bits::next_and(nx.words(), g.row(*y), *c1 + 1);
        if (!c2) continue;
        return W4Embedding{hub, {*x, *c1, *y, *c2}};
      }
    }
  }
  return std::nullopt;
}

std::optional<HajosEmbedding> find_hajos(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    if (g.degree(a) < 3) continue;
    for (auto b = bits::next(ra, a + 1); b; b = bits::next(ra, *b + 1)) {
      VertexSet ab = g.common_neighbors(a, *b);
      if (ab.size() < 2) continue;
      for (auto c = ab.next(*b + 1); c; c = ab.next(*c + 1))
        if (auto h = hajos_on_triangle(g, a, *b, *c)) return h;
    }
  }
  return std::nullopt;
}

std::optional<StarWitness> find_blue_star(const Graph& g, std::size_t n) {
  const std::size_t order = g.order();
  for (Vertex v = 0; v < order; ++v) {
    if (order - 1 - g.degree(v) < n) continue;
    StarWitness s{v, {}};
    for (Vertex u = 0; u < order && s.leaves.size() < n; ++u)
      if (u != v && !g.has_edge(u, v)) s.leaves.push_back(u);
    return s;
  }
  return std::nullopt;
}

std::optional<FanWitness> find_blue_fan(const Graph& g, std::size_t n) {
  const Graph blue = complement(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet around = blue.neighbors(v);
    if (around.size() < 2 * n) continue;
    InducedSubgraph h = induced(blue, around);
    auto m = matching_of_size(h.graph, n);
    if (!m) continue;
    FanWitness f{v, {}};
    for (const Edge& e : m->edges) f.blades.push_back(Edge::make(h.to_host[e.u], h.to_host[e.v]));
    std::sort(f.blades.begin(), f.blades.end());
    return f;
  }
  return std::nullopt;
}

bool valid_hajos(const Graph& g, const HajosEmbedding& h) {
  if (!distinct_in_range(h.vertices(), g.order())) return false;
  for (const Edge& e : h.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

bool valid_w4(const Graph& g, const W4Embedding& w) {
  const std::array<Vertex, 5> all{w.hub, w.rim[0], w.rim[1], w.rim[2], w.rim[3]};
  if (!distinct_in_range(all, g.order())) return false;
  for (std::size_t i = 0; i < 4; ++i)
    if (!g.has_edge(w.hub, w.rim[i]) || !g.has_edge(w.rim[i], w.rim[(i + 1) % 4])) return false;
  return true;
}

bool valid_k5_minus_e(const Graph& g, const K5MinusE& k) {
  const std::array<Vertex, 5> all{k.clique[0], k.clique[1], k.clique[2], k.clique[3], k.fifth};
  if (!distinct_in_range(all, g.order())) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!g.has_edge(k.clique[i], k.clique[j])) return false;
  std::size_t seen = 0;
  for (Vertex v : k.clique) seen += g.has_edge(k.fifth, v) ? 1 : 0;
  return seen >= 3;
}

bool valid_star(const Graph& g, const StarWitness& s, std::size_t n) {
  if (s.center >= g.order() || s.leaves.size() != n) return false;
  VertexSet seen(g.order());
  for (Vertex v : s.leaves) {
    if (v >= g.order() || v == s.center || seen.contains(v) || g.has_edge(s.center, v)) return false;
    seen.insert(v);
  }
  return true;
}

bool valid_fan(const Graph& g, const FanWitness& f, std::size_t n) {
  if (f.center >= g.order() || f.blades.size() != n) return false;
  VertexSet seen(g.order());
  seen.insert(f.center);
  for (const Edge& e : f.blades) {
    for (Vertex v : {e.u, e.v}) {
      if (v >= g.order() || seen.contains(v) || g.has_edge(f.center, v)) return false;
      seen.insert(v);
    }
    if (g.has_edge(e.u, e.v)) return false;
  }
  return true;
}

bool verify_witness(const Graph& g, const Witness& w, std::size_t n) {
  struct Visitor {
    const Graph& g;
    std::size_t n;
    bool operator()(const HajosEmbedding& h) const { return valid_hajos(g, h); }
    bool operator()(const StarWitness& s) const { return valid_star(g, s, n); }
    bool operator()(const FanWitness& f) const { return valid_fan(g, f, n); }
  };
  return std::visit(Visitor{g, n}, w);
}

}  // namespace hajos
