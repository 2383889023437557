#include <random>

#include "doctest.h"
#include "hajos/error.hpp"
#include "hajos/graph.hpp"
#include "oracles.hpp"

using namespace hajos;

TEST_CASE("graph6 decodes reference strings") {
  const Graph petersen = graph6_decode("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);

  const Graph k5 = graph6_decode("D~{");
  CHECK(k5 == Graph::complete(5));

  const Graph p4 = graph6_decode("Ch\n");
  CHECK(p4 == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));

  CHECK(graph6_decode("?").order() == 0);
  CHECK(graph6_decode("@") == Graph(1));
  CHECK(graph6_decode("A_") == Graph::complete(2));
  CHECK(graph6_decode("A?") == Graph(2));
}

TEST_CASE("graph6 uses the long order prefix from 63 vertices") {
  GraphBuilder b(63);
  for (Vertex v = 0; v < 63; ++v) b.add_edge(v, (v + 1) % 63);
  const Graph c63 = std::move(b).build();
  const std::string text = graph6_encode(c63);
  CHECK(text.substr(0, 4) == "~??~");
  CHECK(graph6_decode(text) == c63);
}

TEST_CASE("graph6 encoding matches the reference encoder") {
  CHECK(graph6_encode(graph6_decode("IheA@GUAo")) == "IheA@GUAo");
  CHECK(graph6_encode(Graph::complete(5)) == "D~{");
  CHECK(graph6_encode(Graph(0)) == "?");
}

TEST_CASE("graph6 roundtrip on random graphs") {
  std::mt19937_64 rng(99);
  for (std::size_t order : {1, 2, 5, 62, 63, 64, 65, 130, 258, 446}) {
    for (double p : {0.0, 0.3, 1.0}) {
      const Graph g = oracle::random_graph(order, p, rng);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
}

TEST_CASE("malformed graph6 is rejected") {
  CHECK_THROWS_AS(graph6_decode(""), MalformedGraph6);
  CHECK_THROWS_AS(graph6_decode("A"), MalformedGraph6);
  CHECK_THROWS_AS(graph6_decode("D~{x"), MalformedGraph6);
  CHECK_THROWS_AS(graph6_decode("D~ "), MalformedGraph6);
  CHECK_THROWS_AS(graph6_decode("A`"), MalformedGraph6);  // padding bit set
}

TEST_CASE("builder validates endpoints") {
  GraphBuilder b(4);
  CHECK_THROWS_AS(b.add_edge(1, 1), LoopEdge);
  CHECK_THROWS_AS(b.add_edge(0, 4), EndpointOutOfRange);
  CHECK_THROWS_AS(Edge::make(2, 2), LoopEdge);
  CHECK_THROWS_AS(Graph(1025), OrderTooLarge);
  CHECK(Graph(1024).order() == 1024);
  CHECK(Edge::make(5, 2) == Edge{2, 5});
}

TEST_CASE("complement, degrees and audit") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t order = 1 + rng() % 150;
    const Graph g = oracle::random_graph(order, 0.4, rng);
    const Graph c = complement(g);
    CHECK(g.audit());
    CHECK(c.audit());
    CHECK(complement(c) == g);
    CHECK(c == oracle::complement_of(g));
    std::size_t sum = 0;
    for (Vertex v = 0; v < order; ++v) {
      sum += g.degree(v);
      CHECK(g.degree(v) + c.degree(v) == order - 1);
    }
    CHECK(sum == 2 * g.edge_count());
    CHECK(g.edge_count() + c.edge_count() == order * (order - 1) / 2);
  }
}

TEST_CASE("common neighbours agree with pairwise adjacency") {
  std::mt19937_64 rng(6);
  const Graph g = oracle::random_graph(90, 0.5, rng);
  for (Vertex u = 0; u < 90; u += 7)
    for (Vertex v = 0; v < 90; v += 5) {
      const VertexSet s = g.common_neighbors(u, v);
      for (Vertex w = 0; w < 90; ++w) CHECK(s.contains(w) == (g.has_edge(u, w) && g.has_edge(v, w)));
    }
}

TEST_CASE("induced subgraphs keep ascending host order") {
  std::mt19937_64 rng(8);
  const Graph g = oracle::random_graph(40, 0.5, rng);
  const VertexSet s = VertexSet::of(40, {3, 9, 10, 22, 39});
  const InducedSubgraph h = induced(g, s);
  REQUIRE(h.graph.order() == 5);
  CHECK(h.to_host == std::vector<Vertex>{3, 9, 10, 22, 39});
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = 0; j < 5; ++j) CHECK(h.graph.has_edge(i, j) == g.has_edge(h.to_host[i], h.to_host[j]));
}

TEST_CASE("permute relabels vertex v as perm[v]") {
  const Graph p = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Vertex> perm{3, 0, 2, 1};
  const Graph q = permute(p, perm);
  CHECK(q == Graph::from_edges(4, {{3, 0}, {0, 2}, {2, 1}}));
  CHECK(oracle::isomorphic(p, q));
}
