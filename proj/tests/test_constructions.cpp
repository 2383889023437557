#include <random>

#include "doctest.h"
#include "hajos/constructions.hpp"
#include "hajos/detectors.hpp"
#include "hajos/error.hpp"
#include "oracles.hpp"

using namespace hajos;

TEST_CASE("hajos_graph is the six-vertex pattern") {
  const Graph h = hajos_graph();
  CHECK(h.order() == 6);
  CHECK(h.edge_count() == 9);
  CHECK(oracle::isomorphic(h, oracle::hajos_pattern()));
  CHECK(h.has_edge(3, 0));
  CHECK(h.has_edge(3, 1));
  CHECK(h.has_edge(4, 2));
  CHECK(h.has_edge(5, 1));
}

TEST_CASE("small lower-bound graphs avoid both patterns by brute force") {
  for (std::size_t n : {2, 4}) {
    const Graph g = star_even_lower(n);
    CHECK(g.order() == 2 * n + 1);
    CHECK_FALSE(oracle::has_hajos(g));
    CHECK_FALSE(oracle::has_blue_star(g, n));
  }
  const Graph odd = star_odd_lower(3);
  CHECK(odd.order() == 8);
  CHECK_FALSE(oracle::has_hajos(odd));
  CHECK_FALSE(oracle::has_blue_star(odd, 3));
  for (std::size_t n : {1, 2}) {
    const Graph f = fan_lower(n);
    CHECK(f.order() == 4 * n + 1);
    CHECK_FALSE(oracle::has_hajos(f));
    CHECK_FALSE(oracle::has_blue_fan(f, n));
  }
}

TEST_CASE("one more vertex breaks the small lower bounds") {
  // Adding an isolated vertex gives it a blue star of size 2n+1 and a blue fan.
  const Graph g = disjoint_union(star_even_lower(2), Graph(1));
  CHECK(oracle::has_blue_star(g, 2));
  const Graph f = disjoint_union(fan_lower(1), Graph(1));
  CHECK(oracle::has_blue_fan(f, 1));
}

TEST_CASE("star_odd_lower is the join of two matchings") {
  const Graph g = star_odd_lower(5);  // l = 3
  CHECK(g.order() == 12);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.has_edge(6, 7));
  CHECK_FALSE(g.has_edge(6, 8));
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = 6; v < 12; ++v) CHECK(g.has_edge(u, v));
  for (Vertex v = 0; v < 12; ++v) CHECK(g.degree(v) == 7);
}

TEST_CASE("parity and parameter checks") {
  CHECK_THROWS_AS(star_even_lower(3), ParityError);
  CHECK_THROWS_AS(star_even_lower(0), ParityError);
  CHECK_THROWS_AS(star_odd_lower(4), ParityError);
  CHECK_THROWS_AS(star_odd_lower(1), ParityError);
  CHECK_THROWS_AS(fan_lower(0), InvalidParameters);
  CHECK_THROWS_AS(burr_construction(1, 1, 3), InvalidParameters);
  CHECK_THROWS_AS(burr_construction(3, 5, 3), InvalidParameters);
  CHECK_THROWS_AS(fan_lower(300), OrderTooLarge);
}

TEST_CASE("complete multipartite edge count") {
  const std::size_t parts[] = {3, 0, 4, 2};
  const Graph g = complete_multipartite(parts);
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 3 * 4 + 3 * 2 + 4 * 2);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("burr construction order and shape") {
  for (std::size_t chi = 2; chi <= 5; ++chi)
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t s = 1; s <= m; ++s) CHECK(burr_construction(chi, s, m).order() == burr_bound(chi, s, m) - 1);
  // Two colours, surplus one: a single part, so no edges at all.
  const Graph g = burr_construction(2, 1, 5);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  CHECK(oracle::isomorphic(burr_construction(3, 2, 3), star_even_lower(2)));
  CHECK(burr_construction(3, 2, 2 * 111 + 1) == fan_lower(111));
}

TEST_CASE("join and disjoint union") {
  const Graph a = Graph::complete(2);
  const Graph b(3);
  const Graph j = join(a, b);
  CHECK(j.order() == 5);
  CHECK(j.edge_count() == 1 + 6);
  const Graph u = disjoint_union(a, b);
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 1);
  CHECK(j == complement(disjoint_union(complement(a), complement(b))));
}

TEST_CASE("chromatic_info agrees with exhaustive colouring") {
  const ChromaticInfo h = chromatic_info(hajos_graph());
  CHECK(h.chi == 3);
  CHECK(h.surplus == 2);
  CHECK(chromatic_info(star_even_lower(2)) == ChromaticInfo{3, 1});
  CHECK(chromatic_info(Graph(4)) == ChromaticInfo{1, 4});
  CHECK(chromatic_info(Graph::complete(5)) == ChromaticInfo{5, 1});
  std::mt19937_64 rng(43);
  for (int t = 0; t < 120; ++t) {
    const std::size_t order = 1 + rng() % 8;
    const Graph g = oracle::random_graph(order, 0.45, rng);
    const auto want = oracle::chromatic(g);
    const auto got = chromatic_info(g);
    CHECK(got.chi == want.chi);
    CHECK(got.surplus == want.surplus);
  }
  CHECK_THROWS_AS(chromatic_info(Graph(13)), OrderTooLargeForExact);
  CHECK_THROWS_AS(chromatic_info(Graph(0)), InvalidParameters);
}

TEST_CASE("large constructions pass the detectors") {
  for (std::size_t n : {50, 100}) {
    const Graph even = star_even_lower(n);
    CHECK_FALSE(find_hajos(even).has_value());
    CHECK_FALSE(find_blue_star(even, n).has_value());
    const Graph odd = star_odd_lower(n + 1);
    CHECK_FALSE(find_hajos(odd).has_value());
    CHECK_FALSE(find_blue_star(odd, n + 1).has_value());
  }
  const Graph f = fan_lower(111);
  CHECK(f.order() == 445);
  CHECK_FALSE(find_hajos(f).has_value());
  CHECK_FALSE(find_blue_fan(f, 111).has_value());
}
