#include <random>

#include "doctest.h"
#include "hajos/error.hpp"
#include "hajos/matching.hpp"
#include "oracles.hpp"

using namespace hajos;

namespace {

bool disjoint_edges_of(const Graph& g, const Matching& m) {
  std::vector<bool> seen(g.order(), false);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v) || seen[e.u] || seen[e.v]) return false;
    seen[e.u] = seen[e.v] = true;
  }
  return std::is_sorted(m.edges.begin(), m.edges.end());
}

}  // namespace

TEST_CASE("small graphs with known matching numbers") {
  CHECK(maximum_matching(Graph(0)).size() == 0);
  CHECK(maximum_matching(Graph(7)).size() == 0);
  CHECK(maximum_matching(Graph::complete(7)).size() == 3);
  CHECK(maximum_matching(graph6_decode("IheA@GUAo")).size() == 5);  // Petersen
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(maximum_matching(c5).size() == 2);
  // Two triangles joined by a path through a blossom: perfect matching needs the blossom shrunk.
  const Graph bow = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 7}});
  CHECK(maximum_matching(bow).size() == 4);
}

TEST_CASE("blossom agrees with the subset DP oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    const std::size_t order = rng() % 15;
    const double p = 0.05 + 0.1 * static_cast<double>(t % 9);
    const Graph g = oracle::random_graph(order, p, rng);
    const Matching m = maximum_matching(g);
    CHECK(disjoint_edges_of(g, m));
    CHECK(m.valid_in(g));
    CHECK(m.size() == oracle::matching_number(g));
    CHECK(brute_force_maximum_matching(g).size() == m.size());
  }
}

TEST_CASE("blossom on larger sparse graphs matches the oracle on components") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(18, 0.12, rng);
    CHECK(maximum_matching(g).size() == oracle::matching_number(g));
  }
}

TEST_CASE("matching_of_size stops at k or reports nullopt") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(12, 0.25, rng);
    const std::size_t nu = oracle::matching_number(g);
    for (std::size_t k = 0; k <= nu + 1; ++k) {
      const auto m = matching_of_size(g, k);
      if (k <= nu) {
        REQUIRE(m.has_value());
        CHECK(m->size() == k);
        CHECK(disjoint_edges_of(g, *m));
      } else {
        CHECK_FALSE(m.has_value());
      }
    }
  }
}

TEST_CASE("matching is a pure function of the graph") {
  std::mt19937_64 rng(27);
  const Graph g = oracle::random_graph(300, 0.02, rng);
  CHECK(maximum_matching(g) == maximum_matching(g));
}

TEST_CASE("covered marks both ends of every edge") {
  const Matching m{{Edge{0, 3}, Edge{1, 4}}};
  const VertexSet c = m.covered(6);
  CHECK(c.to_vector() == std::vector<Vertex>{0, 1, 3, 4});
}

TEST_CASE("oracle refuses large orders") { CHECK_THROWS_AS(brute_force_maximum_matching(Graph(17)), OrderTooLargeForOracle); }
