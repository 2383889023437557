#include <random>
#include <set>

#include "doctest.h"
#include "hajos/detectors.hpp"
#include "oracles.hpp"

using namespace hajos;

namespace {

const Graph k4 = Graph::complete(4);
const Graph k5e = oracle::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}});
const Graph w4 = oracle::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
const Graph k3 = Graph::complete(3);

bool distinct(std::initializer_list<Vertex> vs) { return std::set<Vertex>(vs).size() == vs.size(); }

// Independent re-check of a Hajós embedding.
bool hajos_ok(const Graph& g, const HajosEmbedding& h) {
  const auto [a, b, c] = h.triangle;
  const auto [x, y, z] = h.apexes;
  if (!distinct({a, b, c, x, y, z})) return false;
  const std::pair<Vertex, Vertex> need[] = {{a, b}, {a, c}, {b, c}, {x, a}, {x, b}, {y, a}, {y, c}, {z, b}, {z, c}};
  for (auto [u, v] : need)
    if (!g.has_edge(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("detectors agree with subgraph search on random small graphs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t order = 3 + rng() % 7;
    const Graph g = oracle::random_graph(order, 0.3 + 0.05 * static_cast<double>(t % 10), rng);

    const auto h = find_hajos(g);
    CHECK(h.has_value() == oracle::has_hajos(g));
    if (h) CHECK(hajos_ok(g, *h));

    const auto t3 = find_triangle(g);
    CHECK(t3.has_value() == oracle::contains(g, k3));
    const auto q = find_k4(g);
    CHECK(q.has_value() == oracle::contains(g, k4));
    const auto k = find_k5_minus_e(g);
    CHECK(k.has_value() == oracle::contains(g, k5e));
    if (k) CHECK(valid_k5_minus_e(g, *k));
    const auto w = find_w4(g);
    CHECK(w.has_value() == oracle::contains(g, w4));
    if (w) CHECK(valid_w4(g, *w));
  }
}

TEST_CASE("K5-e whose fifth vertex misses one end of the first clique pair") {
  // Clique {0, 2, 3, 4}; vertex 1 sees 2, 3, 4 but not 0, and 0, 2 have no third common neighbour.
  const Graph g = oracle::make(5, {{0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 2}, {1, 3}, {1, 4}});
  const auto k = find_k5_minus_e(g);
  REQUIRE(k.has_value());
  CHECK(valid_k5_minus_e(g, *k));
}

TEST_CASE("blue detectors agree with complement oracles") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 600; ++t) {
    const std::size_t order = 4 + rng() % 9;
    const Graph g = oracle::random_graph(order, 0.2 + 0.07 * static_cast<double>(t % 10), rng);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto s = find_blue_star(g, n);
      CHECK(s.has_value() == oracle::has_blue_star(g, n));
      if (s) CHECK(valid_star(g, *s, n));
      const auto f = find_blue_fan(g, n);
      CHECK(f.has_value() == oracle::has_blue_fan(g, n));
      if (f) CHECK(valid_fan(g, *f, n));
    }
  }
}

TEST_CASE("witnesses are lexicographically least") {
  CHECK(*find_triangle(Graph::complete(6)) == std::array<Vertex, 3>{0, 1, 2});
  CHECK(*find_k4(Graph::complete(6)) == std::array<Vertex, 4>{0, 1, 2, 3});
  const auto h = find_hajos(oracle::hajos_pattern());
  REQUIRE(h.has_value());
  CHECK(h->triangle == std::array<Vertex, 3>{0, 1, 2});
  CHECK(h->apexes == std::array<Vertex, 3>{3, 5, 4});
  const auto s = find_blue_star(Graph(5), 2);
  REQUIRE(s.has_value());
  CHECK(s->center == 0);
  CHECK(s->leaves == std::vector<Vertex>{1, 2});
}

TEST_CASE("hajos_on_triangle needs distinct apexes") {
  // K4 plus nothing: each triangle edge has only the fourth vertex as apex candidate.
  CHECK_FALSE(hajos_on_triangle(Graph::complete(4), 0, 1, 2).has_value());
  const auto h = hajos_on_triangle(Graph::complete(6), 0, 1, 2);
  REQUIRE(h.has_value());
  CHECK(hajos_ok(Graph::complete(6), *h));
  CHECK(h->apexes == std::array<Vertex, 3>{3, 4, 5});
}

TEST_CASE("tampered witnesses fail validation") {
  const Graph g = oracle::hajos_pattern();
  HajosEmbedding h = *find_hajos(g);
  CHECK(verify_witness(g, h, 2));
  std::swap(h.apexes[0], h.apexes[1]);
  CHECK_FALSE(verify_witness(g, h, 2));

  const Graph empty(7);
  StarWitness s{0, {1, 2, 3}};
  CHECK(verify_witness(empty, s, 3));
  CHECK_FALSE(verify_witness(empty, s, 4));
  s.leaves = {1, 1, 2};
  CHECK_FALSE(verify_witness(empty, s, 3));
  CHECK_FALSE(verify_witness(Graph::complete(7), StarWitness{0, {1, 2, 3}}, 3));

  FanWitness f{0, {Edge{1, 2}, Edge{3, 4}}};
  CHECK(verify_witness(empty, f, 2));
  f.blades = {Edge{1, 2}, Edge{2, 3}};
  CHECK_FALSE(verify_witness(empty, f, 2));
  f.blades = {Edge{0, 2}, Edge{3, 4}};
  CHECK_FALSE(verify_witness(empty, f, 2));
}

TEST_CASE("detectors handle orders past one word") {
  std::mt19937_64 rng(41);
  const Graph g = oracle::random_graph(200, 0.5, rng);
  const auto h = find_hajos(g);
  REQUIRE(h.has_value());
  CHECK(hajos_ok(g, *h));
  const auto w = find_w4(g);
  REQUIRE(w.has_value());
  CHECK(valid_w4(g, *w));
  CHECK_FALSE(find_triangle(Graph(200)).has_value());
}
