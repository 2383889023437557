#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

/// Hajós graph (3-sun) inside a host: a triangle plus one apex per triangle edge.
/// apexes[0] sits on edge (triangle[0], triangle[1]), apexes[1] on (triangle[0], triangle[2]),
/// apexes[2] on (triangle[1], triangle[2]).
struct HajosEmbedding {
  std::array<Vertex, 3> triangle{};
  std::array<Vertex, 3> apexes{};

  std::array<Vertex, 6> vertices() const {
    return {triangle[0], triangle[1], triangle[2], apexes[0], apexes[1], apexes[2]};
  }
  /// All nine pattern edges, in the fixed order triangle then apex pairs.
  std::array<Edge, 9> edges() const;
  bool operator==(const HajosEmbedding&) const = default;
};

/// Wheel W4: hub joined to a 4-cycle rim[0]-rim[1]-rim[2]-rim[3]-rim[0].
struct W4Embedding {
  Vertex hub = 0;
  std::array<Vertex, 4> rim{};
  bool operator==(const W4Embedding&) const = default;
};

/// K5 - e as a 4-clique plus a fifth vertex adjacent to at least three clique vertices.
struct K5MinusE {
  std::array<Vertex, 4> clique{};
  Vertex fifth = 0;
  bool operator==(const K5MinusE&) const = default;
};

/// Blue star: every center-leaf pair is a non-edge of the host.
struct StarWitness {
  Vertex center = 0;
  std::vector<Vertex> leaves;
  bool operator==(const StarWitness&) const = default;
};

/// Blue fan: blades are disjoint non-edges, both ends non-adjacent to the center.
struct FanWitness {
  Vertex center = 0;
  std::vector<Edge> blades;
  bool operator==(const FanWitness&) const = default;
};

/// Either side of the arrowing dichotomy: red Hajós graph in g, or blue target in complement(g).
using Witness = std::variant<HajosEmbedding, StarWitness, FanWitness>;

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);
std::optional<K5MinusE> find_k5_minus_e(const Graph& g);
std::optional<W4Embedding> find_w4(const Graph& g);
std::optional<HajosEmbedding> find_hajos(const Graph& g);
std::optional<StarWitness> find_blue_star(const Graph& g, std::size_t n);
std::optional<FanWitness> find_blue_fan(const Graph& g, std::size_t n);

/// Completes triangle (a, b, c) to a Hajós embedding by choosing distinct apexes from
/// N(a)∩N(b)\{c}, N(a)∩N(c)\{b}, N(b)∩N(c)\{a}; lexicographically least choice.
std::optional<HajosEmbedding> hajos_on_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

bool valid_hajos(const Graph& g, const HajosEmbedding& h);
bool valid_w4(const Graph& g, const W4Embedding& w);
bool valid_k5_minus_e(const Graph& g, const K5MinusE& k);
bool valid_star(const Graph& g, const StarWitness& s, std::size_t n);
bool valid_fan(const Graph& g, const FanWitness& f, std::size_t n);

/// Structural check of whichever variant w holds against g (red for Hajós, complement for star/fan).
bool verify_witness(const Graph& g, const Witness& w, std::size_t n);

}  // namespace hajos
