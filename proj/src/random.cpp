#include "hajos/random.hpp"

namespace hajos {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_graph(std::size_t order, double p, std::mt19937_64& rng) {
  GraphBuilder b(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (unit_draw(rng) < p) b.add_edge(u, v);
  return std::move(b).build();
}

double sweep_probability(std::size_t trial) { return static_cast<double>(trial % 9 + 1) / 10.0; }

}  // namespace hajos
