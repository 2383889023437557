#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hajos/graph.hpp"

namespace hajos {

/// Independent generator for one trial: seeded from (seed, trial) through std::seed_seq,
/// so trials can run on any worker in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double unit_draw(std::mt19937_64& rng);

/// G(order, p): each pair (u < v), in lexicographic order, is an edge iff a fresh draw is below p.
Graph random_graph(std::size_t order, double p, std::mt19937_64& rng);

/// Edge probability used by sweep trial i: 0.1, 0.2, ..., 0.9, cycling.
double sweep_probability(std::size_t trial);

}  // namespace hajos
