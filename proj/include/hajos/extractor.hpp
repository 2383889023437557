#pragma once

#include <cstddef>

#include "hajos/detectors.hpp"
#include "hajos/graph.hpp"
#include "hajos/trace.hpp"

namespace hajos {

enum class TargetKind { Star, Fan };

struct Target {
  TargetKind kind = TargetKind::Star;
  std::size_t n = 0;

  static Target star(std::size_t n) { return {TargetKind::Star, n}; }
  static Target fan(std::size_t n) { return {TargetKind::Fan, n}; }

  /// Order at which every graph must arrow the pair: 2n+2 (even n) or 2n+3 (odd n) for stars, 4n+2 for fans.
  std::size_t threshold_order() const;
  bool operator==(const Target&) const = default;
};

constexpr std::size_t star_threshold(std::size_t n) { return 2 * n + 2 + (n % 2); }
constexpr std::size_t fan_threshold(std::size_t n) { return 4 * n + 2; }

struct Extraction {
  Witness witness;
  ProofTrace trace;
};

/// Red Hajós graph in g or blue K_{1,n} in its complement, following the case analysis for stars.
/// Requires n >= 2 and g.order() == star_threshold(n). Throws InputSize, InvalidParameters or ProofGap.
Extraction extract_star(const Graph& g, std::size_t n);

/// Red Hajós graph in g or blue F_n in its complement, following the case analysis for fans.
/// Requires n >= 2 and g.order() == 4n+2. Success is only guaranteed for n >= 111;
/// below that a failed step surfaces as ProofGap carrying the partial trace.
Extraction extract_fan(const Graph& g, std::size_t n);

Extraction arrow_witness(const Graph& g, Target target);

}  // namespace hajos
