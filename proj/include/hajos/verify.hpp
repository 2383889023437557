#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hajos/detectors.hpp"
#include "hajos/extractor.hpp"
#include "hajos/graph.hpp"

namespace hajos {

struct VerificationReport {
  std::string statement;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// graph6 of failing instances, in instance order, capped at kMaxCounterexamples.
  std::vector<std::string> counterexamples;
  /// Witnesses of the first few passing instances.
  std::vector<Witness> samples;
  std::map<std::string, std::size_t> case_histogram;
  std::map<std::string, std::size_t> branch_histogram;
  /// "trial <i>: <note>" for every ProofGap in a sweep.
  std::vector<std::string> proof_gaps;
  double wall_ms = 0;
  double max_trial_ms = 0;

  bool certified() const { return failed == 0; }

  static constexpr std::size_t kMaxCounterexamples = 256;
  static constexpr std::size_t kMaxSamples = 3;
};

/// Red Hajós graph in g, or the blue target in its complement, by the detectors alone.
bool arrows(const Graph& g, Target target);

/// All 2^(N(N-1)/2) graphs on N labelled vertices; bit k of the index is the k-th pair in
/// lexicographic order. Throws TooManyColorings above 28 pairs.
VerificationReport verify_all_colorings(std::size_t order, Target target, unsigned threads = 1);

/// One component of a graph with maximum degree at most 2.
struct ComponentShape {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  std::size_t size = 1;
  auto operator<=>(const ComponentShape&) const = default;
};

/// Every multiset of paths (size >= 1) and cycles (size >= 3) with total size N, each listed
/// in non-increasing order. One entry per isomorphism class of graphs with maximum degree <= 2.
std::vector<std::vector<ComponentShape>> path_cycle_shapes(std::size_t order);

/// Disjoint union of the shapes, components laid out consecutively.
Graph shape_graph(const std::vector<ComponentShape>& shape);

/// Calls visit once per isomorphism class representative. N <= 32.
void enumerate_path_cycle_graphs(std::size_t order, const std::function<void(const Graph&)>& visit);

/// Number of labelled graphs on N vertices with maximum degree <= 2, summed as N!/|Aut| over shapes.
/// Exact for N <= 20.
std::uint64_t labeled_path_cycle_count(std::size_t order);

/// n = 2: every labelled matching on 6 vertices as the blue graph. n = 3: every path/cycle union
/// on 9 vertices as the blue graph. Each red graph must contain a Hajós graph.
VerificationReport verify_star_upper_via_structure(std::size_t n);

/// Random graphs at the threshold order; each trial runs arrow_witness and validates the
/// witness and the trace replay. Trials are sharded across threads and merged by index.
VerificationReport random_sweep(Target target, std::size_t trials, std::uint64_t seed, unsigned threads = 1);

enum class ConstructionKind { StarEven, StarOdd, Fan };

/// Builds the lower-bound graph and checks order, Hajós-freeness and absence of the blue target.
VerificationReport verify_construction(std::size_t n, ConstructionKind kind);

}  // namespace hajos
