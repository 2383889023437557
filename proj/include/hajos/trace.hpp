#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hajos/detectors.hpp"
#include "hajos/error.hpp"
#include "hajos/graph.hpp"

namespace hajos {

/// Which branch of the star or fan argument produced the witness.
enum class CaseTag {
  StarDirectBlue,
  StarSpecialN2,
  StarCase1_NoK4,
  StarCase2_K5e,
  StarCase3_K4Even,
  StarCase3_K4Odd,
  FanCase1_BigBlueDegree,
  FanCase2_MinDegree,
  FanDirectBlue_NoW4,
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view s);

enum class EventKind { CaseEntered, ClaimChecked, SetBuilt, MatchingBuilt, WitnessAssembled, Reroute, ProofGap };

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view s);

/// The property an event asserts about the host graph. Replay recomputes it from the payload.
/// Field names read by each check are listed alongside.
enum class Check {
  None,                 // nothing beyond index validity
  RedClique,            // vertices
  RedIndependent,       // vertices
  RedEdges,             // edges
  BlueMatching,         // edges: disjoint non-edges of g
  BlueMatchingTouching, // edges, touch: as BlueMatching, every edge meets `touch`
  CommonRedNeighbors,   // of, exclude, set: set == (intersection of N(x), x in of) \ exclude
  BlueNeighborhood,     // center, set: set == non-neighbours of center
  Triangle,             // vertices
  K4,                   // vertices
  K5MinusE,             // clique, fifth
  W4,                   // hub, rim
  MinDegreeAtLeast,     // bound: min degree of g >= bound
  MaxBlueDegreeBelow,   // bound: every vertex has fewer than bound non-neighbours
  BlueDegreeAtLeast,    // vertex, bound
  RedDegreeIntoAtLeast, // vertex, set, bound: |N(vertex) ∩ set| >= bound
  StarForest,           // vertices: each component of g[vertices] is a star or a single vertex
  MaxInducedDegree,     // vertices, bound
  SizeAtLeast,          // set, bound
  SizeAtMost,           // set, bound
  Disjoint,             // a, b
  AllRedAdjacent,       // a, b: every pair (x in a, y in b, x != y) is an edge
  NoRedEdgeBetween,     // a, b
  WPartition,           // rim, U1, U2, W1, W2, W3, W4: recomputed from the definitions
  HajosWitness,         // triangle, apexes
  StarWitness,          // center, leaves
  FanWitness,           // center, blades
};

std::string_view to_string(Check check);
std::optional<Check> check_from_string(std::string_view s);

using PayloadValue = std::variant<std::int64_t, std::vector<Vertex>, std::vector<Edge>>;

struct TraceEvent {
  EventKind kind = EventKind::ClaimChecked;
  Check check = Check::None;
  std::string note;
  std::vector<std::pair<std::string, PayloadValue>> payload;

  TraceEvent& with(std::string name, std::vector<Vertex> vs);
  TraceEvent& with(std::string name, const VertexSet& s) { return with(std::move(name), s.to_vector()); }
  TraceEvent& with(std::string name, std::vector<Edge> es);
  TraceEvent& with(std::string name, std::int64_t x);

  const PayloadValue* find(std::string_view name) const;
  bool operator==(const TraceEvent&) const = default;
};

struct ProofTrace {
  std::vector<TraceEvent> events;
  CaseTag terminal = CaseTag::StarDirectBlue;
  std::size_t n = 0;
  /// Finer-grained label of the terminating step, e.g. "claim3-fan".
  std::string branch;

  bool operator==(const ProofTrace&) const = default;
};

/// A step the argument guarantees did not go through. Carries the trace up to the failure.
class ProofGap : public Error {
 public:
  ProofGap(std::string note, ProofTrace trace) : Error("ProofGap: " + note), note_(std::move(note)), trace_(std::move(trace)) {}
  const std::string& note() const { return note_; }
  const ProofTrace& trace() const { return trace_; }

 private:
  std::string note_;
  ProofTrace trace_;
};

/// Re-validates every event of a trace against g. True iff all payloads are in range,
/// every check holds, and the trace ends in a witness or a gap marker.
bool replay_trace(const Graph& g, const ProofTrace& trace);

/// Single-event replay; exposed for diagnostics.
bool replay_event(const Graph& g, const TraceEvent& event, std::size_t n);

/// Appends events and seals the trace with a witness or a gap.
class TraceRecorder {
 public:
  TraceRecorder(std::size_t n, CaseTag initial) { trace_.n = n; trace_.terminal = initial; }

  void set_case(CaseTag tag) { trace_.terminal = tag; }
  CaseTag current_case() const { return trace_.terminal; }

  TraceEvent& add(EventKind kind, Check check, std::string note);
  TraceEvent& enter(CaseTag tag, Check check, std::string note) {
    set_case(tag);
    return add(EventKind::CaseEntered, check, std::move(note));
  }
  TraceEvent& claim(Check check, std::string note) { return add(EventKind::ClaimChecked, check, std::move(note)); }
  TraceEvent& set_built(Check check, std::string note) { return add(EventKind::SetBuilt, check, std::move(note)); }
  TraceEvent& matching(Check check, std::string note) { return add(EventKind::MatchingBuilt, check, std::move(note)); }

  [[noreturn]] void gap(const std::string& note);

  /// Appends the witness-assembled event and returns the finished trace.
  ProofTrace finish(const Witness& w, std::string branch);

  const ProofTrace& trace() const { return trace_; }

 private:
  ProofTrace trace_;
};

}  // namespace hajos
