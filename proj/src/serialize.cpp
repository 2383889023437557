#include "hajos/serialize.hpp"

#include <ostream>

#include "hajos/error.hpp"

namespace hajos {

namespace {

Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) throw InvalidParameters("edge must be a [u, v] pair");
    out.push_back(Edge::make(e[0].get<Vertex>(), e[1].get<Vertex>()));
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidParameters(std::string("missing field '") + name + "'");
  return j.at(name);
}

// Payload fields holding edge lists; needed to type an empty array.
bool is_edge_field(const std::string& name) { return name == "edges" || name == "blades"; }

}  // namespace

Json witness_to_json(const Witness& w) {
  Json j;
  if (const auto* h = std::get_if<HajosEmbedding>(&w)) {
    j["kind"] = "red_hajos";
    j["vertices"] = {{"triangle", h->triangle}, {"apexes", h->apexes}};
  } else if (const auto* s = std::get_if<StarWitness>(&w)) {
    j["kind"] = "blue_star";
    j["vertices"] = {{"center", s->center}, {"leaves", s->leaves}};
  } else {
    const auto& f = std::get<FanWitness>(w);
    j["kind"] = "blue_fan";
    j["vertices"] = {{"center", f.center}, {"blades", edges_json(f.blades)}};
  }
  return j;
}

Witness witness_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const Json& v = field(j, "vertices");
  if (kind == "red_hajos") return HajosEmbedding{field(v, "triangle").get<std::array<Vertex, 3>>(), field(v, "apexes").get<std::array<Vertex, 3>>()};
  if (kind == "blue_star") return StarWitness{field(v, "center").get<Vertex>(), field(v, "leaves").get<std::vector<Vertex>>()};
  if (kind == "blue_fan") return FanWitness{field(v, "center").get<Vertex>(), edges_from(field(v, "blades"))};
  throw InvalidParameters("unknown witness kind '" + kind + "'");
}

Json event_to_json(const TraceEvent& e) {
  Json payload = Json::object();
  for (const auto& [name, value] : e.payload) {
    if (const auto* x = std::get_if<std::int64_t>(&value)) payload[name] = *x;
    else if (const auto* vs = std::get_if<std::vector<Vertex>>(&value)) payload[name] = *vs;
    else payload[name] = edges_json(std::get<std::vector<Edge>>(value));
  }
  return Json{{"event", to_string(e.kind)}, {"check", to_string(e.check)}, {"note", e.note}, {"payload", payload}};
}

TraceEvent event_from_json(const Json& j) {
  TraceEvent e;
  const auto kind = event_kind_from_string(field(j, "event").get<std::string>());
  const auto check = check_from_string(field(j, "check").get<std::string>());
  if (!kind || !check) throw InvalidParameters("unknown event kind or check");
  e.kind = *kind;
  e.check = *check;
  e.note = field(j, "note").get<std::string>();
  for (const auto& [name, value] : field(j, "payload").items()) {
    if (value.is_number_integer()) e.with(name, value.get<std::int64_t>());
    else if (is_edge_field(name) || (!value.empty() && value[0].is_array())) e.with(name, edges_from(value));
    else e.with(name, value.get<std::vector<Vertex>>());
  }
  return e;
}

Json terminal_to_json(const ProofTrace& trace, const Witness& w) {
  return Json{{"case", to_string(trace.terminal)}, {"branch", trace.branch}, {"n", trace.n}, {"witness", witness_to_json(w)}};
}

void write_trace_lines(std::ostream& out, const ProofTrace& trace, const Witness& w) {
  for (const TraceEvent& e : trace.events) out << event_to_json(e).dump() << '\n';
  out << terminal_to_json(trace, w).dump() << '\n';
}

ProofTrace read_trace_lines(const std::vector<std::string>& lines) {
  ProofTrace t;
  for (const std::string& line : lines) {
    const Json j = Json::parse(line);
    if (j.contains("event")) {
      t.events.push_back(event_from_json(j));
      continue;
    }
    const auto tag = case_tag_from_string(field(j, "case").get<std::string>());
    if (!tag) throw InvalidParameters("unknown case tag");
    t.terminal = *tag;
    t.branch = field(j, "branch").get<std::string>();
    t.n = field(j, "n").get<std::size_t>();
  }
  return t;
}

Json report_to_json(const VerificationReport& r, bool timing) {
  Json j;
  j["statement"] = r.statement;
  j["total"] = r.total;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["counterexamples"] = r.counterexamples;
  j["case_histogram"] = Json::object();
  for (const auto& [k, v] : r.case_histogram) j["case_histogram"][k] = v;
  j["wall_ms"] = timing ? Json(r.wall_ms) : Json(nullptr);
  if (!r.branch_histogram.empty()) {
    j["branch_histogram"] = Json::object();
    for (const auto& [k, v] : r.branch_histogram) j["branch_histogram"][k] = v;
  }
  if (!r.proof_gaps.empty()) j["proof_gaps"] = r.proof_gaps;
  j["witness_samples"] = Json::array();
  for (const Witness& w : r.samples) j["witness_samples"].push_back(witness_to_json(w));
  if (timing && !r.branch_histogram.empty()) j["max_trial_ms"] = r.max_trial_ms;
  return j;
}

Json chromatic_to_json(const ChromaticInfo& info) { return Json{{"chi", info.chi}, {"surplus", info.surplus}}; }

}  // namespace hajos
