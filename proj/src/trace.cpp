#include "hajos/trace.hpp"

#include <algorithm>
#include <array>

namespace hajos {

namespace {

constexpr std::array<std::pair<CaseTag, std::string_view>, 9> kCaseNames{{
    {CaseTag::StarDirectBlue, "StarDirectBlue"},
    {CaseTag::StarSpecialN2, "StarSpecialN2"},
    {CaseTag::StarCase1_NoK4, "StarCase1_NoK4"},
    {CaseTag::StarCase2_K5e, "StarCase2_K5e"},
    {CaseTag::StarCase3_K4Even, "StarCase3_K4Even"},
    {CaseTag::StarCase3_K4Odd, "StarCase3_K4Odd"},
    {CaseTag::FanCase1_BigBlueDegree, "FanCase1_BigBlueDegree"},
    {CaseTag::FanCase2_MinDegree, "FanCase2_MinDegree"},
    {CaseTag::FanDirectBlue_NoW4, "FanDirectBlue_NoW4"},
}};

constexpr std::array<std::pair<EventKind, std::string_view>, 7> kEventNames{{
    {EventKind::CaseEntered, "case-entered"},
    {EventKind::ClaimChecked, "claim-checked"},
    {EventKind::SetBuilt, "set-built"},
    {EventKind::MatchingBuilt, "matching-built"},
    {EventKind::WitnessAssembled, "witness-assembled"},
    {EventKind::Reroute, "reroute"},
    {EventKind::ProofGap, "proof-gap"},
}};

constexpr std::array<std::pair<Check, std::string_view>, 27> kCheckNames{{
    {Check::None, "none"},
    {Check::RedClique, "red_clique"},
    {Check::RedIndependent, "red_independent"},
    {Check::RedEdges, "red_edges"},
    {Check::BlueMatching, "blue_matching"},
    {Check::BlueMatchingTouching, "blue_matching_touching"},
    {Check::CommonRedNeighbors, "common_red_neighbors"},
    {Check::BlueNeighborhood, "blue_neighborhood"},
    {Check::Triangle, "triangle"},
    {Check::K4, "k4"},
    {Check::K5MinusE, "k5_minus_e"},
    {Check::W4, "w4"},
    {Check::MinDegreeAtLeast, "min_degree_at_least"},
    {Check::MaxBlueDegreeBelow, "max_blue_degree_below"},
    {Check::BlueDegreeAtLeast, "blue_degree_at_least"},
    {Check::RedDegreeIntoAtLeast, "red_degree_into_at_least"},
    {Check::StarForest, "star_forest"},
    {Check::MaxInducedDegree, "max_induced_degree"},
    {Check::SizeAtLeast, "size_at_least"},
    {Check::SizeAtMost, "size_at_most"},
    {Check::Disjoint, "disjoint"},
    {Check::AllRedAdjacent, "all_red_adjacent"},
    {Check::NoRedEdgeBetween, "no_red_edge_between"},
    {Check::WPartition, "w_partition"},
    {Check::HajosWitness, "hajos_witness"},
    {Check::StarWitness, "star_witness"},
    {Check::FanWitness, "fan_witness"},
}};

template <class Table, class Key>
std::string_view name_of(const Table& table, Key key) {
  for (const auto& [k, name] : table)
    if (k == key) return name;
  return "unknown";
}

template <class Key, class Table>
std::optional<Key> key_of(const Table& table, std::string_view s) {
  for (const auto& [k, name] : table)
    if (name == s) return k;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CaseTag tag) { return name_of(kCaseNames, tag); }
std::optional<CaseTag> case_tag_from_string(std::string_view s) { return key_of<CaseTag>(kCaseNames, s); }
std::string_view to_string(EventKind kind) { return name_of(kEventNames, kind); }
std::optional<EventKind> event_kind_from_string(std::string_view s) { return key_of<EventKind>(kEventNames, s); }
std::string_view to_string(Check check) { return name_of(kCheckNames, check); }
std::optional<Check> check_from_string(std::string_view s) { return key_of<Check>(kCheckNames, s); }

TraceEvent& TraceEvent::with(std::string name, std::vector<Vertex> vs) {
  payload.emplace_back(std::move(name), std::move(vs));
  return *this;
}
TraceEvent& TraceEvent::with(std::string name, std::vector<Edge> es) {
  payload.emplace_back(std::move(name), std::move(es));
  return *this;
}
TraceEvent& TraceEvent::with(std::string name, std::int64_t x) {
  payload.emplace_back(std::move(name), x);
  return *this;
}

const PayloadValue* TraceEvent::find(std::string_view name) const {
  for (const auto& [k, v] : payload)
    if (k == name) return &v;
  return nullptr;
}

TraceEvent& TraceRecorder::add(EventKind kind, Check check, std::string note) {
  trace_.events.push_back(TraceEvent{kind, check, std::move(note), {}});
  return trace_.events.back();
}

void TraceRecorder::gap(const std::string& note) {
  add(EventKind::ProofGap, Check::None, note);
  trace_.branch = "proof-gap";
  throw ProofGap(note, trace_);
}

ProofTrace TraceRecorder::finish(const Witness& w, std::string branch) {
  if (const auto* h = std::get_if<HajosEmbedding>(&w)) {
    add(EventKind::WitnessAssembled, Check::HajosWitness, "red Hajos graph")
        .with("triangle", std::vector<Vertex>(h->triangle.begin(), h->triangle.end()))
        .with("apexes", std::vector<Vertex>(h->apexes.begin(), h->apexes.end()));
  } else if (const auto* s = std::get_if<StarWitness>(&w)) {
    add(EventKind::WitnessAssembled, Check::StarWitness, "blue star")
        .with("center", std::vector<Vertex>{s->center})
        .with("leaves", s->leaves);
  } else {
    const auto& f = std::get<FanWitness>(w);
    add(EventKind::WitnessAssembled, Check::FanWitness, "blue fan")
        .with("center", std::vector<Vertex>{f.center})
        .with("blades", f.blades);
  }
  trace_.branch = std::move(branch);
  return trace_;
}

namespace {

// Field accessors; a missing or mistyped field makes the event fail replay.
struct Fields {
  const TraceEvent& e;
  bool ok = true;

  std::vector<Vertex> vertices(std::string_view name) {
    if (const auto* v = e.find(name))
      if (const auto* vs = std::get_if<std::vector<Vertex>>(v)) return *vs;
    ok = false;
    return {};
  }
  std::vector<Edge> edges(std::string_view name) {
    if (const auto* v = e.find(name))
      if (const auto* es = std::get_if<std::vector<Edge>>(v)) return *es;
    ok = false;
    return {};
  }
  std::int64_t number(std::string_view name) {
    if (const auto* v = e.find(name))
      if (const auto* x = std::get_if<std::int64_t>(v)) return *x;
    ok = false;
    return 0;
  }
  Vertex single(std::string_view name) {
    auto vs = vertices(name);
    if (vs.size() != 1) {
      ok = false;
      return 0;
    }
    return vs[0];
  }
};

bool all_distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool is_red_clique(const Graph& g, const std::vector<Vertex>& vs) {
  if (!all_distinct(vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool is_blue_matching(const Graph& g, const std::vector<Edge>& es) {
  VertexSet seen(g.order());
  for (const Edge& e : es) {
    if (e.u == e.v || g.has_edge(e.u, e.v) || seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.insert(e.u);
    seen.insert(e.v);
  }
  return true;
}

bool is_star_forest(const Graph& g, const std::vector<Vertex>& vs) {
  const VertexSet members = VertexSet::of(g.order(), vs);
  VertexSet unseen = members;
  while (auto start = unseen.first()) {
    std::vector<Vertex> comp{*start};
    unseen.erase(*start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      VertexSet nb = g.neighbors(comp[i]) & unseen;
      nb.for_each([&](Vertex v) {
        comp.push_back(v);
        unseen.erase(v);
      });
    }
    if (comp.size() <= 2) continue;
    const VertexSet cs = VertexSet::of(g.order(), comp);
    std::size_t centers = 0;
    for (Vertex v : comp) {
      const std::size_t d = g.degree_in(v, cs);
      if (d == comp.size() - 1) ++centers;
      else if (d != 1) return false;
    }
    if (centers != 1) return false;
  }
  return true;
}

bool check_partition(const Graph& g, Fields& f) {
  const auto hub = f.single("hub");
  const auto rim = f.vertices("rim");
  const auto u1 = VertexSet::of(g.order(), f.vertices("U1"));
  const auto u2 = VertexSet::of(g.order(), f.vertices("U2"));
  std::array<VertexSet, 4> parts{VertexSet::of(g.order(), f.vertices("W1")), VertexSet::of(g.order(), f.vertices("W2")),
                                 VertexSet::of(g.order(), f.vertices("W3")), VertexSet::of(g.order(), f.vertices("W4"))};
  if (!f.ok || rim.size() != 4) return false;
  std::array<VertexSet, 4> expect{VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order()),
                                  VertexSet(g.order())};
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == hub || u1.contains(w) || u2.contains(w)) continue;
    const bool even_side = g.has_edge(w, rim[1]) || g.has_edge(w, rim[3]);
    const bool odd_side = g.has_edge(w, rim[0]) || g.has_edge(w, rim[2]);
    if (even_side && odd_side) return false;
    if (even_side) expect[0].insert(w);
    else if (odd_side) expect[1].insert(w);
    else if (g.degree_in(w, u2) >= g.degree_in(w, u1)) expect[2].insert(w);
    else expect[3].insert(w);
  }
  return parts == expect;
}

}  // namespace

bool replay_event(const Graph& g, const TraceEvent& event, std::size_t n) {
  for (const auto& [name, value] : event.payload) {
    if (const auto* vs = std::get_if<std::vector<Vertex>>(&value)) {
      for (Vertex v : *vs)
        if (v >= g.order()) return false;
    } else if (const auto* es = std::get_if<std::vector<Edge>>(&value)) {
      for (const Edge& e : *es)
        if (e.u >= g.order() || e.v >= g.order()) return false;
    }
  }

  Fields f{event};
  bool result = true;
  switch (event.check) {
    case Check::None:
      break;
    case Check::RedClique:
      result = is_red_clique(g, f.vertices("vertices"));
      break;
    case Check::RedIndependent:
      result = is_red_clique(complement(g), f.vertices("vertices"));
      break;
    case Check::RedEdges:
      for (const Edge& e : f.edges("edges")) result = result && g.has_edge(e.u, e.v);
      break;
    case Check::BlueMatching:
      result = is_blue_matching(g, f.edges("edges"));
      break;
    case Check::BlueMatchingTouching: {
      const auto es = f.edges("edges");
      const auto touch = VertexSet::of(g.order(), f.vertices("touch"));
      result = is_blue_matching(g, es);
      for (const Edge& e : es) result = result && (touch.contains(e.u) || touch.contains(e.v));
      break;
    }
    case Check::CommonRedNeighbors: {
      const auto of = f.vertices("of");
      VertexSet expect = g.all_vertices();
      for (Vertex v : of) expect.intersect_words(g.row(v));
      for (Vertex v : f.vertices("exclude")) expect.erase(v);
      result = !of.empty() && VertexSet::of(g.order(), f.vertices("set")) == expect;
      break;
    }
    case Check::BlueNeighborhood: {
      const Vertex c = f.single("center");
      if (!f.ok) return false;
      VertexSet expect = g.all_vertices() - g.neighbors(c);
      expect.erase(c);
      result = VertexSet::of(g.order(), f.vertices("set")) == expect;
      break;
    }
    case Check::Triangle: {
      const auto vs = f.vertices("vertices");
      result = vs.size() == 3 && is_red_clique(g, vs);
      break;
    }
    case Check::K4: {
      const auto vs = f.vertices("vertices");
      result = vs.size() == 4 && is_red_clique(g, vs);
      break;
    }
    case Check::K5MinusE: {
      const auto c = f.vertices("clique");
      const Vertex x = f.single("fifth");
      result = c.size() == 4 && valid_k5_minus_e(g, K5MinusE{{c[0], c[1], c[2], c[3]}, x});
      break;
    }
    case Check::W4: {
      const Vertex hub = f.single("hub");
      const auto rim = f.vertices("rim");
      result = rim.size() == 4 && valid_w4(g, W4Embedding{hub, {rim[0], rim[1], rim[2], rim[3]}});
      break;
    }
    case Check::MinDegreeAtLeast:
      result = g.min_degree() >= static_cast<std::size_t>(f.number("bound"));
      break;
    case Check::MaxBlueDegreeBelow: {
      const auto bound = static_cast<std::size_t>(f.number("bound"));
      for (Vertex v = 0; v < g.order() && result; ++v) result = g.order() - 1 - g.degree(v) < bound;
      break;
    }
    case Check::BlueDegreeAtLeast: {
      const Vertex v = f.single("vertex");
      if (!f.ok) return false;
      result = g.order() - 1 - g.degree(v) >= static_cast<std::size_t>(f.number("bound"));
      break;
    }
    case Check::RedDegreeIntoAtLeast: {
      const Vertex v = f.single("vertex");
      const auto s = VertexSet::of(g.order(), f.vertices("set"));
      if (!f.ok) return false;
      result = g.degree_in(v, s) >= static_cast<std::size_t>(f.number("bound"));
      break;
    }
    case Check::StarForest:
      result = is_star_forest(g, f.vertices("vertices"));
      break;
    case Check::MaxInducedDegree: {
      const auto vs = f.vertices("vertices");
      const auto s = VertexSet::of(g.order(), vs);
      const auto bound = static_cast<std::size_t>(f.number("bound"));
      for (Vertex v : vs) result = result && g.degree_in(v, s) <= bound;
      break;
    }
    case Check::SizeAtLeast:
      result = f.vertices("set").size() >= static_cast<std::size_t>(f.number("bound"));
      break;
    case Check::SizeAtMost:
      result = f.vertices("set").size() <= static_cast<std::size_t>(f.number("bound"));
      break;
    case Check::Disjoint:
      result = !VertexSet::of(g.order(), f.vertices("a")).intersects(VertexSet::of(g.order(), f.vertices("b")));
      break;
    case Check::AllRedAdjacent: {
      const auto a = f.vertices("a");
      const auto b = f.vertices("b");
      for (Vertex x : a)
        for (Vertex y : b) result = result && (x == y || g.has_edge(x, y));
      break;
    }
    case Check::NoRedEdgeBetween: {
      const auto a = f.vertices("a");
      const auto b = f.vertices("b");
      for (Vertex x : a)
        for (Vertex y : b) result = result && !g.has_edge(x, y);
      break;
    }
    case Check::WPartition:
      result = check_partition(g, f);
      break;
    case Check::HajosWitness: {
      const auto t = f.vertices("triangle");
      const auto a = f.vertices("apexes");
      result = t.size() == 3 && a.size() == 3 && valid_hajos(g, HajosEmbedding{{t[0], t[1], t[2]}, {a[0], a[1], a[2]}});
      break;
    }
    case Check::StarWitness: {
      const Vertex c = f.single("center");
      result = valid_star(g, StarWitness{c, f.vertices("leaves")}, n);
      break;
    }
    case Check::FanWitness: {
      const Vertex c = f.single("center");
      result = valid_fan(g, FanWitness{c, f.edges("blades")}, n);
      break;
    }
  }
  return result && f.ok;
}

bool replay_trace(const Graph& g, const ProofTrace& trace) {
  if (trace.events.empty()) return false;
  const EventKind last = trace.events.back().kind;
  if (last != EventKind::WitnessAssembled && last != EventKind::ProofGap) return false;
  for (std::size_t i = 0; i + 1 < trace.events.size(); ++i) {
    const EventKind k = trace.events[i].kind;
    if (k == EventKind::WitnessAssembled || k == EventKind::ProofGap) return false;
  }
  for (const TraceEvent& e : trace.events)
    if (!replay_event(g, e, trace.n)) return false;
  return true;
}

}  // namespace hajos
