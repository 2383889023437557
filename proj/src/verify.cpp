#include "hajos/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hajos/constructions.hpp"
#include "hajos/error.hpp"
#include "hajos/random.hpp"

namespace hajos {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string target_name(Target t) {
  return (t.kind == TargetKind::Star ? "K_{1," : "F_{") + std::to_string(t.n) + "}";
}

void note_failure(VerificationReport& r, const Graph& g) {
  ++r.failed;
  if (r.counterexamples.size() < VerificationReport::kMaxCounterexamples) r.counterexamples.push_back(graph6_encode(g));
}

// Runs body(i) for i in [0, count) on `threads` workers pulling indices from a shared counter.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

std::optional<Witness> detect(const Graph& g, Target target) {
  if (auto h = find_hajos(g)) return Witness{*h};
  if (target.kind == TargetKind::Star) {
    if (auto s = find_blue_star(g, target.n)) return Witness{*s};
  } else if (auto f = find_blue_fan(g, target.n)) {
    return Witness{*f};
  }
  return std::nullopt;
}

}  // namespace

bool arrows(const Graph& g, Target target) { return detect(g, target).has_value(); }

VerificationReport verify_all_colorings(std::size_t order, Target target, unsigned threads) {
  const std::size_t pairs = order * (order - (order > 0 ? 1 : 0)) / 2;
  if (pairs > 28) throw TooManyColorings(std::to_string(pairs) + " pairs on " + std::to_string(order) + " vertices exceeds 28");
  const auto start = Clock::now();
  std::vector<Edge> pair_list;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) pair_list.push_back(Edge{u, v});

  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::size_t shards = std::max<std::size_t>(1, std::min<std::uint64_t>(total, 64));
  std::vector<VerificationReport> parts(shards);
  parallel_for(shards, threads, [&](std::size_t s) {
    VerificationReport& part = parts[s];
    const std::uint64_t lo = total * s / shards;
    const std::uint64_t hi = total * (s + 1) / shards;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      GraphBuilder b(order);
      for (std::size_t k = 0; k < pairs; ++k)
        if ((mask >> k) & 1U) b.add_edge(pair_list[k].u, pair_list[k].v);
      const Graph g = std::move(b).build();
      ++part.total;
      if (auto w = detect(g, target)) {
        ++part.passed;
        ++part.case_histogram[std::holds_alternative<HajosEmbedding>(*w) ? "red_hajos" : "blue_target"];
        if (part.samples.size() < VerificationReport::kMaxSamples) part.samples.push_back(*w);
      } else {
        note_failure(part, g);
      }
    }
  });

  VerificationReport r;
  r.statement = "every graph on " + std::to_string(order) + " vertices contains a red Hajos graph or a blue " +
                target_name(target);
  for (const auto& p : parts) {
    r.total += p.total;
    r.passed += p.passed;
    r.failed += p.failed;
    for (const auto& c : p.counterexamples)
      if (r.counterexamples.size() < VerificationReport::kMaxCounterexamples) r.counterexamples.push_back(c);
    for (const auto& w : p.samples)
      if (r.samples.size() < VerificationReport::kMaxSamples) r.samples.push_back(w);
    for (const auto& [k, v] : p.case_histogram) r.case_histogram[k] += v;
  }
  r.wall_ms = ms_since(start);
  return r;
}

std::vector<std::vector<ComponentShape>> path_cycle_shapes(std::size_t order) {
  std::vector<ComponentShape> options;
  for (std::size_t s = order; s >= 3; --s) options.push_back({ComponentShape::Kind::Cycle, s});
  for (std::size_t s = order; s >= 1; --s) options.push_back({ComponentShape::Kind::Path, s});
  // options is non-increasing; a shape uses option indices in non-decreasing order.
  std::vector<std::vector<ComponentShape>> out;
  std::vector<ComponentShape> cur;
  auto go = [&](auto&& self, std::size_t remaining, std::size_t from) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < options.size(); ++i) {
      if (options[i].size > remaining) continue;
      cur.push_back(options[i]);
      self(self, remaining - options[i].size, i);
      cur.pop_back();
    }
  };
  go(go, order, 0);
  return out;
}

Graph shape_graph(const std::vector<ComponentShape>& shape) {
  std::size_t order = 0;
  for (const auto& c : shape) order += c.size;
  GraphBuilder b(order);
  Vertex base = 0;
  for (const auto& c : shape) {
    for (Vertex i = 0; i + 1 < c.size; ++i) b.add_edge(base + i, base + i + 1);
    if (c.kind == ComponentShape::Kind::Cycle) b.add_edge(base, base + static_cast<Vertex>(c.size) - 1);
    base += static_cast<Vertex>(c.size);
  }
  return std::move(b).build();
}

void enumerate_path_cycle_graphs(std::size_t order, const std::function<void(const Graph&)>& visit) {
  if (order > 32) throw InvalidParameters("enumerate_path_cycle_graphs supports N <= 32");
  for (const auto& shape : path_cycle_shapes(order)) visit(shape_graph(shape));
}

std::uint64_t labeled_path_cycle_count(std::size_t order) {
  if (order > 20) throw InvalidParameters("labeled_path_cycle_count is exact only for N <= 20");
  std::uint64_t factorial = 1;
  for (std::uint64_t i = 2; i <= order; ++i) factorial *= i;
  std::uint64_t sum = 0;
  for (const auto& shape : path_cycle_shapes(order)) {
    std::uint64_t count = factorial;
    for (std::size_t i = 0; i < shape.size();) {
      std::size_t j = i;
      while (j < shape.size() && shape[j] == shape[i]) ++j;
      const auto& c = shape[i];
      const std::uint64_t aut = c.kind == ComponentShape::Kind::Cycle ? 2 * c.size : (c.size >= 2 ? 2 : 1);
      for (std::size_t m = 1; m <= j - i; ++m) count /= aut * m;
      i = j;
    }
    sum += count;
  }
  return sum;
}

VerificationReport verify_star_upper_via_structure(std::size_t n) {
  if (n != 2 && n != 3) throw InvalidParameters("structure verification covers n = 2 and n = 3 only");
  const auto start = Clock::now();
  VerificationReport r;
  auto check = [&](const Graph& blue_graph) {
    const Graph g = complement(blue_graph);
    ++r.total;
    if (auto h = find_hajos(g)) {
      ++r.passed;
      ++r.case_histogram["red_hajos"];
      if (r.samples.size() < VerificationReport::kMaxSamples) r.samples.push_back(*h);
    } else {
      note_failure(r, g);
    }
  };
  if (n == 2) {
    r.statement = "every graph on 6 vertices whose complement is a matching contains a Hajos graph";
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = u + 1; v < 6; ++v) pairs.push_back(Edge{u, v});
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::uint32_t touched = 0;
      bool disjoint = true;
      std::vector<Edge> chosen;
      for (std::size_t k = 0; k < pairs.size() && disjoint; ++k) {
        if (!((mask >> k) & 1U)) continue;
        const std::uint32_t ends = (1U << pairs[k].u) | (1U << pairs[k].v);
        disjoint = (touched & ends) == 0;
        touched |= ends;
        chosen.push_back(pairs[k]);
      }
      if (disjoint) check(Graph::from_edges(6, chosen));
    }
  } else {
    r.statement = "every graph on 9 vertices whose complement has maximum degree <= 2 contains a Hajos graph";
    enumerate_path_cycle_graphs(9, check);
  }
  r.wall_ms = ms_since(start);
  return r;
}

VerificationReport random_sweep(Target target, std::size_t trials, std::uint64_t seed, unsigned threads) {
  const std::size_t order = target.threshold_order();
  if (order > kMaxOrder) throw OrderTooLarge("threshold order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
  const auto start = Clock::now();

  struct Trial {
    bool ok = false;
    std::optional<Witness> witness;
    std::string tag, branch, gap, graph6;
    double ms = 0;
  };
  std::vector<Trial> results(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const Graph g = random_graph(order, sweep_probability(i), rng);
    Trial& t = results[i];
    const auto t0 = Clock::now();
    try {
      Extraction e = arrow_witness(g, target);
      t.ok = verify_witness(g, e.witness, target.n) && replay_trace(g, e.trace);
      t.tag = std::string(to_string(e.trace.terminal));
      t.branch = e.trace.branch;
      t.witness = std::move(e.witness);
      if (!t.ok) t.gap = "witness or trace failed validation";
    } catch (const ProofGap& gap) {
      t.tag = "ProofGap";
      t.branch = "proof-gap";
      t.gap = gap.note();
    }
    t.ms = ms_since(t0);
    if (!t.ok) t.graph6 = graph6_encode(g);
  });

  VerificationReport r;
  r.statement = "random graphs on " + std::to_string(order) + " vertices contain a red Hajos graph or a blue " +
                target_name(target) + " (seed " + std::to_string(seed) + ")";
  for (std::size_t i = 0; i < trials; ++i) {
    const Trial& t = results[i];
    ++r.total;
    ++r.case_histogram[t.tag];
    ++r.branch_histogram[t.branch];
    r.max_trial_ms = std::max(r.max_trial_ms, t.ms);
    if (t.ok) {
      ++r.passed;
      if (r.samples.size() < VerificationReport::kMaxSamples) r.samples.push_back(*t.witness);
    } else {
      ++r.failed;
      r.proof_gaps.push_back("trial " + std::to_string(i) + ": " + t.gap);
      if (r.counterexamples.size() < VerificationReport::kMaxCounterexamples) r.counterexamples.push_back(t.graph6);
    }
  }
  r.wall_ms = ms_since(start);
  return r;
}

VerificationReport verify_construction(std::size_t n, ConstructionKind kind) {
  const auto start = Clock::now();
  Graph g;
  Target target;
  std::size_t expected = 0;
  std::string name;
  switch (kind) {
    case ConstructionKind::StarEven:
      g = star_even_lower(n);
      target = Target::star(n);
      expected = 2 * n + 1;
      name = "K_{n,n,1}";
      break;
    case ConstructionKind::StarOdd:
      g = star_odd_lower(n);
      target = Target::star(n);
      expected = 2 * n + 2;
      name = "join of two matchings";
      break;
    case ConstructionKind::Fan:
      g = fan_lower(n);
      target = Target::fan(n);
      expected = 4 * n + 1;
      name = "K_{2n,2n,1}";
      break;
  }
  VerificationReport r;
  r.statement = name + " with n=" + std::to_string(n) + " has order " + std::to_string(expected) +
                " and contains neither a red Hajos graph nor a blue " + target_name(target);
  r.total = 1;
  const bool ok = g.order() == expected && g.audit() && !detect(g, target);
  if (ok) {
    r.passed = 1;
    ++r.case_histogram["avoids_both"];
  } else {
    note_failure(r, g);
  }
  r.wall_ms = ms_since(start);
  return r;
}

}  // namespace hajos
