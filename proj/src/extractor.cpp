#include "hajos/extractor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hajos/error.hpp"
#include "hajos/matching.hpp"

namespace hajos {

std::size_t Target::threshold_order() const { return kind == TargetKind::Star ? star_threshold(n) : fan_threshold(n); }

namespace {

using VV = std::vector<Vertex>;

std::int64_t num(std::size_t x) { return static_cast<std::int64_t>(x); }

HajosEmbedding hajos(Vertex a, Vertex b, Vertex c, Vertex on_ab, Vertex on_ac, Vertex on_bc) {
  return HajosEmbedding{{a, b, c}, {on_ab, on_ac, on_bc}};
}

bool blue(const Graph& g, Vertex x, Vertex y) { return x != y && !g.has_edge(x, y); }

VertexSet without(VertexSet s, std::initializer_list<Vertex> drop) {
  for (Vertex v : drop) s.erase(v);
  return s;
}

VertexSet common(const Graph& g, Vertex a, Vertex b, const VertexSet& within) {
  VertexSet s = within;
  s.intersect_words(g.row(a));
  s.intersect_words(g.row(b));
  return s;
}

// Connected components of g[s], each sorted, ordered by smallest member.
std::vector<VV> components(const Graph& g, const VertexSet& s) {
  std::vector<VV> out;
  VertexSet unseen = s;
  while (auto start = unseen.first()) {
    VV comp{*start};
    unseen.erase(*start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      VertexSet nb = g.neighbors(comp[i]) & unseen;
      nb.for_each([&](Vertex v) {
        comp.push_back(v);
        unseen.erase(v);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Edge> to_host(const Matching& m, const InducedSubgraph& h) {
  std::vector<Edge> out;
  for (const Edge& e : m.edges) out.push_back(Edge::make(h.to_host[e.u], h.to_host[e.v]));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Stars

class StarExtractor {
 public:
  StarExtractor(const Graph& g, std::size_t n) : g_(g), n_(n), rec_(n, CaseTag::StarDirectBlue) {}

  Extraction run() {
    if (auto s = find_blue_star(g_, n_)) {
      rec_.enter(CaseTag::StarDirectBlue, Check::BlueDegreeAtLeast, "a vertex has n blue neighbours")
          .with("vertex", VV{s->center})
          .with("bound", num(n_));
      return done(*s, "direct-blue");
    }
    const std::size_t odd = n_ % 2;
    rec_.claim(Check::MaxBlueDegreeBelow, "no blue K_{1,n}").with("bound", num(n_));
    rec_.claim(Check::MinDegreeAtLeast, "red minimum degree").with("bound", num(n_ + 2 + odd));

    if (n_ == 2) return special_n2();
    const auto k4 = find_k4(g_);
    if (!k4) return case1();
    if (auto k = find_k5_minus_e(g_)) {
      rec_.enter(CaseTag::StarCase2_K5e, Check::K5MinusE, "red K5-e found")
          .with("clique", VV(k->clique.begin(), k->clique.end()))
          .with("fifth", VV{k->fifth});
      return case2(*k, "case2");
    }
    return odd ? case3_odd(*k4) : case3_even(*k4);
  }

 private:
  Extraction done(const Witness& w, const char* branch) { return {w, rec_.finish(w, branch)}; }

  // Blue degree at most one on six vertices: the red graph contains K_{2,2,2}.
  Extraction special_n2() {
    rec_.enter(CaseTag::StarSpecialN2, Check::None, "blue graph is a matching");
    const std::size_t order = g_.order();
    std::vector<Edge> blue_edges;
    VV lonely;
    for (Vertex v = 0; v < order; ++v) {
      bool matched = false;
      for (Vertex u = 0; u < order; ++u)
        if (blue(g_, u, v)) {
          matched = true;
          if (v < u) blue_edges.push_back(Edge{v, u});
        }
      if (!matched) lonely.push_back(v);
    }
    rec_.matching(Check::BlueMatching, "blue edges").with("edges", blue_edges);
    std::vector<Edge> parts = blue_edges;
    for (std::size_t i = 0; i + 1 < lonely.size(); i += 2) parts.push_back(Edge{lonely[i], lonely[i + 1]});
    std::sort(parts.begin(), parts.end());
    if (parts.size() != 3) rec_.gap("blue matching does not extend to three parts");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        rec_.claim(Check::AllRedAdjacent, "parts of K_{2,2,2} are joined")
            .with("a", VV{parts[i].u, parts[i].v})
            .with("b", VV{parts[j].u, parts[j].v});
    const HajosEmbedding h =
        hajos(parts[0].u, parts[1].u, parts[2].u, parts[2].v, parts[1].v, parts[0].v);
    return done(h, "n2-k222");
  }

  // No red K4: a triangle exists and its edges have pairwise distinct private common neighbours.
  Extraction case1() {
    rec_.enter(CaseTag::StarCase1_NoK4, Check::None, "no red K4");
    const auto tri = find_triangle(g_);
    if (!tri) rec_.gap("no red triangle");
    const auto [a, b, c] = *tri;
    rec_.claim(Check::Triangle, "red triangle u1u2u3").with("vertices", VV{a, b, c});
    const VertexSet all = g_.all_vertices();
    const std::array<std::array<Vertex, 3>, 3> pairs{{{a, b, c}, {a, c, b}, {b, c, a}}};
    for (const auto& [x, y, z] : pairs)
      rec_.set_built(Check::CommonRedNeighbors, "d(ui)+d(uj) >= |G|+2 leaves a common neighbour")
          .with("of", VV{x, y})
          .with("exclude", VV{z})
          .with("set", without(common(g_, x, y, all), {z}));
    const auto h = hajos_on_triangle(g_, a, b, c);
    if (!h) rec_.gap("apexes of the triangle are not distinct");
    return done(*h, "case1");
  }

  Extraction case2(const K5MinusE& k, const char* branch) {
    const VV five{k.clique[0], k.clique[1], k.clique[2], k.clique[3], k.fifth};
    VertexSet w = g_.all_vertices();
    for (Vertex v : five) w.erase(v);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const Vertex p = k.clique[i];
        const Vertex q = k.clique[j];
        const VertexSet shared = common(g_, p, q, w);
        const auto v6 = shared.first();
        if (!v6) continue;
        rec_.set_built(Check::CommonRedNeighbors, "two clique vertices share a neighbour v6 in W")
            .with("of", VV{p, q})
            .with("exclude", five)
            .with("set", shared);
        const Vertex x = k.fifth;
        // v2 is the pair member seen by v5, v3 the first remaining clique vertex seen by v5.
        const Vertex v2 = g_.has_edge(x, p) ? p : q;
        const Vertex v1 = v2 == p ? q : p;
        VV rest;
        for (Vertex c : k.clique)
          if (c != p && c != q) rest.push_back(c);
        if (!g_.has_edge(x, v2) || (!g_.has_edge(x, rest[0]) && !g_.has_edge(x, rest[1])))
          rec_.gap("fifth vertex misses two clique vertices");
        const Vertex v3 = g_.has_edge(x, rest[0]) ? rest[0] : rest[1];
        const Vertex v4 = v3 == rest[0] ? rest[1] : rest[0];
        return done(hajos(v1, v2, v3, *v6, v4, x), branch);
      }
    rec_.gap("no two clique vertices share a neighbour outside the K5-e");
  }

  Extraction case3_even(const std::array<Vertex, 4>& k4) {
    rec_.enter(CaseTag::StarCase3_K4Even, Check::K4, "red K4, no K5-e, n even").with("vertices", VV(k4.begin(), k4.end()));
    VertexSet outside = g_.all_vertices();
    for (Vertex v : k4) outside.erase(v);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const VertexSet shared = common(g_, k4[i], k4[j], outside);
        const auto w5 = shared.first();
        if (!w5) continue;
        const Vertex w1 = k4[i];
        const Vertex w2 = k4[j];
        VV others;
        for (Vertex v : k4)
          if (v != w1 && v != w2) others.push_back(v);
        const Vertex w3 = others[0];
        const Vertex w4 = others[1];
        rec_.set_built(Check::CommonRedNeighbors, "w1, w2 share w5 outside the K4")
            .with("of", VV{w1, w2})
            .with("exclude", VV(k4.begin(), k4.end()))
            .with("set", shared);
        if (g_.has_edge(*w5, w3) || g_.has_edge(*w5, w4)) rec_.gap("w5 sees w3 or w4, so K5-e exists");
        rec_.claim(Check::NoRedEdgeBetween, "w5 misses w3 and w4").with("a", VV{*w5}).with("b", VV{w3, w4});

        const VertexSet x = without(outside, {*w5});
        rec_.set_built(Check::None, "X = V minus w1..w5").with("X", x);
        if (auto w6 = common(g_, w1, w3, x).first()) {
          rec_.claim(Check::RedEdges, "w6 in X sees w1 and w3").with("edges", std::vector<Edge>{Edge::make(w1, *w6), Edge::make(w3, *w6)});
          return done(hajos(w1, w2, w3, *w5, *w6, w4), "case3-even-w6");
        }
        if (auto w6 = common(g_, w2, w3, x).first()) {
          rec_.claim(Check::RedEdges, "w6 in X sees w2 and w3").with("edges", std::vector<Edge>{Edge::make(w2, *w6), Edge::make(w3, *w6)});
          return done(hajos(w1, w2, w3, *w5, w4, *w6), "case3-even-w6");
        }
        rec_.claim(Check::Disjoint, "N_X(w3) misses N_X(w1) and N_X(w2)")
            .with("a", common(g_, w1, w1, x) | common(g_, w2, w2, x))
            .with("b", common(g_, w3, w3, x));

        const VertexSet both = g_.common_neighbors(w1, w2);
        rec_.set_built(Check::CommonRedNeighbors, "common neighbourhood of w1 and w2")
            .with("of", VV{w1, w2})
            .with("exclude", VV{})
            .with("set", both);
        // A red P3 inside N(w1)∩N(w2) completes a K5-e with w1 and w2.
        for (auto z = both.first(); z; z = both.next(*z + 1)) {
          VertexSet nz = both;
          nz.intersect_words(g_.row(*z));
          const VV ends = nz.smallest(2);
          if (ends.size() < 2) continue;
          std::array<Vertex, 4> clique{w1, w2, *z, ends[0]};
          std::sort(clique.begin(), clique.end());
          const K5MinusE k{clique, ends[1]};
          rec_.set_case(CaseTag::StarCase2_K5e);
          rec_.add(EventKind::Reroute, Check::K5MinusE, "red P3 in N(w1)∩N(w2) gives K5-e")
              .with("clique", VV(clique.begin(), clique.end()))
              .with("fifth", VV{k.fifth});
          return case2(k, "case3-even-reroute");
        }
        rec_.gap("no red P3 inside N(w1)∩N(w2)");
      }
    rec_.gap("no two K4 vertices share an outside neighbour");
  }

  Extraction case3_odd(const std::array<Vertex, 4>& k4) {
    rec_.enter(CaseTag::StarCase3_K4Odd, Check::K4, "red K4, no K5-e, n odd").with("vertices", VV(k4.begin(), k4.end()));
    const auto [w1, w2, w3, w4] = k4;
    const VertexSet y = without(g_.all_vertices(), {w1, w2, w3, w4});
    rec_.set_built(Check::None, "Y = V minus the K4").with("Y", y);
    const VertexSet s12 = common(g_, w1, w2, y);
    const VertexSet s23 = common(g_, w2, w3, y);
    rec_.set_built(Check::CommonRedNeighbors, "common neighbours of w1, w2 in Y")
        .with("of", VV{w1, w2})
        .with("exclude", VV{w1, w2, w3, w4})
        .with("set", s12);
    rec_.set_built(Check::CommonRedNeighbors, "common neighbours of w2, w3 in Y")
        .with("of", VV{w2, w3})
        .with("exclude", VV{w1, w2, w3, w4})
        .with("set", s23);
    const auto w5 = s12.first();
    const auto w6 = s23.first();
    if (!w5 || !w6) rec_.gap("a pair of K4 vertices has no common neighbour in Y");
    if (*w5 == *w6) rec_.gap("w5 = w6, so K5-e exists");
    return done(hajos(w1, w2, w3, *w5, w4, *w6), "case3-odd");
  }

  const Graph& g_;
  std::size_t n_;
  TraceRecorder rec_;
};

// ---------------------------------------------------------------------------
// Fans

class FanExtractor {
 public:
  FanExtractor(const Graph& g, std::size_t n) : g_(g), n_(n), all_(g.all_vertices()), rec_(n, CaseTag::FanCase1_BigBlueDegree) {}

  Extraction run() {
    const std::size_t order = g_.order();
    Vertex u = 0;
    std::size_t best = 0;
    for (Vertex v = 0; v < order; ++v) {
      const std::size_t d = order - 1 - g_.degree(v);
      if (d > best) {
        best = d;
        u = v;
      }
    }
    if (best >= 2 * n_ + 2) return case1(u);
    return case2();
  }

 private:
  Extraction done(const Witness& w, const char* branch) { return {w, rec_.finish(w, branch)}; }

  // --- Some vertex u has blue degree at least 2n+2.
  Extraction case1(Vertex u) {
    rec_.enter(CaseTag::FanCase1_BigBlueDegree, Check::BlueDegreeAtLeast, "maximum blue degree >= 2n+2")
        .with("vertex", VV{u})
        .with("bound", num(2 * n_ + 2));
    const VertexSet s = without(all_ - g_.neighbors(u), {u});
    rec_.set_built(Check::BlueNeighborhood, "H' = blue neighbourhood of u").with("center", VV{u}).with("set", s);
    const InducedSubgraph h = induced(g_, s);
    const Matching m = maximum_matching(complement(h.graph));
    const std::vector<Edge> edges = to_host(m, h);
    rec_.matching(Check::BlueMatching, "M = maximum matching of H'").with("edges", edges).with("size", num(edges.size()));
    if (edges.size() >= n_) {
      FanWitness f{u, std::vector<Edge>(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(n_))};
      return done(f, "case1-blue-fan");
    }

    VertexSet left = s;
    for (const Edge& e : edges) {
      left.erase(e.u);
      left.erase(e.v);
    }
    rec_.set_built(Check::RedClique, "vertices of H' missed by M").with("vertices", left);
    const std::size_t l = left.size();
    if (l >= 6) {
      const VV c = left.smallest(6);
      return done(hajos(c[0], c[1], c[2], c[3], c[4], c[5]), "case1-clique6");
    }
    if (l == 5) {
      const Edge e = edges.front();
      const Vertex y = g_.degree_in(e.u, left) >= 4 ? e.u : e.v;
      if (g_.degree_in(y, left) < 4) rec_.gap("neither end of an M edge sees four leftover vertices");
      rec_.claim(Check::RedDegreeIntoAtLeast, "y1 sees four leftover vertices")
          .with("vertex", VV{y})
          .with("set", left)
          .with("bound", 4);
      VertexSet seen = left;
      seen.intersect_words(g_.row(y));
      const VV abcd = seen.smallest(4);
      const Vertex last = *(left - VertexSet::of(g_.order(), abcd)).first();
      return done(hajos(abcd[0], abcd[1], abcd[2], y, abcd[3], last), "case1-leftover5");
    }
    if (l == 4) {
      if (edges.size() < 2) rec_.gap("fewer than two M edges with four leftover vertices");
      std::array<Vertex, 2> ys{};
      for (std::size_t i = 0; i < 2; ++i) {
        const Edge e = edges[i];
        ys[i] = g_.degree_in(e.u, left) >= 3 ? e.u : e.v;
        if (g_.degree_in(ys[i], left) < 3) rec_.gap("neither end of an M edge sees three leftover vertices");
        rec_.claim(Check::RedDegreeIntoAtLeast, "M edge endpoint sees three leftover vertices")
            .with("vertex", VV{ys[i]})
            .with("set", left)
            .with("bound", 3);
      }
      VertexSet a = left;
      a.intersect_words(g_.row(ys[0]));
      VertexSet b = left;
      b.intersect_words(g_.row(ys[1]));
      const Vertex q = *(a & b).first();
      const Vertex p = *without(a, {q}).first();
      const Vertex r = *without(b, {q, p}).first();
      const Vertex d = *without(left, {p, q, r}).first();
      return done(hajos(p, q, r, ys[0], d, ys[1]), "case1-leftover4");
    }
    rec_.gap("fewer than four leftover vertices");
  }

  // --- Red minimum degree is at least 2n.
  Extraction case2() {
    rec_.enter(CaseTag::FanCase2_MinDegree, Check::MinDegreeAtLeast, "red minimum degree >= 2n").with("bound", num(2 * n_));
    const auto w4 = find_w4(g_);
    if (!w4) {
      rec_.set_case(CaseTag::FanDirectBlue_NoW4);
      rec_.claim(Check::None, "no red W4; the blue fan guaranteed in its place is searched directly");
      const auto f = find_blue_fan(g_, n_);
      if (!f) rec_.gap("neither a red W4 nor a blue fan");
      return done(*f, "no-w4-lemma");
    }
    u0_ = w4->hub;
    rim_ = w4->rim;
    rec_.set_built(Check::W4, "red W4 with hub u0 and rim u1u2u3u4").with("hub", VV{u0_}).with("rim", VV(rim_.begin(), rim_.end()));
    const auto [u1, u2, u3, u4] = rim_;

    if (auto r = claim1()) return std::move(*r);
    rec_.claim(Check::NoRedEdgeBetween, "u1u3 is not red").with("a", VV{u1}).with("b", VV{u3});
    rec_.claim(Check::NoRedEdgeBetween, "u2u4 is not red").with("a", VV{u2}).with("b", VV{u4});

    for (std::size_t i = 0; i < 4; ++i) {
      const Vertex a = rim_[i];
      const Vertex b = rim_[(i + 1) % 4];
      const VertexSet shared = without(g_.common_neighbors(a, b), {u0_});
      const auto u5 = shared.first();
      if (!u5) continue;
      rec_.set_built(Check::CommonRedNeighbors, "consecutive rim vertices share a neighbour besides u0")
          .with("of", VV{a, b})
          .with("exclude", VV{u0_})
          .with("set", shared);
      return done(hajos(a, b, u0_, *u5, rim_[(i + 3) % 4], rim_[(i + 2) % 4]), "cross-common-neighbor");
    }

    u1_set_ = without(g_.common_neighbors(u2, u4), {u0_});
    u2_set_ = without(g_.common_neighbors(u1, u3), {u0_});
    rec_.set_built(Check::CommonRedNeighbors, "U1 = N(u2)∩N(u4) minus u0").with("of", VV{u2, u4}).with("exclude", VV{u0_}).with("set", u1_set_);
    rec_.set_built(Check::CommonRedNeighbors, "U2 = N(u1)∩N(u3) minus u0").with("of", VV{u1, u3}).with("exclude", VV{u0_}).with("set", u2_set_);
    const std::size_t lower = 2 * n_ - 4;
    if (u1_set_.size() < lower || u2_set_.size() < lower) rec_.gap("|U1| or |U2| below 2n-4");
    rec_.claim(Check::SizeAtLeast, "|U1| >= 2n-4").with("set", u1_set_).with("bound", num(lower));
    rec_.claim(Check::SizeAtLeast, "|U2| >= 2n-4").with("set", u2_set_).with("bound", num(lower));
    if (u1_set_.intersects(u2_set_)) rec_.gap("U1 and U2 intersect");
    rec_.claim(Check::Disjoint, "U1 and U2 are disjoint").with("a", u1_set_).with("b", u2_set_);

    if (auto r = claim2(without(u1_set_, {u1, u3}), u2, u4)) return std::move(*r);
    if (auto r = claim2(without(u2_set_, {u2, u4}), u1, u3)) return std::move(*r);
    if (u1_set_.size() >= 2 * n_ + 1) return claim3(u1_set_, u1, u3);
    if (u2_set_.size() >= 2 * n_ + 1) return claim3(u2_set_, u2, u4);
    return matchings();
  }

  // A red chord of the rim puts a K5-e on the wheel; an outside common neighbour of two
  // chord-triangle vertices then completes a Hajós graph.
  std::optional<Extraction> claim1() {
    const auto [u1, u2, u3, u4] = rim_;
    std::array<Vertex, 3> triple{};
    if (g_.has_edge(u1, u3)) triple = {u1, u2, u3};
    else if (g_.has_edge(u2, u4)) triple = {u2, u3, u4};
    else return std::nullopt;
    rec_.claim(Check::RedEdges, "the rim has a red chord").with("edges", std::vector<Edge>{Edge::make(triple[0], triple[2])});
    const VertexSet outside = without(all_, {u0_, u1, u2, u3, u4});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const VertexSet shared = common(g_, triple[i], triple[j], outside);
        const auto u5 = shared.first();
        if (!u5) continue;
        rec_.set_built(Check::CommonRedNeighbors, "u5 outside the W4 sees two chord-triangle vertices")
            .with("of", VV{triple[i], triple[j]})
            .with("exclude", VV{u0_, u1, u2, u3, u4})
            .with("set", shared);
        const InducedSubgraph h = induced(g_, VertexSet::of(g_.order(), {u0_, u1, u2, u3, u4, *u5}));
        const auto local = find_hajos(h.graph);
        if (!local) rec_.gap("W4 with a chord and u5 carries no Hajos graph");
        HajosEmbedding e;
        for (std::size_t k = 0; k < 3; ++k) {
          e.triangle[k] = h.to_host[local->triangle[k]];
          e.apexes[k] = h.to_host[local->apexes[k]];
        }
        return done(e, "claim1-chord");
      }
    rec_.gap("no outside common neighbour for the chord triangle");
  }

  // Either g[inner] is a star forest, or a P4 or triangle in it yields a Hajós graph
  // together with the two outer rim vertices o1, o2 that see all of inner.
  std::optional<Extraction> claim2(const VertexSet& inner, Vertex o1, Vertex o2) {
    for (auto x2 = inner.first(); x2; x2 = inner.next(*x2 + 1)) {
      VertexSet n2 = inner;
      n2.intersect_words(g_.row(*x2));
      if (n2.size() < 2) continue;
      for (auto x3 = n2.first(); x3; x3 = n2.next(*x3 + 1)) {
        VertexSet n3 = without(inner, {*x2});
        n3.intersect_words(g_.row(*x3));
        if (n3.empty()) continue;
        const VertexSet starts = without(n2, {*x3});
        for (auto x1 = starts.first(); x1; x1 = starts.next(*x1 + 1)) {
          const auto x4 = without(n3, {*x1}).first();
          if (!x4) continue;
          rec_.claim(Check::RedEdges, "red P4 x1x2x3x4 inside U")
              .with("edges", std::vector<Edge>{Edge::make(*x1, *x2), Edge::make(*x2, *x3), Edge::make(*x3, *x4)});
          return done(hajos(*x2, *x3, o1, o2, *x1, *x4), "claim2-p4");
        }
      }
    }
    const InducedSubgraph h = induced(g_, inner);
    if (const auto t = find_triangle(h.graph)) {
      const VV tri{h.to_host[(*t)[0]], h.to_host[(*t)[1]], h.to_host[(*t)[2]]};
      rec_.claim(Check::Triangle, "red triangle inside U").with("vertices", tri);
      const VertexSet outside = without(all_, {tri[0], tri[1], tri[2], o1, o2});
      const std::array<std::array<Vertex, 3>, 3> pairs{{{tri[0], tri[1], tri[2]}, {tri[0], tri[2], tri[1]}, {tri[1], tri[2], tri[0]}}};
      for (const auto& [a, b, c] : pairs)
        if (auto x4 = common(g_, a, b, outside).first()) return done(hajos(a, b, c, *x4, o1, o2), "claim2-triangle");
      rec_.gap("triangle inside U has no outside common neighbour");
    }
    rec_.claim(Check::StarForest, "components of g[U] are stars").with("vertices", inner);
    return std::nullopt;
  }

  // Star with the given vertices: centre has degree >= 2, or the smaller end of a single edge.
  struct Star {
    Vertex center = 0;
    bool big = false;
    VV leaves;
  };

  Star star_of(const VV& comp, const VertexSet& host) const {
    Star s{comp[0], false, {}};
    for (Vertex v : comp)
      if (g_.degree_in(v, host) >= 2) {
        s.center = v;
        s.big = true;
      }
    for (Vertex v : comp)
      if (v != s.center) s.leaves.push_back(v);
    return s;
  }

  // |U| >= 2n+1: a blue fan centred at c inside U.
  Extraction claim3(const VertexSet& u, Vertex c, Vertex partner) {
    const VertexSet rest = without(u, {c});
    rec_.claim(Check::SizeAtLeast, "|U| >= 2n+1").with("set", u).with("bound", num(2 * n_ + 1));
    rec_.claim(Check::StarForest, "components of g[U minus centre] are stars").with("vertices", rest);
    std::vector<Star> stars;
    for (const VV& comp : components(g_, rest))
      if (comp.size() >= 2) stars.push_back(star_of(comp, rest));
    std::vector<Edge> blades;
    VertexSet used(g_.order());
    auto take = [&](Vertex a, Vertex b) {
      blades.push_back(Edge::make(a, b));
      used.insert(a);
      used.insert(b);
    };
    const std::size_t k = stars.size();
    if (k >= 2) {
      for (std::size_t i = 0; i < k; ++i) take(stars[i].center, stars[(i + 1) % k].leaves.front());
    } else if (k == 1) {
      take(stars[0].center, partner);
    }
    const VV left = (rest - used).to_vector();
    for (std::size_t i = 0; i + 1 < left.size(); i += 2) take(left[i], left[i + 1]);
    rec_.matching(Check::BlueMatching, "cyclic component pairing plus blue clique").with("edges", blades);
    if (blades.size() < n_) rec_.gap("U too small for n blades");
    for (const Edge& e : blades)
      if (!blue(g_, e.u, e.v)) rec_.gap("claim-3 pairing uses a red edge");
    blades.resize(n_);
    std::sort(blades.begin(), blades.end());
    return done(FanWitness{c, blades}, "claim3-fan");
  }

  // The side of the W partition that carries the fan.
  struct Side {
    VertexSet u, wa, wb, opposite;
    Vertex center = 0, partner = 0, o1 = 0, o2 = 0;
  };

  Extraction matchings() {
    const auto [u1, u2, u3, u4] = rim_;
    const VertexSet w = without(all_ - u1_set_ - u2_set_, {u0_});
    const VertexSet w1 = w & (g_.neighbors(u2) | g_.neighbors(u4));
    const VertexSet w2 = w & (g_.neighbors(u1) | g_.neighbors(u3));
    if (w1.intersects(w2)) rec_.gap("W1 and W2 intersect");
    VertexSet w3(g_.order());
    VertexSet w4(g_.order());
    (w - w1 - w2).for_each([&](Vertex x) {
      if (g_.degree_in(x, u2_set_) >= g_.degree_in(x, u1_set_)) w3.insert(x);
      else w4.insert(x);
    });
    rec_.set_built(Check::WPartition, "W split into W1..W4")
        .with("hub", VV{u0_})
        .with("rim", VV(rim_.begin(), rim_.end()))
        .with("U1", u1_set_)
        .with("U2", u2_set_)
        .with("W1", w1)
        .with("W2", w2)
        .with("W3", w3)
        .with("W4", w4);
    auto floor_at_zero = [](std::size_t a, std::size_t b) { return a > b ? a - b : 0; };
    const std::size_t need1 = floor_at_zero(2 * n_ - 1, u1_set_.size());
    const std::size_t need2 = floor_at_zero(2 * n_ - 1, u2_set_.size());
    if (w.size() > 9 || w1.size() < need1 || w2.size() < need2 || (w3 | w4).size() > 3) rec_.gap("W partition sizes out of range");
    rec_.claim(Check::SizeAtMost, "|W| <= 9").with("set", w).with("bound", 9);
    rec_.claim(Check::SizeAtLeast, "|W1| >= 2n-1-|U1|").with("set", w1).with("bound", num(need1));
    rec_.claim(Check::SizeAtLeast, "|W2| >= 2n-1-|U2|").with("set", w2).with("bound", num(need2));
    rec_.claim(Check::SizeAtMost, "|W3|+|W4| <= 3").with("set", w3 | w4).with("bound", 3);

    Side side;
    if (u1_set_.size() + w1.size() + w3.size() >= 2 * n_ + 1) side = Side{u1_set_, w1, w3, u2_set_, u1, u3, u2, u4};
    else side = Side{u2_set_, w2, w4, u1_set_, u2, u4, u1, u3};
    const VertexSet span = side.u | side.wa | side.wb;
    if (span.size() < 2 * n_ + 1) rec_.gap("neither side reaches 2n+1 vertices");
    rec_.claim(Check::SizeAtLeast, "chosen side has at least 2n+1 vertices").with("set", span).with("bound", num(2 * n_ + 1));
    side_ = side;

    const std::size_t t = 2 * n_ + 1 - side.u.size();
    ws_ = (side.wa | side.wb).smallest(t);
    f_ = without(side.u, {side.center, side.partner});
    rec_.set_built(Check::None, "w1..wt, the t smallest candidates from the W side").with("w", ws_);

    const std::vector<Edge> m1 = build_m1();
    rec_.matching(Check::BlueMatchingTouching, "M1 covers as many of w1..wt as possible").with("edges", m1).with("touch", ws_);
    VertexSet covered(g_.order());
    for (const Edge& e : m1) {
      covered.insert(e.u);
      covered.insert(e.v);
    }
    VV uncovered;
    for (Vertex x : ws_)
      if (!covered.contains(x)) uncovered.push_back(x);
    const VertexSet free = f_ - covered;
    rec_.set_built(Check::None, "vertices of U left free by M1").with("free", free).with("uncovered", uncovered);

    if (!uncovered.empty()) {
      if (!all_red(uncovered, free)) rec_.gap("an uncovered w misses a free vertex of U");
      rec_.claim(Check::AllRedAdjacent, "uncovered w see every free vertex of U").with("a", uncovered).with("b", free);
    }
    if (uncovered.size() >= 2) return claim4(uncovered, free);
    return claim5(m1, uncovered, free);
  }

  bool all_red(const VV& a, const VertexSet& b) const {
    for (Vertex x : a)
      if (!without(b, {x}).is_subset_of(g_.neighbors(x))) return false;
    return true;
  }

  // Maximum coverage of ws_: subsets in decreasing size, then lexicographic; each subset is tried
  // with every internal blue pairing and the rest matched into F by augmenting paths.
  std::vector<Edge> build_m1() const {
    const std::size_t t = ws_.size();
    for (std::size_t size = t; size > 0; --size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        VV subset;
        for (std::size_t i : pick) subset.push_back(ws_[i]);
        if (auto m = cover(subset)) return *m;
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == t - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return {};
  }

  std::optional<std::vector<Edge>> cover(const VV& subset) const {
    std::vector<Edge> pairs;
    VV deferred;
    std::optional<std::vector<Edge>> found;
    std::vector<bool> taken(subset.size(), false);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (found) return;
      while (i < subset.size() && taken[i]) ++i;
      if (i == subset.size()) {
        if (auto into = match_into_f(deferred)) {
          std::vector<Edge> all = pairs;
          all.insert(all.end(), into->begin(), into->end());
          std::sort(all.begin(), all.end());
          found = all;
        }
        return;
      }
      taken[i] = true;
      deferred.push_back(subset[i]);
      go(i + 1);
      deferred.pop_back();
      for (std::size_t j = i + 1; j < subset.size() && !found; ++j) {
        if (taken[j] || !blue(g_, subset[i], subset[j])) continue;
        taken[j] = true;
        pairs.push_back(Edge::make(subset[i], subset[j]));
        go(i + 1);
        pairs.pop_back();
        taken[j] = false;
      }
      taken[i] = false;
    };
    go(0);
    return found;
  }

  // Kuhn's augmenting-path matching of `from` into F along blue edges.
  std::optional<std::vector<Edge>> match_into_f(const VV& from) const {
    const VV f = f_.to_vector();
    std::vector<int> owner(f.size(), -1);
    for (std::size_t i = 0; i < from.size(); ++i) {
      std::vector<bool> visited(f.size(), false);
      std::function<bool(std::size_t)> augment = [&](std::size_t a) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          if (visited[j] || !blue(g_, from[a], f[j])) continue;
          visited[j] = true;
          if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
            owner[j] = static_cast<int>(a);
            return true;
          }
        }
        return false;
      };
      if (!augment(i)) return std::nullopt;
    }
    std::vector<Edge> out;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (owner[j] >= 0) out.push_back(Edge::make(from[static_cast<std::size_t>(owner[j])], f[j]));
    return out;
  }

  // Two or more w's stay uncovered: each configuration closes into a Hajós graph.
  Extraction claim4(const VV& r, const VertexSet& free) {
    const Side& s = side_;
    if (r.size() >= 3) {
      const VV three{r[0], r[1], r[2]};
      const VV apex = free.smallest(3);
      if (!g_.has_edge(r[0], r[1]) || !g_.has_edge(r[0], r[2]) || !g_.has_edge(r[1], r[2]) || apex.size() < 3)
        rec_.gap("three uncovered w do not span K_{1,1,1,3}");
      rec_.claim(Check::RedClique, "uncovered w1, w2, w3 form a red triangle").with("vertices", three);
      return done(hajos(r[0], r[1], r[2], apex[0], apex[1], apex[2]), "claim4-three-uncovered");
    }
    const Vertex a = r[0];
    const Vertex b = r[1];
    if (!g_.has_edge(a, b)) rec_.gap("two uncovered w are blue-adjacent");
    rec_.claim(Check::RedClique, "uncovered w1w2 is red").with("vertices", VV{a, b});
    const bool a_outer = s.wa.contains(a);
    const bool b_outer = s.wa.contains(b);

    if (a_outer && b_outer) {
      for (Vertex o : {s.o1, s.o2}) {
        if (!g_.has_edge(a, o) || !g_.has_edge(b, o)) continue;
        const VV apex = free.smallest(3);
        if (apex.size() < 3) rec_.gap("fewer than three free vertices");
        return done(hajos(a, b, o, apex[0], apex[1], apex[2]), "claim4-two-outer-shared");
      }
      const bool straight = g_.has_edge(a, s.o1) && g_.has_edge(b, s.o2);
      const Vertex oa = straight ? s.o1 : s.o2;
      const Vertex ob = straight ? s.o2 : s.o1;
      const VV xy = free.smallest(2);
      if (!g_.has_edge(a, oa) || !g_.has_edge(b, ob) || xy.size() < 2) rec_.gap("split outer configuration incomplete");
      return done(hajos(a, b, xy[1], xy[0], oa, ob), "claim4-two-outer-split");
    }

    if (!a_outer && !b_outer) {
      VertexSet cands = common(g_, a, b, s.opposite);
      for (auto z = cands.first(); z; z = cands.next(*z + 1)) {
        if (g_.degree_in(*z, s.opposite) > 1) continue;
        VertexSet apex = common(g_, a, b, free);
        apex.intersect_words(g_.row(*z));
        const VV three = apex.smallest(3);
        if (three.size() < 3) continue;
        rec_.claim(Check::MaxInducedDegree, "u_z has degree at most 1 in the opposite U").with("vertices", VV{*z}).with("bound", 1);
        return done(hajos(a, b, *z, three[0], three[1], three[2]), "claim4-two-opposite");
      }
      rec_.gap("no low-degree common neighbour u_z in the opposite U");
    }

    const Vertex wa = a_outer ? a : b;
    const Vertex wb = a_outer ? b : a;
    const Vertex o = g_.has_edge(wa, s.o1) ? s.o1 : s.o2;
    if (!g_.has_edge(wa, o)) rec_.gap("outer w sees neither outer vertex");
    VertexSet cands = s.opposite;
    cands.intersect_words(g_.row(wb));
    for (auto z = cands.first(); z; z = cands.next(*z + 1)) {
      if (g_.degree_in(*z, s.opposite) > 1) continue;
      VertexSet apex = common(g_, wa, wb, free);
      apex.intersect_words(g_.row(*z));
      const VV xy = apex.smallest(2);
      if (xy.size() < 2) continue;
      return done(hajos(wa, wb, xy[0], xy[1], o, *z), "claim4-mixed");
    }
    rec_.gap("no low-degree neighbour u_z of the neutral w in the opposite U");
  }

  // At most one w uncovered: M2 covers the star centres, M3 finishes in the residual.
  Extraction claim5(std::vector<Edge> m1, const VV& r, const VertexSet& free) {
    const Side& s = side_;
    rec_.claim(Check::StarForest, "free part of U is a star forest").with("vertices", free);
    const std::vector<VV> comps = components(g_, free);
    std::vector<Star> stars;
    for (const VV& c : comps) stars.push_back(star_of(c, free));
    std::vector<Edge> m2;
    const std::size_t k = comps.size();
    if (k >= 2) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!stars[i].big) continue;
        const Star& next = stars[(i + 1) % k];
        // Any vertex of degree <= 1 in the next component; a centre of degree >= 2 is skipped.
        const Vertex leaf = next.big ? next.leaves.front() : comps[(i + 1) % k].front();
        m2.push_back(Edge::make(stars[i].center, leaf));
      }
      if (!r.empty()) m2.push_back(Edge::make(r[0], s.partner));
    } else if (k == 1) {
      const Star& st = stars[0];
      if (r.empty()) {
        if (st.big) m2.push_back(Edge::make(st.center, s.partner));
      } else {
        if (!st.big) rec_.gap("single free component has no centre");
        const Vertex w1 = r[0];
        const Vertex v0 = st.center;
        if (s.wa.contains(w1)) {
          const Vertex o = g_.has_edge(w1, s.o1) ? s.o1 : s.o2;
          const Vertex other = o == s.o1 ? s.o2 : s.o1;
          return done(hajos(w1, v0, st.leaves[1], st.leaves[0], o, other), "claim5-outer");
        }
        for (Vertex v2 : st.leaves) {
          VertexSet shared = common(g_, w1, v2, s.opposite);
          const auto up = shared.first();
          if (!up) continue;
          const Vertex v1 = v2 == st.leaves[0] ? st.leaves[1] : st.leaves[0];
          return done(hajos(w1, v0, v2, v1, *up, s.o1), "claim5-opposite");
        }
        rec_.gap("uncovered neutral w shares no opposite neighbour with a leaf");
      }
    } else if (!r.empty()) {
      m2.push_back(Edge::make(r[0], s.partner));
    }
    std::sort(m2.begin(), m2.end());
    rec_.matching(Check::BlueMatching, "M2 covers every vertex of degree > 1").with("edges", m2);

    VertexSet residual = s.u | VertexSet::of(g_.order(), ws_);
    residual.erase(s.center);
    for (const auto* m : {&m1, &m2})
      for (const Edge& e : *m) {
        residual.erase(e.u);
        residual.erase(e.v);
      }
    for (Vertex v : residual.to_vector())
      if (g_.degree_in(v, residual) > 1) rec_.gap("residual vertex of red degree above 1");
    rec_.claim(Check::MaxInducedDegree, "residual red degree at most 1").with("vertices", residual).with("bound", 1);

    std::vector<Edge> blades = m1;
    blades.insert(blades.end(), m2.begin(), m2.end());
    if (blades.size() < n_) {
      const std::size_t need = n_ - blades.size();
      const InducedSubgraph h = induced(g_, residual);
      const auto m3 = matching_of_size(complement(h.graph), need);
      if (!m3) rec_.gap("residual has no blue matching of the remaining size");
      const std::vector<Edge> host = to_host(*m3, h);
      rec_.matching(Check::BlueMatching, "M3 in the residual").with("edges", host);
      blades.insert(blades.end(), host.begin(), host.end());
    }
    blades.resize(n_);
    std::sort(blades.begin(), blades.end());
    return done(FanWitness{s.center, blades}, "final-fan");
  }

  const Graph& g_;
  std::size_t n_;
  VertexSet all_;
  TraceRecorder rec_;
  Vertex u0_ = 0;
  std::array<Vertex, 4> rim_{};
  VertexSet u1_set_, u2_set_;
  Side side_;
  VV ws_;
  VertexSet f_;
};

void check_order(const Graph& g, std::size_t n, std::size_t expected, const char* what) {
  if (n < 2) throw InvalidParameters(std::string(what) + " needs n >= 2");
  if (g.order() != expected)
    throw InputSize(std::string(what) + " with n=" + std::to_string(n) + " needs order " + std::to_string(expected) +
                    ", got " + std::to_string(g.order()));
}

}  // namespace

Extraction extract_star(const Graph& g, std::size_t n) {
  check_order(g, n, star_threshold(n), "extract_star");
  return StarExtractor(g, n).run();
}

Extraction extract_fan(const Graph& g, std::size_t n) {
  check_order(g, n, fan_threshold(n), "extract_fan");
  return FanExtractor(g, n).run();
}

Extraction arrow_witness(const Graph& g, Target target) {
  return target.kind == TargetKind::Star ? extract_star(g, target.n) : extract_fan(g, target.n);
}

}  // namespace hajos
