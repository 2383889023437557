#include "hajos/matching.hpp"

#include <algorithm>
#include <limits>

#include "hajos/error.hpp"

namespace hajos {

namespace {

constexpr Vertex kNil = std::numeric_limits<Vertex>::max();

// Edmonds' blossom algorithm, BFS formulation with explicit base tracking.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, kNil), parent_(n_), base_(n_), used_(n_), in_blossom_(n_), lca_mark_(n_) {}

  std::vector<Vertex> run(std::size_t target) {
    std::size_t size = greedy();
    for (Vertex root = 0; root < n_ && size < target; ++root) {
      if (match_[root] != kNil) continue;
      Vertex end = find_path(root);
      if (end == kNil) continue;
      augment(end);
      ++size;
    }
    return match_;
  }

 private:
  std::size_t greedy() {
    std::size_t size = 0;
    for (Vertex u = 0; u < n_; ++u) {
      if (match_[u] != kNil) continue;
      auto r = g_.row(u);
      for (auto v = bits::next(r, u + 1); v; v = bits::next(r, *v + 1)) {
        if (match_[*v] == kNil) {
          match_[u] = *v;
          match_[*v] = u;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  Vertex lca(Vertex a, Vertex b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    while (true) {
      a = base_[a];
      lca_mark_[a] = true;
      if (match_[a] == kNil) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNil);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      auto r = g_.row(v);
      for (auto to = bits::next(r, 0); to; to = bits::next(r, *to + 1)) {
        Vertex t = *to;
        if (base_[v] == base_[t] || match_[v] == t) continue;
        if (t == root || (match_[t] != kNil && parent_[match_[t]] != kNil)) {
          Vertex cur = lca(v, t);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, t);
          mark_path(t, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[t] == kNil) {
          parent_[t] = v;
          if (match_[t] == kNil) return t;
          Vertex next = match_[t];
          used_[next] = true;
          queue_.push_back(next);
        }
      }
    }
    return kNil;
  }

  void augment(Vertex v) {
    while (v != kNil) {
      Vertex pv = parent_[v];
      Vertex ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_, lca_mark_;
  std::vector<Vertex> queue_;
};

Matching collect(const std::vector<Vertex>& mate) {
  Matching m;
  for (Vertex u = 0; u < mate.size(); ++u)
    if (mate[u] != kNil && u < mate[u]) m.edges.push_back({u, mate[u]});
  return m;
}

struct BruteForce {
  const Graph& g;
  std::vector<Edge> current;
  std::vector<Edge> best;

  void search(std::uint32_t remaining) {
    const std::size_t bound = current.size() + static_cast<std::size_t>(std::popcount(remaining)) / 2;
    if (bound <= best.size()) return;
    if (remaining == 0) {
      best = current;
      return;
    }
    const Vertex v = static_cast<Vertex>(std::countr_zero(remaining));
    const std::uint32_t rest = remaining & ~(1U << v);
    for (std::uint32_t cand = rest; cand != 0; cand &= cand - 1) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(cand));
      if (!g.has_edge(v, u)) continue;
      current.push_back({v, u});
      search(rest & ~(1U << u));
      current.pop_back();
    }
    // v left exposed.
    search(rest);
  }
};

}  // namespace

VertexSet Matching::covered(std::size_t universe) const {
  VertexSet s(universe);
  for (const Edge& e : edges) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

bool Matching::valid_in(const Graph& g) const {
  VertexSet seen(g.order());
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || !g.has_edge(e.u, e.v)) return false;
    if (seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.insert(e.u);
    seen.insert(e.v);
  }
  return true;
}

Matching maximum_matching(const Graph& g) {
  return collect(Blossom(g).run(std::numeric_limits<std::size_t>::max()));
}

std::optional<Matching> matching_of_size(const Graph& g, std::size_t k) {
  if (2 * k > g.order()) return std::nullopt;
  Matching m = collect(Blossom(g).run(k));
  if (m.size() < k) return std::nullopt;
  m.edges.resize(k);
  return m;
}

Matching brute_force_maximum_matching(const Graph& g) {
  if (g.order() > 16) throw OrderTooLargeForOracle("order " + std::to_string(g.order()) + " > 16");
  BruteForce bf{g, {}, {}};
  const std::uint32_t all = g.order() == 0 ? 0U : static_cast<std::uint32_t>((1ULL << g.order()) - 1);
  bf.search(all);
  Matching m{std::move(bf.best)};
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace hajos
