#include "hajos/sat.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "hajos/constructions.hpp"
#include "hajos/error.hpp"

namespace hajos {

EdgeVarMap::EdgeVarMap(std::size_t order) : order_(order) {
  if (order > 64) throw OrderTooLarge("edge variable maps cover N <= 64, got " + std::to_string(order));
}

int EdgeVarMap::var(Vertex u, Vertex v) const {
  if (u == v) throw LoopEdge("no variable for a loop");
  if (u > v) std::swap(u, v);
  if (v >= order_) throw EndpointOutOfRange(std::to_string(v) + " >= " + std::to_string(order_));
  // Pairs (a, b) with a < u come first: sum over a < u of (N - 1 - a).
  const std::size_t before = static_cast<std::size_t>(u) * (2 * order_ - u - 1) / 2;
  return static_cast<int>(before + (v - u - 1)) + 1;
}

Edge EdgeVarMap::edge(int var) const {
  if (var < 1 || var > count()) throw EndpointOutOfRange("variable " + std::to_string(var) + " is not an edge variable");
  int rank = var - 1;
  Vertex u = 0;
  while (rank >= static_cast<int>(order_ - 1 - u)) {
    rank -= static_cast<int>(order_ - 1 - u);
    ++u;
  }
  return Edge{u, u + 1 + static_cast<Vertex>(rank)};
}

std::vector<std::array<Edge, 9>> hajos_copies_on_six() {
  const auto base = hajos_graph().edges();
  std::array<Vertex, 6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::array<Edge, 9>> seen;
  do {
    std::array<Edge, 9> copy{};
    for (std::size_t i = 0; i < 9; ++i) copy[i] = Edge::make(perm[base[i].u], perm[base[i].v]);
    std::sort(copy.begin(), copy.end());
    seen.insert(copy);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

std::size_t hajos_automorphism_count() {
  const Graph h = hajos_graph();
  std::array<Vertex, 6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    if (permute(h, perm) == h) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// Emits the sequential-counter clauses for "at most k of lits"; registers start at `first`.
void counter_clauses(const std::vector<int>& lits, int k, int first, const std::function<void(const std::vector<int>&)>& emit) {
  const int m = static_cast<int>(lits.size());
  if (k >= m) return;
  if (k == 0) {
    for (int x : lits) emit({-x});
    return;
  }
  auto s = [&](int i, int j) { return first + (i - 1) * k + (j - 1); };
  emit({-lits[0], s(1, 1)});
  for (int j = 2; j <= k; ++j) emit({-s(1, j)});
  for (int i = 2; i <= m - 1; ++i) {
    const int x = lits[static_cast<std::size_t>(i - 1)];
    emit({-x, s(i, 1)});
    emit({-s(i - 1, 1), s(i, 1)});
    for (int j = 2; j <= k; ++j) {
      emit({-x, -s(i - 1, j - 1), s(i, j)});
      emit({-s(i - 1, j), s(i, j)});
    }
    emit({-x, -s(i - 1, k)});
  }
  emit({-lits[static_cast<std::size_t>(m - 1)], -s(m - 1, k)});
}

std::size_t counter_clause_count(std::size_t m, std::size_t k) {
  if (k >= m) return 0;
  if (k == 0) return m;
  return k + (m - 2) * (2 * k + 1) + 1;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_params(std::size_t order, std::size_t n) {
  if (order > 64) throw OrderTooLarge("SAT emission covers N <= 64, got " + std::to_string(order));
  if (order < 2 || n < 1) throw InvalidParameters("SAT emission needs N >= 2 and n >= 1");
}

}  // namespace

namespace {

CnfFormula star_header(std::size_t order, std::size_t n) {
  check_params(order, n);
  const EdgeVarMap map(order);
  CnfFormula f;
  f.edge_vars = map.count();
  int next_var = f.edge_vars + 1;
  const int bound = static_cast<int>(n) - 1;
  for (Vertex v = 0; v < order; ++v) {
    CounterSpec c;
    c.vertex = v;
    c.bound = bound;
    for (Vertex u = 0; u < order; ++u)
      if (u != v) c.literals.push_back(-map.var(u, v));
    const int m = static_cast<int>(c.literals.size());
    c.first_aux = next_var;
    c.aux_count = (bound >= 1 && bound < m) ? (m - 1) * bound : 0;
    next_var += c.aux_count;
    f.counters.push_back(std::move(c));
  }
  f.num_vars = next_var - 1;
  return f;
}

}  // namespace

CnfFormula for_each_star_arrowing_clause(std::size_t order, std::size_t n,
                                         const std::function<void(const std::vector<int>&)>& emit) {
  CnfFormula f = star_header(order, n);
  const EdgeVarMap map(order);
  if (order >= 6) {
    const auto copies = hajos_copies_on_six();
    std::array<Vertex, 6> s{0, 1, 2, 3, 4, 5};
    std::vector<int> clause(9);
    while (true) {
      for (const auto& copy : copies) {
        for (std::size_t i = 0; i < 9; ++i) clause[i] = -map.var(s[copy[i].u], s[copy[i].v]);
        emit(clause);
      }
      // Next 6-subset of [0, order) in lexicographic order.
      int i = 5;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == order - 6 + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++s[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < 6; ++j) s[j] = s[j - 1] + 1;
    }
  }
  for (const CounterSpec& c : f.counters) counter_clauses(c.literals, c.bound, c.first_aux, emit);
  return f;
}

std::size_t star_arrowing_clause_count(std::size_t order, std::size_t n) {
  check_params(order, n);
  const std::size_t hajos = order >= 6 ? binomial(order, 6) * hajos_copies_on_six().size() : 0;
  return hajos + order * counter_clause_count(order - 1, n - 1);
}

StarArrowingCnf emit_star_arrowing_cnf(std::size_t order, std::size_t n) {
  std::vector<std::vector<int>> clauses;
  CnfFormula f = for_each_star_arrowing_clause(order, n, [&](const std::vector<int>& c) { clauses.push_back(c); });
  f.clauses = std::move(clauses);
  return {std::move(f), EdgeVarMap(order)};
}

bool eval_cnf(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.red.size()) != f.edge_vars)
    throw IncompleteAssignment("assignment has " + std::to_string(a.red.size()) + " values for " +
                               std::to_string(f.edge_vars) + " edge variables");
  std::vector<signed char> value(static_cast<std::size_t>(f.num_vars) + 1, -1);
  for (int v = 1; v <= f.edge_vars; ++v) value[static_cast<std::size_t>(v)] = a.red[static_cast<std::size_t>(v - 1)] ? 1 : 0;
  auto lit_true = [&](int lit) {
    const signed char x = value[static_cast<std::size_t>(std::abs(lit))];
    if (x < 0) throw IncompleteAssignment("variable " + std::to_string(std::abs(lit)) + " has no value");
    return lit > 0 ? x == 1 : x == 0;
  };
  for (const CounterSpec& c : f.counters) {
    if (c.aux_count == 0) continue;
    int seen = 0;
    const int k = c.bound;
    for (int i = 1; i < static_cast<int>(c.literals.size()); ++i) {
      if (lit_true(c.literals[static_cast<std::size_t>(i - 1)])) ++seen;
      for (int j = 1; j <= k; ++j) value[static_cast<std::size_t>(c.first_aux + (i - 1) * k + (j - 1))] = seen >= j ? 1 : 0;
    }
  }
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      if (std::abs(lit) > f.num_vars || lit == 0) throw IncompleteAssignment("literal " + std::to_string(lit) + " out of range");
      if (lit_true(lit)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Assignment assignment_from_graph(const Graph& g, const EdgeVarMap& m) {
  if (g.order() != m.order())
    throw OrderMismatch("graph order " + std::to_string(g.order()) + " vs map order " + std::to_string(m.order()));
  Assignment a;
  a.red.resize(static_cast<std::size_t>(m.count()));
  for (int k = 1; k <= m.count(); ++k) {
    const Edge e = m.edge(k);
    a.red[static_cast<std::size_t>(k - 1)] = g.has_edge(e.u, e.v);
  }
  return a;
}

Graph graph_from_assignment(const Assignment& a, const EdgeVarMap& m) {
  if (static_cast<int>(a.red.size()) != m.count())
    throw OrderMismatch("assignment has " + std::to_string(a.red.size()) + " values, map has " + std::to_string(m.count()));
  GraphBuilder b(m.order());
  for (int k = 1; k <= m.count(); ++k)
    if (a.red[static_cast<std::size_t>(k - 1)]) {
      const Edge e = m.edge(k);
      b.add_edge(e.u, e.v);
    }
  return std::move(b).build();
}

namespace {

void write_clause(std::ostream& out, const std::vector<int>& clause) {
  for (int lit : clause) out << lit << ' ';
  out << "0\n";
}

void write_header(std::ostream& out, const CnfFormula& f, const EdgeVarMap& m, std::size_t clause_count) {
  for (int k = 1; k <= m.count(); ++k) {
    const Edge e = m.edge(k);
    out << "c edge " << e.u << ' ' << e.v << " var " << k << '\n';
  }
  for (const CounterSpec& c : f.counters) {
    out << "c counter " << c.vertex << ' ' << c.bound << ' ' << c.first_aux << ' ' << c.aux_count;
    for (int lit : c.literals) out << ' ' << lit;
    out << '\n';
  }
  out << "p cnf " << f.num_vars << ' ' << clause_count << '\n';
}

}  // namespace

void write_dimacs(std::ostream& out, const CnfFormula& f, const EdgeVarMap& m) {
  write_header(out, f, m, f.clauses.size());
  for (const auto& clause : f.clauses) write_clause(out, clause);
}

void write_star_arrowing_dimacs(std::ostream& out, std::size_t order, std::size_t n) {
  const CnfFormula header = star_header(order, n);
  write_header(out, header, EdgeVarMap(order), star_arrowing_clause_count(order, n));
  for_each_star_arrowing_clause(order, n, [&](const std::vector<int>& clause) { write_clause(out, clause); });
}

ParsedDimacs parse_dimacs(std::istream& in) {
  ParsedDimacs p;
  std::string line;
  bool have_header = false;
  std::size_t declared = 0;
  std::size_t max_edge_var = 0;
  std::vector<int> pending;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> MalformedDimacs {
    return MalformedDimacs("line " + std::to_string(line_no) + ": " + why);
  };
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (line[0] == 'c') {
      std::string c, tag;
      ss >> c >> tag;
      if (tag == "edge") {
        Vertex u = 0, v = 0;
        std::string var_word;
        int k = 0;
        if (!(ss >> u >> v >> var_word >> k) || var_word != "var") throw fail("bad edge comment");
        if (k != static_cast<int>(edges.size()) + 1) throw fail("edge comments out of order");
        edges.push_back(Edge{u, v});
        max_edge_var = static_cast<std::size_t>(k);
      } else if (tag == "counter") {
        CounterSpec c;
        if (!(ss >> c.vertex >> c.bound >> c.first_aux >> c.aux_count)) throw fail("bad counter comment");
        for (int lit = 0; ss >> lit;) c.literals.push_back(lit);
        p.formula.counters.push_back(std::move(c));
      }
      continue;
    }
    if (line[0] == 'p') {
      std::string p_word, cnf;
      int vars = 0;
      if (!(ss >> p_word >> cnf >> vars >> declared) || cnf != "cnf" || vars < 0) throw fail("bad problem line");
      p.formula.num_vars = vars;
      have_header = true;
      continue;
    }
    if (!have_header) throw fail("clause before problem line");
    for (int lit = 0; ss >> lit;) {
      if (lit == 0) {
        p.formula.clauses.push_back(pending);
        pending.clear();
      } else {
        if (std::abs(lit) > p.formula.num_vars) throw fail("literal out of range");
        pending.push_back(lit);
      }
    }
    if (!ss.eof()) throw fail("non-integer token");
  }
  if (!have_header) throw MalformedDimacs("missing problem line");
  if (!pending.empty()) throw MalformedDimacs("unterminated clause");
  if (p.formula.clauses.size() != declared)
    throw MalformedDimacs("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(p.formula.clauses.size()));
  // Recover N from the edge count N(N-1)/2.
  std::size_t order = 0;
  while (order * (order - (order > 0 ? 1 : 0)) / 2 < max_edge_var) ++order;
  if (order * (order - (order > 0 ? 1 : 0)) / 2 != max_edge_var) throw MalformedDimacs("edge comments do not cover a complete graph");
  p.map = EdgeVarMap(order);
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (p.map.edge(static_cast<int>(k) + 1) != edges[k]) throw MalformedDimacs("edge comments disagree with lexicographic order");
  p.formula.edge_vars = static_cast<int>(max_edge_var);
  return p;
}

}  // namespace hajos
