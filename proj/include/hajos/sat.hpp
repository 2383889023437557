#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

/// Edge (u, v), u < v, of K_N maps to variable 1 + its lexicographic rank. Variable 0 is unused.
class EdgeVarMap {
 public:
  EdgeVarMap() = default;
  explicit EdgeVarMap(std::size_t order);

  std::size_t order() const { return order_; }
  int count() const { return static_cast<int>(order_ * (order_ - (order_ > 0 ? 1 : 0)) / 2); }
  int var(Vertex u, Vertex v) const;
  Edge edge(int var) const;

  bool operator==(const EdgeVarMap&) const = default;

 private:
  std::size_t order_ = 0;
};

/// At-most-`bound` constraint over `literals`, encoded as a sequential counter whose
/// register s(i, j), i in [1, m-1], j in [1, bound], is variable first_aux + (i-1)*bound + (j-1).
/// s(i, j) means "at least j of the first i literals are true".
struct CounterSpec {
  Vertex vertex = 0;
  int bound = 0;
  std::vector<int> literals;
  int first_aux = 0;
  int aux_count = 0;

  bool operator==(const CounterSpec&) const = default;
};

struct CnfFormula {
  int num_vars = 0;
  /// Variables 1..edge_vars are edge variables; the rest are counter registers.
  int edge_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<CounterSpec> counters;

  bool operator==(const CnfFormula&) const = default;
};

/// Truth value per edge variable; red[k - 1] is variable k, true = red.
struct Assignment {
  std::vector<bool> red;
  bool operator==(const Assignment&) const = default;
};

/// The distinct edge sets of Hajós graphs on vertex set {0, ..., 5}.
std::vector<std::array<Edge, 9>> hajos_copies_on_six();

/// Permutations of {0..5} mapping the Hajós graph onto itself, counted by brute force.
std::size_t hajos_automorphism_count();

struct StarArrowingCnf {
  CnfFormula formula;
  EdgeVarMap map;
};

/// Satisfiable iff some colouring of K_N has no red Hajós graph and no blue K_{1,n}:
/// one clause per Hajós copy forbidding all nine edges red, and per vertex at most n-1
/// blue (negated) incident edge literals. 2 <= N <= 64, n >= 1.
StarArrowingCnf emit_star_arrowing_cnf(std::size_t order, std::size_t n);

/// Streams the clauses of emit_star_arrowing_cnf without storing them: Hajós clauses by
/// 6-subset in lexicographic order, then each vertex's counter. Returns the formula header
/// (num_vars, edge_vars, counters) with an empty clause list.
CnfFormula for_each_star_arrowing_clause(std::size_t order, std::size_t n,
                                         const std::function<void(const std::vector<int>&)>& emit);

/// Clause count of emit_star_arrowing_cnf(order, n), computed without generating the clauses.
std::size_t star_arrowing_clause_count(std::size_t order, std::size_t n);

/// Completes the counter registers from their definition and evaluates every clause.
/// Throws IncompleteAssignment unless the assignment covers exactly the edge variables.
bool eval_cnf(const CnfFormula& f, const Assignment& a);

Assignment assignment_from_graph(const Graph& g, const EdgeVarMap& m);
Graph graph_from_assignment(const Assignment& a, const EdgeVarMap& m);

/// DIMACS with "c edge u v var k" and "c counter ..." comment lines ahead of the header.
void write_dimacs(std::ostream& out, const CnfFormula& f, const EdgeVarMap& m);
void write_star_arrowing_dimacs(std::ostream& out, std::size_t order, std::size_t n);

struct ParsedDimacs {
  CnfFormula formula;
  EdgeVarMap map;
};
/// Inverse of write_dimacs. Throws MalformedDimacs.
ParsedDimacs parse_dimacs(std::istream& in);

}  // namespace hajos
