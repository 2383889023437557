#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "hajos/constructions.hpp"
#include "hajos/detectors.hpp"
#include "hajos/error.hpp"
#include "hajos/extractor.hpp"
#include "hajos/graph.hpp"
#include "hajos/sat.hpp"
#include "hajos/serialize.hpp"
#include "hajos/verify.hpp"

namespace hajos::cli {

namespace {

struct Options {
  std::string kind;
  std::string pattern;
  std::string target;
  std::string mode;
  std::size_t n = 0;
  std::size_t order = 0;
  std::size_t chi = 0;
  std::size_t s = 0;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  bool timing = false;
  bool summary = false;
  std::string out_path;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Calls f(line_number, graph) for every non-blank graph6 line; a bad line is a usage error.
template <class F>
void for_each_graph(std::istream& in, F&& f) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const MalformedGraph6& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
    f(g);
  }
}

Target parse_target(const std::string& name, std::size_t n) {
  if (name == "star") return Target::star(n);
  if (name == "fan") return Target::fan(n);
  throw UsageError("--target must be star or fan");
}

Json vertices_json(std::span<const Vertex> vs) { return Json(std::vector<Vertex>(vs.begin(), vs.end())); }

int cmd_construct(const Options& o, std::ostream& out) {
  Graph g;
  if (o.kind == "star-even") g = star_even_lower(o.n);
  else if (o.kind == "star-odd") g = star_odd_lower(o.n);
  else if (o.kind == "fan") g = fan_lower(o.n);
  else {
    if (o.chi == 0 || o.s == 0 || o.order == 0) throw UsageError("burr needs --chi, --s and --order");
    g = burr_construction(o.chi, o.s, o.order);
  }
  out << graph6_encode(g) << '\n';
  return kOk;
}

int cmd_detect(const Options& o, std::istream& in, std::ostream& out) {
  const bool needs_n = o.pattern == "blue-star" || o.pattern == "blue-fan";
  if (needs_n && o.n == 0) throw UsageError("--n is required for " + o.pattern);
  for_each_graph(in, [&](const Graph& g) {
    Json w = nullptr;
    if (o.pattern == "hajos") {
      if (auto h = find_hajos(g)) w = witness_to_json(*h);
    } else if (o.pattern == "k4") {
      if (auto k = find_k4(g)) w = Json{{"vertices", vertices_json(*k)}};
    } else if (o.pattern == "triangle") {
      if (auto t = find_triangle(g)) w = Json{{"vertices", vertices_json(*t)}};
    } else if (o.pattern == "k5e") {
      if (auto k = find_k5_minus_e(g)) w = Json{{"clique", vertices_json(k->clique)}, {"fifth", k->fifth}};
    } else if (o.pattern == "w4") {
      if (auto k = find_w4(g)) w = Json{{"hub", k->hub}, {"rim", vertices_json(k->rim)}};
    } else if (o.pattern == "blue-star") {
      if (auto s = find_blue_star(g, o.n)) w = witness_to_json(*s);
    } else {
      if (auto f = find_blue_fan(g, o.n)) w = witness_to_json(*f);
    }
    const bool found = !w.is_null();
    out << Json{{"pattern", o.pattern}, {"order", g.order()}, {"found", found}, {"witness", std::move(w)}}.dump() << '\n';
  });
  return kOk;
}

int cmd_extract(const Options& o, std::istream& in, std::ostream& out) {
  const Target target = parse_target(o.target, o.n);
  int code = kOk;
  for_each_graph(in, [&](const Graph& g) {
    try {
      const Extraction x = arrow_witness(g, target);
      if (o.summary) out << terminal_to_json(x.trace, x.witness).dump() << '\n';
      else write_trace_lines(out, x.trace, x.witness);
    } catch (const ProofGap& gap) {
      if (!o.summary)
        for (const TraceEvent& e : gap.trace().events) out << event_to_json(e).dump() << '\n';
      out << Json{{"case", to_string(gap.trace().terminal)},
                  {"branch", "proof-gap"},
                  {"n", gap.trace().n},
                  {"witness", nullptr},
                  {"proof_gap", gap.note()}}
                 .dump()
          << '\n';
      code = kFound;
    }
  });
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerificationReport r;
  if (o.mode == "exhaustive") {
    if (o.order == 0 || o.n == 0) throw UsageError("exhaustive needs --N and --n");
    if (o.target != "star") throw UsageError("exhaustive verification supports --target star only");
    r = verify_all_colorings(o.order, Target::star(o.n), o.threads);
  } else if (o.mode == "structure") {
    if (o.n != 2 && o.n != 3) throw UsageError("structure needs --n 2 or --n 3");
    r = verify_star_upper_via_structure(o.n);
  } else if (o.mode == "sweep") {
    if (!o.seed) throw UsageError("sweep needs --seed");
    if (o.n == 0 || o.trials == 0) throw UsageError("sweep needs --n and --trials");
    r = random_sweep(parse_target(o.target, o.n), o.trials, *o.seed, o.threads);
  } else {
    if (o.n == 0) throw UsageError("construction needs --n");
    ConstructionKind kind{};
    if (o.kind == "star-even") kind = ConstructionKind::StarEven;
    else if (o.kind == "star-odd") kind = ConstructionKind::StarOdd;
    else if (o.kind == "fan") kind = ConstructionKind::Fan;
    else throw UsageError("construction needs --kind star-even, star-odd or fan");
    r = verify_construction(o.n, kind);
  }
  out << report_to_json(r, o.timing).dump() << '\n';
  return r.certified() ? kOk : kFound;
}

int cmd_sat(const Options& o, std::ostream& out) {
  if (o.order == 0 || o.n == 0) throw UsageError("sat needs --N and --n");
  if (o.out_path.empty()) {
    write_star_arrowing_dimacs(out, o.order, o.n);
    return kOk;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot open " + o.out_path);
  write_star_arrowing_dimacs(file, o.order, o.n);
  return kOk;
}

int cmd_chrom(std::istream& in, std::ostream& out) {
  for_each_graph(in, [&](const Graph& g) { out << chromatic_to_json(chromatic_info(g)).dump() << '\n'; });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hajós graph Ramsey toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "emit a lower-bound graph as graph6");
  construct->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"star-even", "star-odd", "fan", "burr"}));
  construct->add_option("--n", o.n);
  construct->add_option("--chi", o.chi);
  construct->add_option("--s", o.s);
  construct->add_option("--order", o.order);

  auto* detect = app.add_subcommand("detect", "search graph6 lines from stdin for a pattern");
  detect->add_option("--pattern", o.pattern)
      ->required()
      ->check(CLI::IsMember({"hajos", "k4", "k5e", "w4", "blue-star", "blue-fan", "triangle"}));
  detect->add_option("--n", o.n);

  auto* extract = app.add_subcommand("extract", "witness and proof trace per graph6 line");
  extract->add_option("--target", o.target)->required()->check(CLI::IsMember({"star", "fan"}));
  extract->add_option("--n", o.n)->required();
  extract->add_flag("--summary", o.summary, "terminal record only");

  auto* verify = app.add_subcommand("verify", "emit a verification report");
  verify->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"exhaustive", "structure", "sweep", "construction"}));
  verify->add_option("--N", o.order);
  verify->add_option("--target", o.target)->default_val("star")->check(CLI::IsMember({"star", "fan"}));
  verify->add_option("--n", o.n);
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--kind", o.kind);
  verify->add_option("--threads", o.threads)->check(CLI::Range(1u, 256u));
  verify->add_flag("--timing", o.timing, "include wall-clock fields");

  auto* sat = app.add_subcommand("sat", "emit the star arrowing CNF as DIMACS");
  sat->add_option("--N", o.order)->required();
  sat->add_option("--n", o.n)->required();
  sat->add_option("--out", o.out_path);

  auto* chrom = app.add_subcommand("chrom", "chromatic number and surplus per graph6 line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (detect->parsed()) return cmd_detect(o, in, out);
    if (extract->parsed()) return cmd_extract(o, in, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sat->parsed()) return cmd_sat(o, out);
    if (chrom->parsed()) return cmd_chrom(in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hajos::cli
