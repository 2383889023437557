#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hajos/constructions.hpp"
#include "hajos/sat.hpp"
#include "hajos/serialize.hpp"

using namespace hajos;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("construct emits one graph6 line") {
  const Result r = run({"construct", "--kind", "star-odd", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(graph6_decode(r.out.substr(0, r.out.size() - 1)) == star_odd_lower(3));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  CHECK(run({"construct", "--kind", "fan", "--n", "4"}).out == graph6_encode(fan_lower(4)) + "\n");
  CHECK(run({"construct", "--kind", "burr", "--chi", "3", "--s", "2", "--order", "5"}).out ==
        graph6_encode(burr_construction(3, 2, 5)) + "\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"construct"}).code == 2);
  CHECK(run({"construct", "--kind", "wheel", "--n", "3"}).code == 2);
  CHECK(run({"construct", "--kind", "star-even", "--n", "3"}).code == 2);
  CHECK(run({"construct", "--kind", "burr", "--chi", "3"}).code == 2);
  CHECK(run({"verify", "--mode", "sweep", "--target", "star", "--n", "4", "--trials", "3"}).code == 2);
  CHECK(run({"verify", "--mode", "exhaustive", "--N", "9", "--target", "star", "--n", "3"}).code == 2);
  CHECK(run({"detect", "--pattern", "blue-star"}, "@\n").code == 2);
  CHECK(run({"detect", "--pattern", "k4"}, "not graph6\n").code == 2);
  CHECK(run({"extract", "--target", "star", "--n", "2"}, "D~{\n").code == 2);
  CHECK(run({"bogus"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("construct") != std::string::npos);
}

TEST_CASE("verify reports") {
  const Result six = run({"verify", "--mode", "exhaustive", "--N", "6", "--target", "star", "--n", "2"});
  CHECK(six.code == 0);
  const Json j = Json::parse(six.out);
  CHECK(j["passed"] == 32768);
  CHECK(j["failed"] == 0);
  CHECK(j["wall_ms"].is_null());
  const Result five = run({"verify", "--mode", "exhaustive", "--N", "5", "--target", "star", "--n", "2"});
  CHECK(five.code == 1);
  CHECK_FALSE(Json::parse(five.out)["counterexamples"].empty());
  CHECK(run({"verify", "--mode", "structure", "--n", "3"}).code == 0);
  CHECK(run({"verify", "--mode", "construction", "--kind", "fan", "--n", "5"}).code == 0);
  const Result timed = run({"verify", "--mode", "construction", "--kind", "star-odd", "--n", "5", "--timing"});
  CHECK(Json::parse(timed.out)["wall_ms"].is_number());
  const Result sweep = run({"verify", "--mode", "sweep", "--target", "star", "--n", "8", "--trials", "20", "--seed", "3"});
  CHECK(sweep.code == 0);
  CHECK(Json::parse(sweep.out).contains("branch_histogram"));
}

TEST_CASE("detect emits one document per input graph") {
  const std::string input = graph6_encode(hajos_graph()) + "\n\n" + graph6_encode(Graph(5)) + "\n";
  const Result r = run({"detect", "--pattern", "hajos"}, input);
  CHECK(r.code == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["found"] == true);
  CHECK(docs[0]["witness"]["kind"] == "red_hajos");
  CHECK(docs[1]["found"] == false);
  CHECK(docs[1]["witness"].is_null());
  for (const char* p : {"k4", "k5e", "w4", "triangle"}) CHECK(run({"detect", "--pattern", p}, input).code == 0);
  const auto fan = json_lines(run({"detect", "--pattern", "blue-fan", "--n", "2"}, input).out);
  CHECK(fan[1]["witness"]["kind"] == "blue_fan");
}

TEST_CASE("extract emits trace lines and a terminal record") {
  const std::string input = graph6_encode(Graph::complete(6)) + "\n" + graph6_encode(Graph(6)) + "\n";
  const Result r = run({"extract", "--target", "star", "--n", "2"}, input);
  CHECK(r.code == 0);
  const auto docs = json_lines(r.out);
  std::size_t terminals = 0;
  for (const Json& d : docs) {
    if (d.contains("event")) {
      CHECK(d.contains("check"));
      CHECK(d.contains("payload"));
    } else {
      ++terminals;
      CHECK(d.contains("case"));
      CHECK(d.contains("witness"));
    }
  }
  CHECK(terminals == 2);
  const Result summary = run({"extract", "--target", "star", "--n", "2", "--summary"}, input);
  CHECK(json_lines(summary.out).size() == 2);
}

TEST_CASE("extract reports a proof gap with exit 1") {
  // Vertex 0 is blue to the six-vertex red clique-minus-one-edge [1, 6]; the rest is red.
  GraphBuilder b(10);
  for (Vertex u = 1; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) b.add_edge(u, v);
  for (Vertex v = 7; v < 10; ++v) b.add_edge(0, v);
  b.remove_edge(1, 2);
  const Result r = run({"extract", "--target", "fan", "--n", "2"}, graph6_encode(std::move(b).build()) + "\n");
  CHECK(r.code == 1);
  const auto docs = json_lines(r.out);
  REQUIRE_FALSE(docs.empty());
  CHECK(docs.back()["branch"] == "proof-gap");
  CHECK(docs.back()["witness"].is_null());
  CHECK(docs.back()["proof_gap"].is_string());
}

TEST_CASE("sat writes DIMACS to stdout or a file") {
  const Result r = run({"sat", "--N", "6", "--n", "2"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  const ParsedDimacs parsed = parse_dimacs(in);
  CHECK(parsed.formula == emit_star_arrowing_cnf(6, 2).formula);
  const std::string path = "test_cli_out.cnf";
  CHECK(run({"sat", "--N", "6", "--n", "2", "--out", path}).code == 0);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == r.out);
  std::remove(path.c_str());
  CHECK(run({"sat", "--N", "65", "--n", "2"}).code == 2);
}

TEST_CASE("chrom") {
  const Result r = run({"chrom"}, graph6_encode(hajos_graph()) + "\n");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"chi\":3,\"surplus\":2}\n");
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::string> args{"verify", "--mode", "sweep", "--target", "fan", "--n", "4", "--trials", "18", "--seed", "11", "--threads", "2"};
  CHECK(run(args).out == run(args).out);
}
