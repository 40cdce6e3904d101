#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fbc/cli.hpp"

using namespace fbc;

namespace {

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize prints the normal form JSON") {
  const CliRun r = run({"--exponents", "1,2", "normalize", "B2 t"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"head_a\":2,\"head_t\":1,\"blocks\":[{\"index\":2,\"sign\":-1,\"tail\":0}],"
        "\"spelled\":\"a^2 t B2\"}\n");
  const CliRun text = run({"--exponents", "1,2", "--format", "text", "normalize", "B2 t"});
  CHECK(text.out == "a^2 t B2\n");
}

TEST_CASE("wp prints identity status with exit 0") {
  const CliRun yes = run({"--exponents", "1,2", "wp", "B1 t b1 T A"});
  CHECK(yes.status == 0);
  CHECK(yes.out == "identity\n");
  const CliRun no = run({"--exponents", "1,2", "wp", "a"});
  CHECK(no.status == 0);
  CHECK(no.out == "non-identity\n");
}

TEST_CASE("member prints accept or reject") {
  CHECK(run({"--exponents", "1,2", "member", "b1 B1"}).out == "reject\n");
  CHECK(run({"--exponents", "1,2", "member", "a^2 t B2"}).out == "accept\n");
}

TEST_CASE("dfa exports") {
  const CliRun json = run({"--exponents", "1,2", "dfa"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"states\"") != std::string::npos);
  const CliRun dot = run({"--exponents", "1,2", "dfa", "--export", "dot"});
  CHECK(dot.out.rfind("digraph acceptor {", 0) == 0);
  CHECK(run({"--exponents", "1,2", "dfa", "--export", "xml"}).status == 2);
}

TEST_CASE("ball emits key and distance rows") {
  const CliRun csv = run({"--exponents", "1,2", "--radius", "1", "--format", "csv", "ball"});
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("key,distance\n", 0) == 0);
  CHECK(csv.out.find(",0\n") != std::string::npos);   // identity row has an empty key
  CHECK(csv.out.find("b2,1\n") != std::string::npos);
  const CliRun json = run({"--exponents", "1,2", "--radius", "1", "ball"});
  CHECK(json.out.find("\"radius\":1") != std::string::npos);
  const CliRun dot = run({"--exponents", "1,2", "--radius", "1", "--format", "dot", "ball"});
  CHECK(dot.out.rfind("graph ball {", 0) == 0);
}

TEST_CASE("ball cap errors exit 1 with a machine-parseable record") {
  const CliRun r = run({"--exponents", "1,2", "--radius", "3", "--entry-cap", "4", "ball"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("{\"error\":\"cap\"", 0) == 0);
}

TEST_CASE("fellow distances") {
  const CliRun sync = run({"--exponents", "1,2", "fellow", "--mode", "sync", "--lhs", "a", "--rhs", "t",
                           "--cap", "4"});
  CHECK(sync.status == 0);
  CHECK(sync.out.find("\"distance\":2") != std::string::npos);

  const CliRun async = run({"--exponents", "1,2", "--cap", "6", "fellow", "--lhs", "B2 a^3 t", "--rhs",
                            "a^2 t B2 a^3"});
  CHECK(async.status == 0);
  CHECK(async.out.find("\"distance\":2") != std::string::npos);
  CHECK(async.out.find("\"alignment\":\"") != std::string::npos);

  const CliRun text = run({"--exponents", "1,2", "--cap", "6", "--format", "text", "fellow", "--lhs", "a",
                           "--rhs", "a"});
  CHECK(text.out == "0 G\n");
}

TEST_CASE("quasigeodesic CSV has the declared header") {
  const CliRun r = run({"--exponents", "1,2", "--format", "csv", "quasigeodesic", "--stable", "2",
                        "--kmax", "2", "--jmax", "2", "--verify-radius", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("k,j,geodesic_claimed,geodesic_bfs,normal_form_length,paper_formula,ratio\n", 0) == 0);
  CHECK(r.out.find("1,1,2,2,4,7,2.0\n") != std::string::npos);
}

TEST_CASE("conjugation-check emits the comparison table") {
  const CliRun r = run({"--exponents", "1,2", "--format", "csv", "conjugation-check", "--pmax", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1,1,a t,a t,true\n") != std::string::npos);
  CHECK(r.out.find("1,2,a^2 t,a t B1 a b1,false\n") != std::string::npos);
}

TEST_CASE("combing-check runs a seeded sweep") {
  const CliRun r = run({"--exponents", "1,2", "combing-check", "--samples", "20", "--maxlen", "8",
                        "--seed", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"bound_hypothesis\":3") != std::string::npos);
  CHECK(r.out.find("\"violations\":[]") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args{"--exponents", "1,2", "combing-check", "--samples", "15",
                                      "--maxlen", "6", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({"wp", "a"}).status == 2);                                  // no exponents
  CHECK(run({"--exponents", "1,2", "frobnicate"}).status == 2);         // unknown subcommand
  CHECK(run({"--exponents", "1,2"}).status == 2);                       // no subcommand
  CHECK(run({"--exponents", "1,x", "wp", "a"}).status == 2);            // bad exponent list

  const CliRun bad_word = run({"--exponents", "1,2", "wp", "a q"});
  CHECK(bad_word.status == 1);
  CHECK(bad_word.err.rfind("{\"error\":\"parse\"", 0) == 0);

  const CliRun bad_index = run({"--exponents", "1,2", "normalize", "b7"});
  CHECK(bad_index.status == 1);
  CHECK(bad_index.err.find("stable index out of range") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags override") {
  const std::string path = "fbc_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"exponents":[1,2],"radius":1,"format":"csv"})";
  }
  const CliRun from_file = run({"--config", path, "ball"});
  CHECK(from_file.status == 0);
  CHECK(from_file.out.rfind("key,distance\n", 0) == 0);

  const CliRun overridden = run({"--config", path, "--exponents", "2,3", "wp", "B1 t b1 T a^-2"});
  CHECK(overridden.status == 0);
  CHECK(overridden.out == "identity\n");

  const CliRun missing = run({"--config", "no_such_file.json", "wp", "a"});
  CHECK(missing.status == 2);
  std::remove(path.c_str());
}
