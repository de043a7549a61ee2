#include <catch2/catch_amalgamated.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qtcatalan/cli.hpp"

namespace {

struct cli_outcome {
  int exit_code;
  std::string out;
  std::string err;
};

cli_outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qtcatalan::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stats output", "[cli]") {
  const auto r = run_cli({"--structured", "stats", "NNNEENENNEEENNENEE"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "path=NNNEENENNEEENNENEE n=9 area=9 dinv=21 bounce=10 depth=9 ddinv=15 ir=3 ret=2 "
        "area_seq=(0,1,2,1,1,2,0,1,1) depth_seq=(0,1,1,2,0,1,2,2,0) "
        "bounce_touches=(0,3,6,8,9)\n");

  const auto text = run_cli({"stats", "NE"});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("area:           0") != std::string::npos);
}

TEST_CASE("map subcommand", "[cli]") {
  CHECK(run_cli({"map", "omega", "NNNEENENNEEENNENEE"}).out == "NNENNEEENNNENEEENE\n");
  CHECK(run_cli({"map", "sigma", "NNEE"}).out == "((()))\n");
  CHECK(run_cli({"map", "sigma-inv", "((()))"}).out == "NNEE\n");
  CHECK(run_cli({"map", "dual", "(()()())"}).out == "(((())))\n");
  CHECK(run_cli({"--structured", "map", "zeta", "NNEE"}).out ==
        "map=zeta input=NNEE output=NENE\n");
  CHECK(run_cli({"map", "zeta-inv", "NENE"}).out == "NNEE\n");
  CHECK(run_cli({"map", "omega-inv", "NNEE"}).out == "NENE\n");

  CHECK(run_cli({"map", "nope", "NE"}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"map", "omega", "NEEN"}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"map", "tau-inv", "NENE"}).exit_code == qtcatalan::cli::exit_usage);
}

TEST_CASE("poly subcommand", "[cli]") {
  CHECK(run_cli({"poly", "F", "2"}).out == "q + t\n");
  CHECK(run_cli({"poly", "G", "3"}).out == "q^2*t^2 + q^3 + t^3 + 2*q*t\n");

  const auto structured = run_cli({"--structured", "poly", "F", "2"});
  CHECK(structured.out == "poly family=F n=2 terms=2\nterm q=1 t=0 c=1\nterm q=0 t=1 c=1\n");

  CHECK(run_cli({"poly", "F", "20"}).exit_code == qtcatalan::cli::exit_size_cap);
  CHECK(run_cli({"poly", "nope", "2"}).exit_code == qtcatalan::cli::exit_usage);
}

TEST_CASE("enumerate subcommand", "[cli]") {
  const auto paths = run_cli({"enumerate", "paths", "3"});
  CHECK(paths.out == "NNNEEE\nNNENEE\nNNEENE\nNENNEE\nNENENE\n");
  CHECK(run_cli({"enumerate", "paths", "9", "--count"}).out == "count=4862\n");
  CHECK(run_cli({"enumerate", "trees", "4", "--count"}).out == "count=5\n");
  CHECK(run_cli({"enumerate", "parking", "3", "--count"}).out == "count=16\n");
  CHECK(run_cli({"enumerate", "labelled-trees", "4", "--count"}).out == "count=16\n");
  CHECK(run_cli({"enumerate", "graphs", "4", "--count"}).out == "count=38\n");
  CHECK(run_cli({"enumerate", "widgets", "3"}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"enumerate", "graphs", "9"}).exit_code == qtcatalan::cli::exit_size_cap);
}

TEST_CASE("verify subcommand", "[cli]") {
  const auto list = run_cli({"verify", "--list"});
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("check=zeta_transport") != std::string::npos);
  CHECK(list.out.find("check=kreweras") != std::string::npos);
  CHECK(list.out.find("check=GS_equals_GE") != std::string::npos);

  const auto one = run_cli({"verify", "small_tables", "--max-n", "4"});
  CHECK(one.exit_code == 0);
  CHECK(one.out == "check=small_tables n=4 status=pass\n");

  CHECK(run_cli({"verify", "nope"}).exit_code == qtcatalan::cli::exit_usage);

  const auto quick = run_cli({"verify", "all", "--max-n", "4"});
  CHECK(quick.exit_code == 0);
}

TEST_CASE("output is deterministic and independent of workers", "[cli]") {
  const auto a = run_cli({"--structured", "poly", "G", "7"});
  const auto b = run_cli({"--structured", "poly", "G", "7"});
  const auto c = run_cli({"--structured", "poly", "G", "7", "--jobs", "2"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const auto s1 = run_cli({"--structured", "stats", "NENNEE"});
  const auto s2 = run_cli({"--structured", "stats", "NENNEE"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("environment variable sets the default verify cap", "[cli]") {
  setenv("QTCATALAN_MAX_N", "3", 1);
  const auto r = run_cli({"verify", "small_tables"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "check=small_tables n=3 status=pass\n");
  unsetenv("QTCATALAN_MAX_N");

  const auto full = run_cli({"verify", "small_tables"});
  CHECK(full.out == "check=small_tables n=4 status=pass\n");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run_cli({}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"stats"}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"bogus"}).exit_code == qtcatalan::cli::exit_usage);
  CHECK(run_cli({"--help"}).exit_code == 0);
}
