#include <doctest.h>

#include <fstream>
#include <sstream>

#include "abelian_cli/cli.hpp"

using abelian::cli::run_cli;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ABELIAN_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const auto r = run_cli(args);
  CAPTURE(r.err);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == golden(name));
}

const std::string kCube =
    R"({"q":2,"r":[3,3,5],"defining_set_orbit_reps":[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,2,0],[1,2,1],[1,2,2],[1,0,1],[0,1,1],[1,0,2],[0,1,2]]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
  check_golden("orbits_5x7.json", {"orbits", "--input", R"({"q":2,"r":[5,7]})"});
  check_golden("orbits_35.json", {"orbits", "--input", R"({"q":2,"r":[35]})"});
  check_golden("apdist_cyclic_35.json", {"apdist", "--input", R"({"q":2,"r":[35],"orbit_reps":[[1],[5]]})"});
  check_golden("apdist_5x7.json", {"apdist", "--input", R"({"q":2,"r":[5,7],"orbit_reps":[[0,0],[1,0],[0,3]]})"});
  check_golden("apdist_trace_3x9.json",
               {"apdist", "--trace", "--input", R"({"q":2,"r":[3,9],"defining_set_orbit_reps":[[1,0],[0,1],[1,3],[1,6]]})"});
  check_golden("apdist_trace_3x3x5.json", {"apdist", "--trace", "--input", kCube});
  check_golden("bch_build_3x5x5.json",
               {"bch", "build", "--input", R"({"q":2,"r":[3,5,5],"gamma":[2,3],"delta":{"2":2,"3":2},"b":{"2":0,"3":0}})"});
  check_golden("bch_bound_5x7.json", {"bch", "bound", "--input", R"({"q":2,"r":[5,7],"orbit_reps":[[0,1],[1,1],[0,0],[0,3]]})"});
  check_golden("multiply_55.json", {"multiply", "--n", "3", "--input", R"({"q":2,"r":[55],"orbit_reps":[[1],[5]]})"});
  check_golden("search_hd_5x7.json", {"search-hd", "--target", "6", "--input", R"({"q":2,"r":[5,7]})"});
  check_golden("verify_5x7.json", {"verify", "--input", R"({"q":2,"r":[5,7],"orbit_reps":[[0,1],[0,3],[1,3]]})"});
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"apdist", "--trace", "--input", kCube};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"apdist", "--input", R"({"q":2,"r":[3],"orbit_reps":[[0],[1]]})"}).exit_code == 2);
  CHECK(run_cli({"apdist", "--input", R"({"q":2,"r":[3],"orbit_reps":)"}).exit_code == 1);
  CHECK(run_cli({"apdist", "--input", "/nonexistent/file.json"}).exit_code == 1);
  CHECK(run_cli({"apdist"}).exit_code == 1);
  CHECK(run_cli({"--input", "{}"}).exit_code == 1);
  CHECK(run_cli({"bch", "build", "--input", R"({"q":2,"r":[5,7],"gamma":[],"delta":{}})"}).exit_code == 2);
  CHECK(run_cli({"search-hd", "--target", "8", "--budget", "3", "--input", R"({"q":2,"r":[5,7]})"}).exit_code == 3);
  CHECK(run_cli({"verify", "--budget", "100", "--input", R"({"q":2,"r":[5,7],"orbit_reps":[[0,1]]})"}).exit_code == 3);
  CHECK(run_cli({"multiply", "--n", "2", "--input", R"({"q":2,"r":[55],"orbit_reps":[[1],[5]]})"}).exit_code == 2);
  const auto help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("search-hd") != std::string::npos);
}

TEST_CASE("output file") {
  const std::string path = "cli_output_test.json";
  const auto r = run_cli({"orbits", "--input", R"({"q":2,"r":[3]})", "--output", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"orbit_count\": 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify reports agreement") {
  const auto r = run_cli({"verify", "--input", R"({"q":2,"r":[35],"orbit_reps":[[1],[5]]})"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"min_distance\": 6") != std::string::npos);
  const auto full = run_cli({"verify", "--input", R"({"q":2,"r":[3,5],"orbit_reps":[]})"});
  CHECK(full.exit_code == 0);
  CHECK(full.out.find("\"min_distance\": 1") != std::string::npos);
}

}  // TEST_SUITE
