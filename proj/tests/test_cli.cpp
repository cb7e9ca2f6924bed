#include "lattice_waves/cli.hpp"
#include "lattice_waves/io.hpp"

#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lattice_waves;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_problem(const std::string& name, const std::string& json) {
  const auto path = std::filesystem::temp_directory_path() / ("lattice_waves_" + name + ".json");
  std::ofstream(path) << json;
  return path.string();
}

const char* kHeat = R"({
  "group": {"rank": 1, "moduli": []},
  "generators": [{"free": [1]}, {"free": [-1]}],
  "f": {"values": [{"elem": {"free": [0]}, "num": "1", "den": "1"}]},
  "n": 2})";

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("heat on Z") {
    const Run r = run({"heat", "--problem", write_problem("heat", kHeat)});
    CHECK(r.status == 0);
    CHECK(r.out == "# kind=heat n=2 k=2\nvertex,num,den\n-2,1,1\n-1,-2,1\n0,3,1\n1,-2,1\n2,1,1\n");
  }

  TEST_CASE("output file and n override") {
    const auto out = std::filesystem::temp_directory_path() / "lattice_waves_heat_out.csv";
    const Run r = run({"heat", "--problem", write_problem("heat", kHeat), "--out", out.string(), "--n", "1"});
    CHECK(r.status == 0);
    std::ifstream in(out);
    const SupportedFunction u = io::read_csv(in, make_group(1));
    CHECK(u.support_size() == 3);
    CHECK(u(make_group(1).identity()) == -1);
  }

  TEST_CASE("unsolvable wave") {
    const Run r = run({"wave", "--problem", write_problem("wave", R"({
      "group": {"rank": 1},
      "generators": [[1], [-1]],
      "f": {"values": []},
      "g": {"values": [{"elem": [0], "num": 1}]},
      "n": 3})")});
    CHECK(r.status == 2);
    const auto report = io::Json::parse(r.err);
    CHECK(report["error"] == "NOT_SOLVABLE");
    CHECK(report["sum"] == "1");
  }

  TEST_CASE("validation errors exit with 1") {
    Run r = run({"heat", "--problem", write_problem("bad", R"({"group": {"rank": 1},
      "generators": [[2], [-2]], "f": {"values": []}, "n": 1})")});
    CHECK(r.status == 1);
    CHECK(io::Json::parse(r.err)["error"] == "DOES_NOT_GENERATE");
    r = run({"heat", "--problem", "/nonexistent/problem.json"});
    CHECK(r.status == 1);
    r = run({"heat", "--problem", write_problem("broken", "{not json")});
    CHECK(r.status == 1);
    CHECK(io::Json::parse(r.err)["error"] == "INVALID_INPUT");
    r = run({"frobnicate"});
    CHECK(r.status == 1);
    r = run({"heat", "--problem", write_problem("heat", kHeat), "--n", "-1"});
    CHECK(r.status == 1);
  }

  TEST_CASE("help") {
    const Run r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(r.out.find("inject") == std::string::npos);
  }

  TEST_CASE("coset and tree solvers") {
    Run r = run({"coset-heat", "--problem", write_problem("coset", R"({
      "group": {"rank": 1, "moduli": [4]},
      "subgroup": [[0, 2]],
      "generators": [[1, 0], [-1, 0], [0, 1], [0, 3]],
      "f": {"values": [{"elem": [0, 0], "num": 1}, {"elem": [0, 2], "num": 1}]},
      "n": 1})")});
    CHECK(r.status == 0);
    CHECK(r.out.find("kind=coset-heat n=1 k=3") != std::string::npos);
    CHECK(r.out.find("\n0;0,-2,1\n") != std::string::npos);

    r = run({"tree-heat", "--problem", write_problem("tree", R"({
      "k": 3, "f": {"values": [{"vertex": [], "num": 1}]}, "n": 2,
      "eval": {"vertices": [[], [1], [1, 2]]}})")});
    CHECK(r.status == 0);
    CHECK(r.out == "# kind=tree-heat n=2 k=3\nvertex,num,den\n,7,1\n1,-4,1\n1;2,1,1\n");

    r = run({"tree-wave", "--problem", write_problem("tree_wave", R"({
      "k": 3, "f": {"values": []}, "g": {"values": [{"vertex": [], "num": 1}]}, "n": 2,
      "eval": {"vertices": [[2]]}})")});
    CHECK(r.status == 2);
    CHECK(io::Json::parse(r.err)["vertex"] == "[2]");
  }

  TEST_CASE("kernel and weights") {
    Run r = run({"kernel", "--problem", write_problem("kernel", kHeat)});
    CHECK(r.status == 0);
    CHECK(r.out.find("elem,num,den") != std::string::npos);
    r = run({"weights", "--problem", write_problem("weights", R"({"k": 3, "n": 1})")});
    CHECK(r.status == 0);
    CHECK(r.out.find("s,num,den\n0,-2,1\n1,1,1\n") != std::string::npos);
  }

  TEST_CASE("compare") {
    Run r = run({"compare", "--kind", "heat", "--problem", write_problem("heat", kHeat)});
    CHECK(r.status == 0);
    auto report = io::Json::parse(r.out);
    CHECK(report["max_abs_diff"] == "0/1");
    CHECK(report["agree"] == true);

    r = run({"compare", "--kind", "kernel", "--problem", write_problem("heat", kHeat)});
    CHECK(r.status == 0);
    report = io::Json::parse(r.out);
    CHECK(report["quadrature_max_abs_diff"].get<double>() <= 1e-9);

    r = run({"compare", "--kind", "heat", "--inject-fault", "--problem", write_problem("heat", kHeat)});
    CHECK(r.status == 3);
    report = io::Json::parse(r.out);
    CHECK(report["max_abs_diff"] != "0/1");
    CHECK_FALSE(report["mismatches"].empty());

    r = run({"compare", "--kind", "tree-heat", "--problem", write_problem("tree", R"({
      "k": 4, "f": {"values": [{"vertex": [1, 2], "num": "2", "den": "3"}]}, "n": 4})")});
    CHECK(r.status == 0);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "--suite", "alpha"});
    CHECK(r.status == 0);
    CHECK(r.out.find("summary: 1/1 checks passed") != std::string::npos);
    CHECK(run({"verify", "--suite", "nonsense"}).status == 1);
  }
}
