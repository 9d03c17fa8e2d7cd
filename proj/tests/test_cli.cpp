#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qhol/cli.hpp"

using qhol::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "qhol_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented invocations") {
    const std::string free_cfg = write_file("free.json", R"({"n": 2, "mode": "free"})");
    const std::string q_cfg = write_file("q.json", R"({"n": 2, "mode": "q_polydisk", "q": 0.5})");
    auto r = run({"mul", "-c", free_cfg, "f1*f2", "f2*f1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1+0i*f1*f2*f2*f1\n");
    r = run({"weight", "-c", q_cfg, "-k", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.015625\n") == 0);
    CHECK(r.out.find("method: closed-form") != std::string::npos);
    r = run({"check", "pikappa", "-c", q_cfg, "--max-degree", "6"});
    CHECK(r.code == 0);
  }

  TEST_CASE("every command answers in JSON") {
    const std::string free_cfg = write_file("free2.json", R"({"n": 2, "mode": "free"})");
    const std::string q_cfg = write_file("q2.json", R"({"n": 2, "mode": "q_polydisk", "q": 0.5, "ore": "ug",
      "smash": {"qproduct": [[0.5], [2]]}, "factors": 2})");
    const std::string lau = write_file("lau.json", R"({"n": 2, "mode": "q_laurent", "q": [0, 1]})");
    const std::string mats = write_file("mats.json", "[[[1, 2], [3, 4]], [[0, 1], [1, 0]]]");
    const std::vector<std::vector<std::string>> cases{
        {"mul", "-c", free_cfg, "f1", "f2"},
        {"normalize", "-c", q_cfg, "2,1,1"},
        {"weight", "-c", q_cfg, "-k", "1,1"},
        {"minwords", "-c", q_cfg, "-k", "1,2"},
        {"compact-word", "-c", q_cfg, "-k", "2,2"},
        {"pi", "-c", q_cfg, "f2*f1"},
        {"kappa", "-c", q_cfg, "z1*z2"},
        {"abelianize", "-c", free_cfg, "f1*f2-f2*f1+3"},
        {"norm", "-c", free_cfg, "free_polydisk", "f1*f2*f1", "--rho", "0.5,0.25", "--tau", "2"},
        {"norm", "-c", free_cfg, "free_entire", "f1*f2", "--rho", "2"},
        {"norm", "-c", q_cfg, "q_polydisk", "z1*z2", "--rho", "1,1"},
        {"norm", "-c", lau, "q_polyannulus", "z1*z2^-2", "--rho", "0.5,0.5", "--tau", "2,2"},
        {"norm", "-c", q_cfg, "free_product", "x1*x2", "--rho", "0.5,0.25", "--tau", "2"},
        {"norm", "ug_envelope", "x^2*y^3+2*x*y", "--cutoff", "3", "--t", "2"},
        {"eval", "-c", free_cfg, "f1*f2", "--matrices", mats},
        {"superpose", "-c", free_cfg, "f1*f1", "f1*f2"},
        {"ore-mul", "-c", q_cfg, "x", "y"},
        {"smash-mul", "-c", q_cfg, "b1", "a1"},
        {"freeprod-mul", "-c", q_cfg, "x1*x2", "x2*x1"},
        {"flatten", "-c", q_cfg, "x1^2*x2"},
        {"check", "assoc", "--seed", "5"},
    };
    for (auto args : cases) {
      args.push_back("--format");
      args.push_back("json");
      const Run r = run(args);
      CAPTURE(args[0]);
      CAPTURE(r.err);
      CHECK(r.code == 0);
      const auto doc = nlohmann::json::parse(r.out);
      CHECK(doc.at("command") == args[0]);
    }
  }

  TEST_CASE("selected text outputs") {
    const std::string q_cfg = write_file("q3.json", R"({"n": 2, "mode": "q_polydisk", "q": 0.5, "ore": "ug",
      "smash": {"action": [["2*a1", "a2"]]}, "factors": 2})");
    CHECK(run({"kappa", "-c", q_cfg, "z1*z2"}).out == "0.5+0i*f2*f1\n");
    CHECK(run({"normalize", "-c", q_cfg, "2,1,1"}).out == "4+0i*z1^2*z2\n");
    CHECK(run({"ore-mul", "-c", q_cfg, "x", "y"}).out == "1+0i*y + 1+0i*y*x\n");
    CHECK(run({"smash-mul", "-c", q_cfg, "b1", "a1"}).out == "2+0i*a1*b1\n");
    CHECK(run({"freeprod-mul", "-c", q_cfg, "x1*x2", "x2*x1"}).out == "1+0i*x1_1*x2_1^2*x1_1\n");
    CHECK(run({"flatten", "-c", q_cfg, "x1^2*x2"}).out == "1+0i*f1*f1*f2\n");
    CHECK(run({"norm", "ug_envelope", "x^2*y^3+2*x*y", "--cutoff", "2", "--t", "5"}).out == "10\n");
    CHECK(run({"minwords", "-c", q_cfg, "-k", "1,1"}).out == "weight: 0.5\n(2,1)\n");
  }

  TEST_CASE("exit codes") {
    const std::string free_cfg = write_file("free4.json", R"({"n": 2, "mode": "free"})");
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"mul", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"mul", "f1"}).code == 2);
    CHECK(run({"mul", "-c", "/nonexistent/cfg.json", "f1"}).code == 2);
    auto r = run({"mul", "-c", free_cfg, "f1 f2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"weight", "-c", free_cfg, "-k", "1"}).code == 2);
    CHECK(run({"pi", "-c", free_cfg, "f1"}).code == 2);
    CHECK(run({"check", "nonsense"}).code == 2);
    CHECK(run({"mul", "-c", free_cfg, "f1", "--format", "xml"}).code == 2);
    const std::string bad = write_file("bad.json", R"({"n": 2, "q": [[1, 2], [2, 1]]})");
    CHECK(run({"mul", "-c", bad, "f1"}).code == 2);
    // too few degrees for the growth demonstration to reach 1e6
    r = run({"check", "equicont", "--max-degree", "5"});
    CHECK(r.code == 1);
    CHECK(r.out.find("worst instance") != std::string::npos);
  }

  TEST_CASE("suites are deterministic under a seed") {
    const auto a = run({"check", "submult", "--seed", "17", "--format", "json"});
    const auto b = run({"check", "submult", "--seed", "17", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
