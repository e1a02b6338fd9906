#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("udrig_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

Run run(const std::string& args) {
  fs::path d = scratch();
  std::string cmd = std::string(UDRIG_CLI_PATH) + " " + args + " > " + (d / "out").string() + " 2> " +
                    (d / "err").string();
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(d / "out");
  r.err = slurp(d / "err");
  return r;
}

std::string data(const std::string& rel) { return (fs::path(UDRIG_DATA_DIR) / rel).string(); }

}  // namespace

TEST_CASE("verify exit codes") {
  Run collapse = run("verify --claim star:A,C " + data("gadgets/rhombus.json"));
  CHECK(collapse.code == 1);
  udrig::Json j = udrig::Json::parse(collapse.out);
  CHECK(j["result"]["verdict"]["outcome"] == "refuted");
  CHECK(j["result"]["verdict"].contains("witness"));
  CHECK(j["exit_code"] == 1);

  CHECK(run("verify --claim star:X,Y " + data("gadgets/unit_edge.json")).code == 0);
  CHECK(run("verify --claim wstar:A,C " + data("gadgets/rhombus.json")).code == 0);
  CHECK(run("verify --claim star:X,Y " + data("gadgets/chain2.json")).code == 1);
}

TEST_CASE("congruence table") {
  Run r = run("congruence --N 5 " + data("congruence/one_vs_three_halves.json"));
  CHECK(r.code == 1);
  udrig::Json j = udrig::Json::parse(r.out);
  CHECK(j["result"]["first_failure"] == 5);
  CHECK(j["result"]["levels"][3]["closed_form"] == true);
  CHECK(j["result"]["levels"][4]["closed_form"] == false);
  CHECK(run("congruence --N 20 " + data("congruence/congruent_units.json")).code == 0);
}

TEST_CASE("input errors exit 3 and name the field") {
  fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << R"({"points": [{"label": "X", "coords": ["0", "sqrt("]}], "unit_edges": []})";
  Run r = run("validate " + bad.string());
  CHECK(r.code == 3);
  CHECK(r.err.find("points[0].coords[1]") != std::string::npos);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("verify " + data("gadgets/rhombus.json")).code == 3);
  CHECK(run("verify --claim star:X,Y " + data("gadgets/rhombus.json")).code == 3);
  CHECK(run("validate /nonexistent.json").code == 3);
}

TEST_CASE("validate and enumerate") {
  CHECK(run("validate " + data("gadgets/moser_spindle.json")).code == 0);
  Run e = run("enumerate " + data("gadgets/rhombus.json"));
  CHECK(e.code == 0);
  CHECK(udrig::Json::parse(e.out)["result"]["solutions"].size() == 2);
  CHECK(run("enumerate " + data("gadgets/chain2.json")).code == 2);
}

TEST_CASE("built configurations round-trip") {
  fs::path out = scratch() / "spindle.json";
  Run b = run("build " + data("recipes/ab_edge.json") + " --recipe " + data("recipes/moser_spindle.json") +
              " --config-out " + out.string());
  REQUIRE(b.code == 0);
  CHECK(slurp(out) == slurp(data("gadgets/moser_spindle.json")));
  udrig::Configuration c = udrig::load_configuration(out);
  CHECK(udrig::print_configuration(udrig::parse_configuration(udrig::print_configuration(c))) ==
        udrig::print_configuration(c));
}

TEST_CASE("reports are deterministic and written with --out") {
  std::string args = "refute --claim star:X,Y --seed 3 --restarts 16 " + data("gadgets/chain2.json");
  Run a = run(args);
  Run b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  fs::path f = scratch() / "report.json";
  Run c = run(args + " --out " + f.string());
  CHECK(slurp(f) == a.out);
  CHECK(c.out != a.out);
  udrig::Json j = udrig::Json::parse(a.out);
  CHECK(j["manifest"]["parameters"]["seed"] == 3);
  CHECK_FALSE(j["manifest"].contains("wall_clock_ms"));
}
