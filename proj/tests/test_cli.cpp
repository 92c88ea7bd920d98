#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "ptmc/cli.hpp"
#include "ptmc/gamma2.hpp"
#include "ptmc/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  json report;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  Run r;
  r.code = ptmc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (r.out.rfind("{", 0) == 0) r.report = json::parse(r.out);
  return r;
}

std::string data(const std::string &name) { return std::string(PTMC_TEST_DATA) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("ptmc_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string sub(const std::string &name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("cli: construct thm2 emits a verified code file") {
  TempDir tmp;
  const Run r = run({"construct", "thm2", "--c", "2,2", "--k", "1,1", "--out", tmp.sub("t2")});
  CHECK(r.code == ptmc::cli::kPass);
  REQUIRE(fs::exists(tmp.sub("t2/code.json")));
  REQUIRE(fs::exists(tmp.sub("t2/report.json")));
  CHECK(r.report["verdicts"]["ptmc"] == true);
  CHECK(r.report["artifacts"][0] == tmp.sub("t2/code.json"));

  std::vector<std::string> keys;
  for (const auto &[key, value] : json::parse(ptmc::read_file(tmp.sub("t2/report.json"))).items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"artifacts", "command", "counts", "inputs_digest", "timings", "verdicts"});
  const std::string raw = ptmc::read_file(tmp.sub("t2/report.json"));
  CHECK(raw.find("\"command\"") < raw.find("\"inputs_digest\""));
  CHECK(raw.find("\"inputs_digest\"") < raw.find("\"verdicts\""));
  CHECK(raw.find("\"verdicts\"") < raw.find("\"counts\""));
  CHECK(raw.find("\"counts\"") < raw.find("\"timings\""));
  CHECK(raw.find("\"timings\"") < raw.find("\"artifacts\""));

  const Run v = run({"verify", "ptmc", "--code", tmp.sub("t2/code.json")});
  CHECK(v.code == ptmc::cli::kPass);
  const Run h = run({"verify", "box-hull", "--code", tmp.sub("t2/code.json")});
  CHECK(h.code == ptmc::cli::kPass);
}

TEST_CASE("cli: reports are identical modulo timings") {
  TempDir tmp;
  const std::vector<std::string> args{"construct", "thm2", "--c", "3,2", "--k", "2,1", "--out", tmp.sub("a")};
  Run a = run(args), b = run(args);
  a.report.erase("timings");
  b.report.erase("timings");
  CHECK(a.report.dump() == b.report.dump());
  const Run other = run({"construct", "thm2", "--c", "3,2", "--k", "1,1", "--out", tmp.sub("a")});
  CHECK(other.report["inputs_digest"] != a.report["inputs_digest"]);
}

TEST_CASE("cli: verify rejects a non-code with a witness") {
  const Run r = run({"verify", "ptmc", "--code", data("not_a_code.json"), "--t", "1"});
  CHECK(r.code == ptmc::cli::kFail);
  CHECK(r.report["verdicts"]["ptmc"] == false);
  CHECK(r.report["verdicts"]["failure"] == "gap");
  CHECK(r.report["verdicts"]["witness"].size() >= 1);

  const Run missing = run({"verify", "ptmc", "--code", data("not_a_code.json")});
  CHECK(missing.code == ptmc::cli::kFail);
  CHECK(missing.report["verdicts"]["failure"] == "bad-radius");
}

TEST_CASE("cli: the external four-dimensional solution file") {
  const Run r = run({"verify", "ptmc", "--code", data("thm4_n4.json")});
  CHECK(r.code == ptmc::cli::kPass);
  CHECK(r.report["verdicts"]["rule"] == "owner");
  CHECK(r.report["verdicts"]["census_ok"] == true);
  CHECK(r.report["counts"]["census"]["cube"] == 8);
  CHECK(r.report["counts"]["census"]["singleton"] == 8);
  const Run g = run({"verify", "ptmc", "--code", data("thm4_n4.json"), "--rule", "global"});
  CHECK(g.code == ptmc::cli::kFail);
  CHECK(g.report["verdicts"]["failure"] == "nonunique-nearest");
  CHECK(run({"verify", "box-hull", "--code", data("thm4_n4.json")}).code == ptmc::cli::kPass);
}

TEST_CASE("cli: template constructions") {
  TempDir tmp;
  const Run r = run({"construct", "thm3", "--out", tmp.sub("t3")});
  CHECK(r.code == ptmc::cli::kPass);
  CHECK(r.report["counts"]["census"]["unit-square"] == 4);
  CHECK(r.report["counts"]["census"]["singleton"] == 4);
  CHECK(r.report["counts"]["fr_volume"] == 54);
  CHECK(run({"verify", "ptmc", "--code", tmp.sub("t3/code.json")}).code == ptmc::cli::kPass);

  const Run t = run({"construct", "thm4", "--n", "4", "--budget", "0"});
  CHECK(t.code == ptmc::cli::kTimeout);
  CHECK(t.report["verdicts"]["outcome"] == "timeout");
  CHECK(t.report["counts"]["ball_sizes"]["cube"] == 48);
  CHECK(t.report["counts"]["ball_sizes"]["singleton"] == 33);
  CHECK(t.report["counts"]["fr_volume"] == 162);
  CHECK(t.report["counts"]["fr_count"] == 4);
}

TEST_CASE("cli: search subcommands") {
  TempDir tmp;
  const Run inst = run({"search", "instance", "--instance", data("small_instance.json"), "--limit", "10", "--out",
                        tmp.sub("s")});
  CHECK(inst.code == ptmc::cli::kPass);
  CHECK(inst.report["counts"]["solutions"] == 2);
  CHECK(inst.report["verdicts"]["exhaustive"] == true);
  CHECK(fs::exists(tmp.sub("s/outcome.json")));
  CHECK(run({"search", "instance", "--instance", data("small_instance.json")}).report["verdicts"]["outcome"] ==
        "solution");

  const Run grid = run({"search", "eds", "--grid", "4,4", "--limit", "100"});
  CHECK(grid.report["counts"]["solutions"] == 2);
  const Run none = run({"search", "eds", "--grid", "5,5"});
  CHECK(none.code == ptmc::cli::kPass);
  CHECK(none.report["verdicts"]["outcome"] == "infeasible");
  CHECK(run({"search", "eds", "--torus", "5,5"}).report["verdicts"]["outcome"] == "solution");
  CHECK(run({"search", "eds", "--torus", "5,5", "--grid", "5,5"}).code == ptmc::cli::kUsage);

  const Run box = run({"search", "parallelotope", "--torus", "3,3", "--extents", "1,1", "--t", "2"});
  CHECK(box.report["verdicts"]["outcome"] == "solution");
  CHECK(box.report["verdicts"]["ptmc"] == true);
  CHECK(run({"search", "parallelotope", "--torus", "3,3", "--extents", "1,1", "--t", "0"}).code == ptmc::cli::kUsage);
  const Run late = run({"search", "parallelotope", "--torus", "6,6,3", "--extents", "2,2,1", "--budget", "0"});
  CHECK(late.code == ptmc::cli::kTimeout);
}

TEST_CASE("cli: gamma subcommands") {
  TempDir tmp;
  const Run count = run({"gamma", "count-2ptmc"});
  CHECK(count.code == ptmc::cli::kPass);
  CHECK(count.report["counts"]["count"] == 262144);
  CHECK(run({"gamma", "thm6c"}).code == ptmc::cli::kPass);
  const Run none = run({"gamma", "no-isolated-pds"});
  CHECK(none.code == ptmc::cli::kPass);
  CHECK(none.report["verdicts"]["outcome"] == "infeasible");
  const Run ext = run({"gamma", "extend", "--L", "3", "--seed", "2", "--out", tmp.sub("g")});
  CHECK(ext.code == ptmc::cli::kPass);
  CHECK(fs::exists(tmp.sub("g/gamma_code.json")));
  const Run st = run({"gamma", "structure", "--L", "3"});
  CHECK(st.code == ptmc::cli::kPass);
  CHECK(st.report["counts"]["hive_vertices"] == 81);
  CHECK(run({"gamma", "extend", "--L", "1"}).code == ptmc::cli::kUsage);
}

TEST_CASE("cli: export and verify pds on the exported graph") {
  TempDir tmp;
  CHECK(run({"export", "hive", "--format", "json", "--out", tmp.sub("h")}).code == ptmc::cli::kPass);
  std::string ids;
  for (const auto &v : ptmc::gamma::thm6c_pds()) ids += (ids.empty() ? "" : ",") + ptmc::gamma::to_string(v);
  const Run non = run({"verify", "pds", "--graph", tmp.sub("h/graph.json"), "--vertices", ids, "--non-isolated"});
  CHECK(non.code == ptmc::cli::kPass);
  const Run iso = run({"verify", "pds", "--graph", tmp.sub("h/graph.json"), "--vertices", ids});
  CHECK(iso.code == ptmc::cli::kFail);

  const Run dot = run({"export", "region", "--L", "0", "--out", tmp.sub("r")});
  CHECK(dot.report["counts"]["vertices"] == 9);
  const std::string text = ptmc::read_file(tmp.sub("r/graph.dot"));
  CHECK(text.rfind("graph gamma2 {", 0) == 0);
  CHECK(run({"export", "region", "--L", "2", "--format", "json", "--out", tmp.sub("r")}).code == ptmc::cli::kPass);
  CHECK(ptmc::gamma::import_graph_json(ptmc::read_file(tmp.sub("r/graph.json"))) == ptmc::gamma::build_region(2));
}

TEST_CASE("cli: surveys") {
  const Run balls = run({"survey", "balls", "--n", "4"});
  CHECK(balls.code == ptmc::cli::kPass);
  CHECK(balls.report["counts"]["ball_sizes"]["4,2"] == 33);
  const Run grid = run({"survey", "grid-eds", "--max", "5"});
  CHECK(grid.code == ptmc::cli::kPass);
  CHECK(grid.report["verdicts"]["grids_with_eds"] == json::array({json::array({4, 4})}));
  CHECK(grid.report["counts"]["eds"]["4x4"] == 2);
}

TEST_CASE("cli: usage errors") {
  Run r = run({});
  CHECK(r.code == ptmc::cli::kUsage);
  r = run({"bogus"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(r.err.find("bogus") != std::string::npos);
  r = run({"construct", "thm2", "--c", "2,2"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(r.err.find("--k") != std::string::npos);
  r = run({"construct", "thm2", "--c", "2,2", "--k", "1,1", "--frobnicate"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(r.err.find("--frobnicate") != std::string::npos);
  r = run({"verify", "ptmc", "--code", data("not_a_code.json"), "--rule", "nearest"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(r.err.find("--rule") != std::string::npos);
  r = run({"export", "hive"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(r.err.find("--out") != std::string::npos);
  r = run({"export", "hive", "--format", "svg", "--out", "/tmp"});
  CHECK(r.code == ptmc::cli::kUsage);
  CHECK(run({"--help"}).code == ptmc::cli::kPass);
}
