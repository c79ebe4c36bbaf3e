#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "conelab/catalog.hpp"
#include "conelab/io.hpp"

using namespace conelab;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(CONELAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp_doc(const std::string& name, const Json& doc) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "conelab-cli-test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / name).string();
  std::ofstream(path) << canonical_text(doc);
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("group snf prints the diagonal, the cokernel and the transforms") {
  Json doc;
  doc["matrix"] = Json::array({Json::array({"4"})});
  std::string path = write_temp_doc("m4.json", doc);

  RunResult r = run_cli("group snf " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "seed 1729"));
  CHECK(contains(r.output, "diagonal: [\"4\"]"));
  CHECK(contains(r.output, "cokernel of the relation rows: Z/4"));
  CHECK(contains(r.output, "u (row transform):"));
  CHECK(contains(r.output, "v (column transform):"));

  Json identity;
  identity["matrix"] = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
  RunResult i = run_cli("group snf " + write_temp_doc("id2.json", identity));
  CHECK(i.exit_code == 0);
  CHECK(contains(i.output, "cokernel of the relation rows: 0"));
}

TEST_CASE("a ragged matrix is rejected with the offending row named") {
  Json doc;
  doc["matrix"] = Json::array({Json::array({"1", "2"}), Json::array({"3"})});
  RunResult r = run_cli("group snf " + write_temp_doc("ragged.json", doc));
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "input error:"));
  CHECK(contains(r.output, "matrix[1]"));
}

TEST_CASE("cone facets and membership behave as documented") {
  Json doc;
  doc["ambient_dim"] = "2";
  doc["generators"] = Json::array({Json::array({"1", "0"}), Json::array({"1", "1"})});
  std::string path = write_temp_doc("wedge.json", doc);

  RunResult f = run_cli("cone facets " + path);
  CHECK(f.exit_code == 0);
  CHECK(contains(f.output, "facet normals (2):"));
  std::size_t first = f.output.find("[0, 1]");
  std::size_t second = f.output.find("[1, -1]");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  CHECK(first < second);  // canonical order

  RunResult in = run_cli("cone contains " + path + " --point '[2,1]'");
  CHECK(in.exit_code == 0);
  CHECK(contains(in.output, "contains: true"));

  RunResult out = run_cli("cone contains " + path + " --point '[-1,0]'");
  CHECK(out.exit_code == 0);
  CHECK(contains(out.output, "contains: false"));

  RunResult bad = run_cli("cone contains " + path + " --point '[1]'");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "dimension"));

  RunResult slice = run_cli("cone slice " + path + " --coordinate 0 --level 1");
  CHECK(slice.exit_code == 0);
  CHECK(contains(slice.output, "bounded, squared diameter 1"));
}

TEST_CASE("check runs validators against catalog entries") {
  RunResult t1 = run_cli("check t1 quadric-cone-3d");
  CHECK(t1.exit_code == 0);
  CHECK(contains(t1.output, "check t1: holds"));
  CHECK(contains(t1.output, "options: rank=1 horizon=1000 bound=1000000 depth=3"));

  RunResult t3 = run_cli("check t3 quadric-cone-3d");
  CHECK(t3.exit_code == 0);
  CHECK(contains(t3.output, "check t3: holds"));

  RunResult chi = run_cli("check chi quadric-cone-3d");
  CHECK(chi.exit_code == 0);
  CHECK(contains(chi.output, "check chi: holds"));

  RunResult sym = run_cli("check sym minimal-mult-determinantal");
  CHECK(sym.exit_code == 0);  // not_applicable is not a violation
  CHECK(contains(sym.output, "check sym: not_applicable"));

  RunResult unknown = run_cli("check t1 no-such-entry");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.output, "input error:"));
  CHECK(contains(unknown.output, "available"));
}

TEST_CASE("a tampered declared index set fails the line check with exit 1") {
  Json doc = load_document_file(default_data_dir() + "/x2w-yz.json");
  doc["lines"][0]["declared_mcm"] = Json::array({"0", "2"});
  std::string path = write_temp_doc("tampered-line.json", doc);

  RunResult line = run_cli("check line " + path);
  CHECK(line.exit_code == 1);
  CHECK(contains(line.output, "check line: violated"));
  CHECK(contains(line.output, "missing_index"));

  RunResult walk = run_cli("check t3 " + path);
  CHECK(walk.exit_code == 1);
  CHECK(contains(walk.output, "check t3: violated"));
  CHECK(contains(walk.output, "offending_indices"));
}

TEST_CASE("structured output is canonical and reproducible") {
  Json doc;
  doc["matrix"] = Json::array({Json::array({"4"})});
  std::string path = write_temp_doc("m4-structured.json", doc);

  RunResult a = run_cli("--format structured group snf " + path);
  RunResult b = run_cli("--format structured group snf " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);  // byte-identical across runs
  CHECK(contains(a.output, "\"seed\": \"1729\""));

  Json parsed = parse_document_text(a.output, "cli");
  CHECK(parsed["result"]["smith"]["diagonal"] == Json::array({"4"}));
  CHECK(canonical_text(parsed) == a.output);

  // Defaults are recorded in the echoed options even when not passed.
  RunResult c = run_cli("--format structured check t1 quadric-cone-3d");
  Json creport = parse_document_text(c.output, "cli");
  CHECK(creport["options"]["rank"] == "1");
  CHECK(creport["options"]["horizon"] == "1000");
  CHECK(creport["report"]["verdict"] == "holds");
}

TEST_CASE("repro replays the per-entry suite") {
  RunResult r = run_cli("repro quadric-cone-3d");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "entry quadric-cone-3d: 5 checks"));
  CHECK(contains(r.output, "entry suite passed"));
}

TEST_CASE("seed and help behave like a normal command-line tool") {
  Json doc;
  doc["matrix"] = Json::array({Json::array({"4"})});
  std::string path = write_temp_doc("m4-seed.json", doc);
  RunResult seeded = run_cli("--seed 7 group snf " + path);
  CHECK(seeded.exit_code == 0);
  CHECK(contains(seeded.output, "seed 7"));

  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.output, "group"));
  CHECK(contains(help.output, "cone"));
  CHECK(contains(help.output, "check"));
  CHECK(contains(help.output, "repro"));
}
