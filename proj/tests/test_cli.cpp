#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "parwb/json_io.hpp"
#include "parwb/workbench.hpp"

using namespace parwb;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string command = std::string(PARWB_BIN) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path fixture_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "parwb_cli_fixtures";
    std::filesystem::create_directories(d);
    for (const auto& name : fixture_names()) {
      std::ofstream out(d / (name + ".json"));
      out << action_to_json(fixture(name)).dump(2);
    }
    std::ofstream out(d / "EX3.json");
    out << linear_pa01_to_json(fixture_ex3_algebra()).dump(2);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) {
  return (fixture_dir() / (name + ".json")).string();
}

}  // namespace

TEST_CASE("validate: valid and malformed inputs") {
  CHECK(run("validate " + path_of("EX1")).exit_code == 0);

  const auto broken = fixture_dir() / "broken.json";
  {
    std::ofstream out(broken);
    out << "{\"elements\": [\"a\"], \"table\": [[0, 0]]}";
  }
  const auto r = run("validate " + broken.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("$.table") != std::string::npos);
}

TEST_CASE("confluence: exit codes 0 and 3") {
  const auto ok = run("confluence " + path_of("NULL-3"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("locally confluent") != std::string::npos);

  const auto bad = run("confluence " + path_of("EX1"));
  CHECK(bad.exit_code == 3);
  CHECK(bad.output.find("not locally confluent") != std::string::npos);
  CHECK(bad.output.find("{(0,(0,0))}") != std::string::npos);
}

TEST_CASE("confluence: --cap forces the too-large exit") {
  const auto r = run("--cap 10 confluence " + path_of("NULL-2"));
  CHECK(r.exit_code == 6);
}

TEST_CASE("criteria: verdict exit codes") {
  CHECK(run("criteria " + path_of("EX1")).exit_code == 0);
  const auto ex2 = run("--cap 2000000 criteria " + path_of("EX2"));
  CHECK(ex2.exit_code == 4);
  CHECK(run("criteria " + path_of("LZ-neg")).exit_code == 5);
}

TEST_CASE("criteria --json round trips and is byte-deterministic") {
  const auto first = run("criteria --json " + path_of("EX1"));
  const auto second = run("criteria --json " + path_of("EX1"));
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  const auto parsed = criteria_report_from_json(json::parse(first.output));
  CHECK(criteria_report_to_json(parsed).dump(2) + "\n" == first.output);
}

TEST_CASE("classes: --check compares both constructions") {
  const auto r = run("classes --check " + path_of("EX1"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("agree") != std::string::npos);

  const auto listing = run("classes " + path_of("LZ-01"));
  CHECK(listing.exit_code == 0);
  CHECK(listing.output.find("{(1,a0)}") != std::string::npos);
  CHECK(listing.output.find("{(0,a0)}") != std::string::npos);
}

TEST_CASE("rewrite: DOT output contains the reduction edges") {
  const auto r = run("rewrite " + path_of("EX1") +
                     " --word \"<0,(2,0)> <0,(0,2)>\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph") != std::string::npos);
  CHECK(r.output.find("->") != std::string::npos);
  CHECK(r.output.find("{(0,(0,0))}") != std::string::npos);
}

TEST_CASE("globalize prints classes, tables and normal forms") {
  const auto r = run("globalize " + path_of("NULL-2") + " --enumerate 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("beta_") != std::string::npos);
  CHECK(r.output.find("iota") != std::string::npos);
  CHECK(r.output.find("normal-form words") != std::string::npos);

  const auto nc = run("--max-visited 2000 globalize " + path_of("EX1"));
  CHECK(nc.exit_code == 3);
  CHECK(nc.output.find("unique-normal-form condition: inconclusive") !=
        std::string::npos);

  const auto violated =
      run("--cap 2000000 --max-visited 50000 globalize " + path_of("EX2"));
  CHECK(violated.exit_code == 3);
  CHECK(violated.output.find("unique-normal-form condition: violated") !=
        std::string::npos);
}

TEST_CASE("algebra: the kernel criterion") {
  const auto r = run("algebra " + (fixture_dir() / "EX3.json").string());
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("E12*E23 = E13") != std::string::npos);
  CHECK(r.output.find("ker alpha_0: E23") != std::string::npos);
}

TEST_CASE("enumerate emits one JSON object per action") {
  const auto dir = fixture_dir();
  {
    std::ofstream m(dir / "m01.json");
    m << monoid_to_json(monoid_01()).dump();
    std::ofstream c(dir / "null2.json");
    c << semigroup_to_json(null_semigroup(2)).dump();
  }
  const auto r = run("enumerate --monoid " + (dir / "m01.json").string() +
                     " --carrier " + (dir / "null2.json").string());
  CHECK(r.exit_code == 0);
  // 4 actions, one per line, plus the count on stderr
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 5);

  const auto reports = run("enumerate --monoid " + (dir / "m01.json").string() +
                           " --carrier " + (dir / "null2.json").string() +
                           " --report");
  CHECK(reports.output.find("globalizable") != std::string::npos);
}

TEST_CASE("fixtures subcommand writes loadable files") {
  const auto out = fixture_dir() / "dump";
  const auto r = run("fixtures --out " + out.string());
  CHECK(r.exit_code == 0);
  const auto a = load_action_file(out / "EX1.json");
  CHECK(a == fixture("EX1"));
}

TEST_CASE("unknown fixture and missing file fail cleanly") {
  CHECK(run("validate /nonexistent/file.json").exit_code == 2);
  CHECK(run("enumerate --monoid /nope.json --carrier /nope.json").exit_code ==
        2);
}
