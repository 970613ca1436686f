#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

#ifndef ITCX_BIN
#error "ITCX_BIN must point at the built CLI"
#endif

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stdout+stderr captured; stdin supplied when given.
RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  const std::string dir = std::filesystem::temp_directory_path() / "itcx-cli-test";
  std::filesystem::create_directories(dir);
  const std::string in_path = dir + "/stdin";
  {
    std::ofstream in(in_path);
    in << stdin_data;
  }
  const std::string cmd = std::string(ITCX_BIN) + " " + args + " < " + in_path + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve prints value, decomposition and class") {
  const RunResult r = run_cli("solve \"[10]\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "sg\t0"));
  CHECK(contains(r.output, "class\tR1_Empty"));
  const RunResult circ = run_cli("solve \"(11)\"");
  CHECK(circ.exit_code == 0);
  CHECK(contains(circ.output, "sg\t1"));
}

TEST_CASE("parse failures exit 2") {
  CHECK(run_cli("solve \"[3Y]\"").exit_code == 2);
  CHECK(run_cli("solve \"oops\"").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  const RunResult r = run_cli("--budget 5 solve \"[25]\"");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "budget"));
}

TEST_CASE("verification suites succeed") {
  CHECK(run_cli("verify lemma-alpha").exit_code == 0);
  const RunResult red = run_cli("verify reductions --samples 25 --max-len 10");
  CHECK(red.exit_code == 0);
  CHECK(contains(red.output, "# seed"));
  CHECK(run_cli("verify mechanism --max-len 12").exit_code == 0);
  CHECK(run_cli("verify conjecture circular --max-len 15").exit_code == 0);
}

TEST_CASE("tables are byte-stable across jobs") {
  const std::string args = "table single-piece --max-a 5 --max-b 8";
  const RunResult one = run_cli(args);
  const RunResult two = run_cli(args + " --jobs 2");
  CHECK(one.exit_code == 0);
  // the echoed invocation differs by the --jobs flag; compare from the header
  const std::string grid_one = one.output.substr(one.output.find("a\\b"));
  const std::string grid_two = two.output.substr(two.output.find("a\\b"));
  CHECK(grid_one == grid_two);
  CHECK(contains(grid_one, "0\t0\t1\t1\t0\t3\t1\t0\t0\t1"));
}

TEST_CASE("json output is parseable shape") {
  const RunResult r = run_cli("--format json solve \"[4X9]\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"sg\": 4"));
  CHECK(contains(r.output, "\"class\": \"NotRegular\""));
}

TEST_CASE("play declares the loser of a scripted game") {
  // [2]: two moves fill the board; the second player has no reply
  const RunResult r = run_cli("play \"[2]\" --engine oracle", "1\n");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "engine plays 0"));
  CHECK(contains(r.output, "lose"));
  const RunResult quit = run_cli("play \"[9]\"", "q\n");
  CHECK(quit.exit_code == 0);
  CHECK(contains(quit.output, "quit."));
  const RunResult reprompt = run_cli("play \"[X2]\" --engine lemma", "0\n2\n");
  CHECK(contains(reprompt.output, "not playable"));
}

TEST_CASE("cache build and info round trip") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "itcx-cli-test" / "cli.cache").string();
  std::filesystem::remove(path);
  const RunResult build = run_cli("--cache " + path + " cache build --max-n 12");
  CHECK(build.exit_code == 0);
  const RunResult info = run_cli("--cache " + path + " cache info");
  CHECK(info.exit_code == 0);
  CHECK(contains(info.output, "ITCX-CACHE v1 k=3 reductions=on"));
  const RunResult warm = run_cli("--cache " + path + " solve \"[12]\"");
  CHECK(warm.exit_code == 0);
  CHECK(contains(warm.output, "sg\t0"));
  // a mismatched mode must refuse the file
  CHECK(run_cli("--cache " + path + " --no-reductions solve \"[12]\"").exit_code == 2);
  std::filesystem::remove(path);
}

TEST_SUITE_END();
