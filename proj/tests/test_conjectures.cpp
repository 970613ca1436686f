#include "itcx/conjectures.hpp"

#include <sstream>

#include "doctest.h"
#include "expected_tables.hpp"
#include "itcx/notation.hpp"

using namespace itcx;

TEST_SUITE_BEGIN("conjectures");

TEST_CASE("coverage of the regular families to length 20") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = check_cover(20, solver);
  CHECK(report.conjecture_holds());
  CHECK(report.hard_ok());
}

TEST_CASE("preperiod harness reproduces the single-piece grid") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = check_preperiod(11, 15, solver);
  REQUIRE(report.grid.size() == 12);
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 16; ++b)
      CHECK_MESSAGE(report.grid[a][b] == testdata::kSinglePiece[a][b], "a=", a, " b=", b);
  CHECK(report.conjecture_holds());  // both readings are clean in this range
  // ... and the unclaimed b=0 instance at a=11 really is anomalous
  CHECK(report.grid[11][5] != (report.grid[11][0] ^ 1));
}

TEST_CASE("odd run limits: settled case m=1") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = check_kodd(1, 30, solver);
  CHECK(report.hard_ok());
  CHECK(report.conjecture_holds());
}

TEST_CASE("odd run limits: k=5 matches the published column") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = check_kodd(2, 25, solver);
  REQUIRE(report.grid.size() == 1);
  for (int l = 0; l <= 25; ++l)
    CHECK(report.grid[0][static_cast<std::size_t>(l)] ==
          testdata::kKCross[static_cast<std::size_t>(l)][7]);  // column k=5
  CHECK(report.hard_ok());        // base parity values are settled
  CHECK(report.conjecture_holds());  // and the recurrence holds in range
}

TEST_CASE("structural simplifications over random segments") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = check_simplifications(6, 2, 80, 20250811, solver);
  CHECK(report.hard_ok());  // the settled i=0 split never fails
  CHECK(report.samples_run > 0);
  CHECK(report.seeded);
}

TEST_CASE("circular boards match the settled residue classes") {
  MemoCache cache;
  Solver solver(cache);
  const ConjectureReport report = circular_table(25, solver);
  CHECK(report.hard_ok());
  REQUIRE(report.grid.size() == 1);
  CHECK(report.grid[0][10] == 1);  // G((11)), the aperiodic class-1 witness
  CHECK(report.grid[0][20] == 0);  // G((21))
  CHECK(report.grid[0][0] == 1);   // G((1)): one forced move, then terminal
}

TEST_CASE("violations re-check and reports print") {
  MemoCache cache;
  Solver solver(cache);
  ConjectureReport report = check_preperiod(4, 15, solver);
  for (const Violation& v : report.violations) {
    // every reported position must re-parse and re-evaluate to the same value
    const Board board = parse_board(v.position);
    CHECK(("value " + std::to_string(solver.grundy(board))) == v.computed);
  }
  std::ostringstream out;
  print_report(out, report);
  CHECK(out.str().find("conjecture preperiod") != std::string::npos);
}

TEST_SUITE_END();
