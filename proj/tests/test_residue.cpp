#include "itcx/residue.hpp"

#include <map>

#include "doctest.h"
#include "itcx/board.hpp"
#include "itcx/solver.hpp"

using namespace itcx;

TEST_SUITE_BEGIN("residue");

TEST_CASE("chi1 values") {
  CHECK(chi1(Residue(0)) == 1);
  CHECK(chi1(Residue(5)) == -1);
  CHECK(chi1(Residue(7)) == -1);
  CHECK(chi1(Residue(4)) == -1);  // 7*4 = 28 = 8 mod 10, outside {0..4}
  for (int a : {0, 2, 3, 6, 9}) CHECK(chi1(Residue(a)) == 1);
  for (int a : {1, 4, 5, 7, 8}) CHECK(chi1(Residue(a)) == -1);
}

TEST_CASE("chi2 values") {
  CHECK(chi2(Residue(0)) == 1);
  CHECK(chi2(Residue(7)) == 1);
  CHECK(chi2(Residue(2)) == -1);
  CHECK(chi2(Residue(1)) == 0);  // 7*1 = 7, outside both arcs
  for (int a : {0, 3, 7}) CHECK(chi2(Residue(a)) == 1);
  for (int a : {2, 5, 8}) CHECK(chi2(Residue(a)) == -1);
  for (int a : {1, 4, 6, 9}) CHECK(chi2(Residue(a)) == 0);
}

TEST_CASE("chi2 is symmetric under negation") {
  for (int a = 0; a < 10; ++a) CHECK(chi2(Residue(a)) == chi2(Residue(10 - a)));
}

// The two chi1 reflection identities are degenerate at the fixed points of
// a -> -a: no {+1,-1}-valued function can satisfy chi1(-0) = -chi1(0). They
// hold everywhere else; the other five identities hold on all of Z/10Z.
TEST_CASE("identity matrix of the chi calculus") {
  std::map<std::string, std::map<int, bool>> matrix;
  for (const IdentityCheck& check : prop21_check())
    matrix[check.identity][check.residue] = check.holds;
  REQUIRE(matrix.size() == 7);
  for (const auto& [identity, cells] : matrix) {
    const bool reflective =
        identity == "chi1(-a) == -chi1(a)" || identity == "chi1(5-a) == chi1(a)";
    for (const auto& [a, holds] : cells) {
      if (reflective && (a == 0 || a == 5))
        CHECK_FALSE(holds);
      else
        CHECK_MESSAGE(holds, identity, " at a=", a);
    }
  }
  // the degenerate cells evaluate exactly as arithmetic dictates
  CHECK(chi1(Residue(-0)) == chi1(Residue(0)));
  CHECK(chi1(Residue(-5)) == chi1(Residue(5)));
  CHECK(chi1(Residue(5 + 0)) == -chi1(Residue(0)));  // the +5 shift itself is fine
}

TEST_CASE("worked examples of the identities") {
  CHECK(chi1(Residue(5 + 0)) == -chi1(Residue(0)));
  CHECK(chi2(Residue(-3)) == chi2(Residue(3)));
  CHECK(chi1(Residue(2 - 1)) == chi2(Residue(2)));
}

TEST_CASE("two-equality dichotomy, worked pairs") {
  const AlphaCheck zz = lemma_alpha_check(Residue(0), Residue(0));
  CHECK_FALSE(zz.first_holds);  // chi1(0)chi1(0) = +1 but chi1(4) = -1
  CHECK(zz.second_holds);       // chi1(1)chi1(9) = -1 = chi1(4)
  const AlphaCheck tt = lemma_alpha_check(Residue(3), Residue(3));
  CHECK(tt.first_holds);        // chi1(3)chi1(3) = +1 = chi1(0)
}

TEST_CASE("two-equality dichotomy, all pairs") {
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      const AlphaCheck check = lemma_alpha_check(Residue(a), Residue(b));
      CHECK_MESSAGE((check.first_holds || check.second_holds), "pair (", a, ",", b, ")");
    }
  }
}

TEST_CASE("chi1 agrees with the solver on empty boards") {
  MemoCache cache;
  Solver solver(cache);
  for (int n = 0; n <= 25; ++n) {
    const int expected = chi1(Residue(n)) == 1 ? 0 : 1;
    CHECK_MESSAGE(solver.grundy(Board::empty_linear(n)) == expected, "n=", n);
  }
}

TEST_SUITE_END();
