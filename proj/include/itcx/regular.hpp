#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itcx/board.hpp"
#include "itcx/reduce.hpp"

namespace itcx {

// The six classified families of linear k=3 positions whose game values are
// pinned to the sign: every R1 member evaluates to 0 and every Rm1 member
// to 1. Boards outside all six are NotRegular.
//
//   R1_Empty    [a]      chi1(a) = +1        Rm1_Empty   [a]      chi1(a) = -1
//   R1_Single   [a X b]  chi2(a)chi2(b)=+1   Rm1_Single  [a X b]  chi2(a)chi2(b)=-1
//   R1_Star     [X ~6], [~6 X], [X ~4 X]     Rm1_Star    [X ~1], [~1 X], [X ~9 X]
enum class Family : std::uint8_t {
  R1_Empty,
  R1_Single,
  R1_Star,
  Rm1_Empty,
  Rm1_Single,
  Rm1_Star,
  NotRegular,
};

enum class StarVariant : std::uint8_t { X6, SixX, X4X, X1, OneX, X9X };

struct RegularClass {
  Family family = Family::NotRegular;
  std::optional<StarVariant> star;

  bool regular() const { return family != Family::NotRegular; }
  // +1 for R1 families, -1 for Rm1 families, 0 when not regular.
  int sign() const;
  // 0 for sign +1, 1 for sign -1; nullopt when not regular.
  std::optional<int> predicted_sg() const;
  std::string name() const;

  friend bool operator==(const RegularClass&, const RegularClass&) = default;
};

// Classifies one linear k=3 board. Multi-piece boards other than the
// [X ~4 X] / [X ~9 X] patterns are NotRegular even when their value happens
// to be 0 or 1.
RegularClass classify(const Board& board);

// Every family whose defining condition the board satisfies, checked
// independently of the classifier's dispatch; the families are expected to
// be pairwise disjoint, so this has at most one element.
std::vector<RegularClass> matching_families(const Board& board);

struct ParityResult {
  int sign = 0;  // product of component signs; 0 when any component is NotRegular
  std::vector<RegularClass> component_classes;

  bool regular() const { return sign != 0; }
  std::optional<int> predicted_sg() const;
};

ParityResult classify_sum(const PositionSum& sum);

}  // namespace itcx
