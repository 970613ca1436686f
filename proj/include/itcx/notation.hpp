#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itcx/board.hpp"

namespace itcx {

// Position notation, patterned after chess FEN:
//
//   linear   := '[' ws item* ws ']'
//   circular := '(' ws item* ws ')'
//   item     := ('X' | digit+ | '~' digit) ws
//
// 'X' is an occupied cell, a decimal number a gap of that many empty cells,
// and '~d' a gap-residue class: any length congruent to d modulo 10. The
// canonical spelling of an empty circular board of length l is "(l)";
// residue classes are not allowed inside parentheses. Whitespace between
// items is accepted on input and never emitted.
struct PatternItem {
  enum class Kind : std::uint8_t { Piece, Gap, GapClass };
  Kind kind = Kind::Piece;
  int value = 0;  // gap length, or residue in 0..9

  static PatternItem piece() { return {Kind::Piece, 0}; }
  static PatternItem gap(int n) { return {Kind::Gap, n}; }
  static PatternItem gap_class(int r) { return {Kind::GapClass, r}; }
  friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

struct PositionPattern {
  Shape shape = Shape::Linear;
  std::vector<PatternItem> items;  // normalized: adjacent gaps merged, zero gaps dropped

  bool concrete() const;
  friend bool operator==(const PositionPattern&, const PositionPattern&) = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PositionPattern parse(std::string_view text);

// Canonical spelling: maximal decimal gap runs, no whitespace.
std::string render(const PositionPattern& pattern);
std::string render(const Board& board);

PositionPattern pattern_of(const Board& board);

// Concrete representative of a pattern: each gap class ~r becomes a gap of
// r + 10*occurrence cells. Throws if the result violates the no-k-run rule.
Board instantiate(const PositionPattern& pattern, int occurrence, int k = 3);

// parse + instantiate(0); the common case for concrete positions.
Board parse_board(std::string_view text, int k = 3);

}  // namespace itcx
