#pragma once

#include <array>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "itcx/board.hpp"

namespace itcx {

// Value-preserving rewrite rules over linear k=3 boards, written with w and v
// for arbitrary (possibly empty) subpositions:
//
//   L1.1  [X1X w]    = [X w]            L1.4  [XX1 w]    = [w]
//   L1.2  [w X1X]    = [w X]            L1.5  [w 1XX]    = [w]
//   L1.3  [w X1X v]  = [wX] + [Xv]      L1.6  [w 1XX1 v] = [w] + [v]
//
//   L2.1  [X2X w]    = [2X w]
//   L2.2  [w X2X]    = [w X2]
//   L2.3  [w X4X v]  = [w X2] + [2X v]
//
// Each equality holds as a Sprague-Grundy identity; the L1 family also
// preserves moves cell-for-cell on the surviving cells.
enum class RuleId : std::uint8_t { L1_1, L1_2, L1_3, L1_4, L1_5, L1_6, L2_1, L2_2, L2_3 };

constexpr std::array<RuleId, 9> all_rules() {
  return {RuleId::L1_1, RuleId::L1_2, RuleId::L1_3, RuleId::L1_4, RuleId::L1_5,
          RuleId::L1_6, RuleId::L2_1, RuleId::L2_2, RuleId::L2_3};
}

std::string_view rule_name(RuleId id);

enum class ReductionMode : std::uint8_t {
  Full,      // L1 + L2 rules
  BasicOnly, // L1 rules only; keeps X2X/X4X patterns intact
  Identity,  // no rewriting at all
};

// One independent component of a decomposed position. cell_map[i] is the
// index of the cell on the source board that component cell i survives from,
// or -1 for cells synthesized by a rewrite (the gap halves of an X4X split).
struct Component {
  Board board;
  std::vector<int> cell_map;
};

// A disjunctive sum of components; the game value of the source position is
// the XOR of the component values. Zero-length components are dropped, as is
// the moveless two-piece board [XX], which is identically the zero game.
struct PositionSum {
  std::vector<Component> components;

  std::vector<Board> boards() const;
};

// True iff the cells contain neither XX nor X1X, i.e. no rewrite of the L1
// family applies anywhere. Linear k=3 boards only.
bool is_single(const Board& board);

// Rewrites to a fixpoint with a deterministic strategy: L1 rules before L2
// rules, leftmost match first, lowest rule number on ties; then each
// component is reflection-normalized (piece-leftmost orientation) and the
// components are sorted by their rendered spelling. Linear k=3 boards only.
PositionSum canonicalize(const Board& board, ReductionMode mode = ReductionMode::Full);

// Identity decomposition: the board itself as a single component.
PositionSum split_components(const Board& board);

// Rewrites to a fixpoint picking uniformly among all applicable matches at
// every step. The resulting component multiset may differ from the
// deterministic one, but its XOR of values may not.
PositionSum canonicalize_shuffled(const Board& board, std::mt19937& rng,
                                  ReductionMode mode = ReductionMode::Full);

// Builds the two sides of a rule from concrete segments, for direct
// verification of the value identity. Returns nullopt when a side would
// violate the no-3-run constraint.
struct RuleInstance {
  Board lhs;
  std::vector<Board> rhs;
};

std::optional<RuleInstance> instantiate_rule(RuleId id, const std::vector<Cell>& w,
                                             const std::vector<Cell>& v);

}  // namespace itcx
