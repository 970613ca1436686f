#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itcx/regular.hpp"
#include "itcx/solver.hpp"

namespace itcx {

// Raised when a regular board admits no parity-flipping move or no
// parity-preserving reply. Either would contradict the reduction mechanism
// the strategy is built on, so callers must surface it, never swallow it.
class StrategyCounterexample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategyOutcome {
  std::optional<Move> move;     // absent when the opponent already flipped parity
  bool already_flipped = false;
  PositionSum after;            // canonical sum after our move (or the opponent's)
  ParityResult parity;
};

// From a regular position of sign s, the deterministic lowest-index move
// whose canonical successor classifies regular with sign -s.
StrategyOutcome proactive_move(const Board& board);

// Reply selection after the opponent moves on a regular position of sign s.
// If the opponent's move already left a regular sum of sign -s (a proximity
// blunder), reports AlreadyFlipped; otherwise returns the lowest-index reply
// whose canonical successor classifies regular with sign s again.
StrategyOutcome reactive_reply(const Board& before, Move opponent_move);

struct MechanismFailure {
  std::string board;
  std::string detail;
};

struct MechanismReport {
  int boards_checked = 0;
  int proactive_checked = 0;
  int replies_checked = 0;
  std::vector<MechanismFailure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

// Exhaustive check over every regular board up to max_length: a proactive
// parity-flipping move exists, every opponent move is AlreadyFlipped or
// answerable, and the dense solver confirms the claimed values (successor
// value 0 after a proactive move from sign -1; value 0 after our reply
// preserves sign +1).
MechanismReport verify_mechanism(int max_length, int jobs = 1);

// Oracle-backed play: the lowest-index move to a value-0 successor, or
// nullopt when the position is already value 0 (or terminal).
std::optional<Move> optimal_move(const Board& board, Solver& solver);

}  // namespace itcx
