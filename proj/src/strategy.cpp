#include "itcx/strategy.hpp"

#include <algorithm>
#include <mutex>

#include "itcx/notation.hpp"
#include "itcx/parallel.hpp"

namespace itcx {
namespace {

ParityResult require_regular(const Board& board, const char* who) {
  const ParityResult parity = classify_sum(canonicalize(board));
  if (!parity.regular())
    throw std::invalid_argument(std::string(who) + ": position does not classify regular");
  return parity;
}

// All regular boards of length <= max_length: every empty board, the
// single-piece boards with nonzero chi2 product or a star pattern, and the
// two-piece [X g X] stars.
std::vector<Board> regular_boards_up_to(int max_length) {
  std::vector<Board> out;
  for (int n = 0; n <= max_length; ++n) out.push_back(Board::empty_linear(n));
  for (int n = 1; n <= max_length; ++n) {
    for (int a = 0; a < n; ++a) {
      std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
      cells[static_cast<std::size_t>(a)] = Cell::Occupied;
      Board board(Shape::Linear, std::move(cells), 3);
      if (classify(board).regular()) out.push_back(std::move(board));
    }
  }
  for (int g = 4; g + 2 <= max_length; g += 5) {
    std::vector<Cell> cells(static_cast<std::size_t>(g + 2), Cell::Empty);
    cells.front() = Cell::Occupied;
    cells.back() = Cell::Occupied;
    Board board(Shape::Linear, std::move(cells), 3);
    if (classify(board).regular()) out.push_back(std::move(board));
  }
  return out;
}

}  // namespace

StrategyOutcome proactive_move(const Board& board) {
  const ParityResult parity = require_regular(board, "proactive_move");
  if (is_terminal(board)) throw std::invalid_argument("proactive_move: terminal position");
  for (const Move move : legal_moves(board)) {
    PositionSum after = canonicalize(apply_move(board, move));
    ParityResult next = classify_sum(after);
    if (next.sign == -parity.sign)
      return StrategyOutcome{move, false, std::move(after), std::move(next)};
  }
  throw StrategyCounterexample("no parity-flipping move from " + render(board));
}

StrategyOutcome reactive_reply(const Board& before, Move opponent_move) {
  const ParityResult parity = require_regular(before, "reactive_reply");
  const Board mid = apply_move(before, opponent_move);
  {
    PositionSum after = canonicalize(mid);
    ParityResult flipped = classify_sum(after);
    if (flipped.sign == -parity.sign)
      return StrategyOutcome{std::nullopt, true, std::move(after), std::move(flipped)};
  }
  for (const Move reply : legal_moves(mid)) {
    PositionSum after = canonicalize(apply_move(mid, reply));
    ParityResult next = classify_sum(after);
    if (next.sign == parity.sign)
      return StrategyOutcome{reply, false, std::move(after), std::move(next)};
  }
  throw StrategyCounterexample("no parity-preserving reply on " + render(before) +
                               " after move at index " + std::to_string(opponent_move.index));
}

MechanismReport verify_mechanism(int max_length, int jobs) {
  const std::vector<Board> boards = regular_boards_up_to(max_length);
  MechanismReport report;
  report.boards_checked = static_cast<int>(boards.size());
  std::mutex merge_mutex;
  std::atomic<int> proactive{0};
  std::atomic<int> replies{0};

  parallel_for(static_cast<int>(boards.size()), jobs, [&](int index) {
    const Board& board = boards[static_cast<std::size_t>(index)];
    const int sign = classify(board).sign();
    std::vector<MechanismFailure> local;
    auto fail = [&](std::string detail) { local.push_back({render(board), std::move(detail)}); };

    if (!is_terminal(board)) {
      try {
        const StrategyOutcome outcome = proactive_move(board);
        ++proactive;
        const Board next = apply_move(board, *outcome.move);
        if (sign == -1 && grundy_dense(next) != 0)
          fail("proactive move to " + render(next) + " does not reach value 0");
      } catch (const StrategyCounterexample& e) {
        fail(e.what());
      }
    }

    for (const Move move : legal_moves(board)) {
      try {
        const StrategyOutcome outcome = reactive_reply(board, move);
        ++replies;
        if (outcome.already_flipped) continue;
        if (sign == 1) {
          const Board mid = apply_move(board, move);
          const Board after = apply_move(mid, *outcome.move);
          if (grundy_dense(after) != 0)
            fail("reply " + std::to_string(outcome.move->index) + " to opponent " +
                 std::to_string(move.index) + " lands on " + render(after) +
                 " with nonzero value");
        }
      } catch (const StrategyCounterexample& e) {
        fail(e.what());
      }
    }

    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(merge_mutex);
      report.failures.insert(report.failures.end(), local.begin(), local.end());
    }
  });

  report.proactive_checked = proactive.load();
  report.replies_checked = replies.load();
  std::sort(report.failures.begin(), report.failures.end(),
            [](const MechanismFailure& a, const MechanismFailure& b) {
              return std::tie(a.board, a.detail) < std::tie(b.board, b.detail);
            });

  // Worth flagging: [X2] and [2X] are sometimes described as moveless, but
  // under the raw rules each has two legal placements, both into terminal
  // boards, giving them value 1 rather than 0.
  const Board x2 = parse_board("[X2]");
  report.notes.push_back("[X2] has " + std::to_string(legal_moves(x2).size()) +
                         " legal moves (not terminal); value " + std::to_string(grundy_dense(x2)));
  return report;
}

std::optional<Move> optimal_move(const Board& board, Solver& solver) {
  if (is_terminal(board) || solver.grundy(board) == 0) return std::nullopt;
  for (const Move move : legal_moves(board)) {
    if (solver.grundy(apply_move(board, move)) == 0) return move;
  }
  throw std::logic_error("nonzero position with no zero successor");
}

}  // namespace itcx
