#include "itcx/strategy.hpp"

#include "doctest.h"
#include "itcx/dense.hpp"
#include "itcx/notation.hpp"

using namespace itcx;

namespace {

std::string after_string(const StrategyOutcome& outcome) {
  std::string out;
  for (const Component& c : outcome.after.components) {
    if (!out.empty()) out += ' ';
    out += render(c.board);
  }
  return out;
}

std::vector<Board> regular_boards(int max_length) {
  std::vector<Board> out;
  for (int n = 0; n <= max_length; ++n) out.push_back(Board::empty_linear(n));
  for (int n = 1; n <= max_length; ++n)
    for (int a = 0; a < n; ++a) {
      std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
      cells[static_cast<std::size_t>(a)] = Cell::Occupied;
      Board board(Shape::Linear, std::move(cells), 3);
      if (classify(board).regular()) out.push_back(std::move(board));
    }
  for (int g = 4; g + 2 <= max_length; g += 5) {
    std::vector<Cell> cells(static_cast<std::size_t>(g + 2), Cell::Empty);
    cells.front() = cells.back() = Cell::Occupied;
    out.emplace_back(Shape::Linear, std::move(cells), 3);
  }
  return out;
}

// distance from the placed cell to the nearest piece of the original board
int proximity_distance(const Board& before, Move move) {
  int best = before.size() + 1;
  for (int i = 0; i < before.size(); ++i)
    if (before.occupied(i)) best = std::min(best, std::abs(i - move.index));
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("strategy");

TEST_CASE("proactive worked examples") {
  StrategyOutcome out = proactive_move(parse_board("[3]"));
  CHECK(out.move == Move{0});
  CHECK(after_string(out) == "[X2]");
  CHECK(out.parity.sign == -1);

  out = proactive_move(parse_board("[5]"));
  CHECK(out.move == Move{2});
  CHECK(after_string(out) == "[2X2]");
  CHECK(out.parity.sign == 1);

  out = proactive_move(parse_board("[2]"));
  CHECK(out.move == Move{0});
  CHECK(after_string(out) == "[X1]");

  // proximity move from the one-piece star: [X6] + index 1 reduces to [4]
  out = proactive_move(parse_board("[X6]"));
  CHECK(out.move == Move{1});
  CHECK(after_string(out) == "[4]");
  CHECK(out.parity.sign == -1);
}

TEST_CASE("proactive preconditions") {
  CHECK_THROWS_AS(proactive_move(parse_board("[1X1]")), std::invalid_argument);  // not regular
  CHECK_THROWS_AS(proactive_move(parse_board("[X]")), std::invalid_argument);    // terminal
}

TEST_CASE("reactive worked examples") {
  // boundary opponent move on [10]: reply at distance 2 restores sign +1
  StrategyOutcome out = reactive_reply(parse_board("[10]"), Move{0});
  CHECK_FALSE(out.already_flipped);
  CHECK(out.move == Move{2});
  CHECK(after_string(out) == "[X7]");
  CHECK(out.parity.sign == 1);

  // interior opponent move on [10]: the lowest parity-restoring reply splits
  // into [2X] + [X5], two sign -1 components
  out = reactive_reply(parse_board("[10]"), Move{4});
  CHECK_FALSE(out.already_flipped);
  CHECK(out.move == Move{2});
  CHECK(out.parity.sign == 1);
  CHECK(out.after.components.size() == 2);

  // adjacent move on [2X2] is a proximity blunder: already flipped
  out = reactive_reply(parse_board("[2X2]"), Move{1});
  CHECK(out.already_flipped);
  CHECK_FALSE(out.move.has_value());
  CHECK(out.parity.sign == -1);
}

TEST_CASE("distance-1 proximity moves always flip the parity") {
  for (const Board& board : regular_boards(20)) {
    for (Move move : legal_moves(board)) {
      if (proximity_distance(board, move) != 1) continue;
      const StrategyOutcome out = reactive_reply(board, move);
      CHECK_MESSAGE(out.already_flipped, render(board), " + ", move.index);
    }
  }
}

TEST_CASE("distance-2 moves flip on empty and single-piece boards") {
  for (const Board& board : regular_boards(20)) {
    const Family family = classify(board).family;
    const bool star = family == Family::R1_Star || family == Family::Rm1_Star;
    for (Move move : legal_moves(board)) {
      if (proximity_distance(board, move) != 2) continue;
      const StrategyOutcome out = reactive_reply(board, move);
      if (!star) {
        CHECK_MESSAGE(out.already_flipped, render(board), " + ", move.index);
      } else {
        // star boards sometimes land outside the families and need a reply
        CHECK((out.already_flipped || out.move.has_value()));
      }
    }
  }
  // the documented non-flip: [X6] + distance 2 lands on [X4] (value 3)
  const StrategyOutcome out = reactive_reply(parse_board("[X6]"), Move{2});
  CHECK_FALSE(out.already_flipped);
  REQUIRE(out.move.has_value());
}

TEST_CASE("proactive move exists on every regular board to length 30") {
  for (const Board& board : regular_boards(30)) {
    if (is_terminal(board)) continue;
    CHECK_NOTHROW(proactive_move(board));
  }
}

TEST_CASE("mechanism verification stays clean to length 16") {
  const MechanismReport report = verify_mechanism(16);
  CHECK(report.ok());
  CHECK(report.boards_checked > 0);
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("optimal move") {
  MemoCache cache;
  Solver solver(cache);
  const std::optional<Move> win = optimal_move(Board::empty_linear(4), solver);
  REQUIRE(win.has_value());
  CHECK(solver.grundy(apply_move(Board::empty_linear(4), *win)) == 0);
  CHECK_FALSE(optimal_move(Board::empty_linear(3), solver).has_value());
  CHECK_FALSE(optimal_move(parse_board("[XX1]"), solver).has_value());
}

TEST_SUITE_END();
