#include "itcx/board.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "itcx/notation.hpp"

using namespace itcx;

namespace {

std::vector<int> move_indices(const Board& board) {
  std::vector<int> out;
  for (Move m : legal_moves(board)) out.push_back(m.index);
  return out;
}

// All legal boards of the given length, built by brute force.
template <typename Fn>
void for_each_legal(Shape shape, int k, int n, Fn&& fn) {
  for (unsigned s = 0; s < (1u << n); ++s) {
    std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) cells[static_cast<std::size_t>(i)] = Cell::Occupied;
    try {
      fn(Board(shape, std::move(cells), k));
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("rules");

TEST_CASE("legal moves") {
  CHECK(move_indices(parse_board("[2]")) == std::vector<int>{0, 1});
  CHECK(move_indices(parse_board("[XX1]")).empty());  // index 2 would complete XXX
  CHECK(move_indices(parse_board("[X1X]")).empty());
  CHECK(move_indices(Board::empty_circular(3)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("a circle of three admits exactly two placements in any order") {
  const Board start = Board::empty_circular(3);
  for (Move first : legal_moves(start)) {
    const Board one = apply_move(start, first);
    for (Move second : legal_moves(one)) {
      const Board two = apply_move(one, second);
      CHECK(is_terminal(two));  // the last cell would close a wraparound run
    }
    CHECK(legal_moves(one).size() == 2);
  }
}

TEST_CASE("apply move") {
  CHECK(render(apply_move(parse_board("[3]"), Move{1})) == "[1X1]");
  CHECK(render(apply_move(parse_board("[2X2]"), Move{0})) == "[X1X2]");
  CHECK(render(apply_move(parse_board("[X2]"), Move{1})) == "[XX1]");
  CHECK_THROWS_AS(apply_move(parse_board("[XX1]"), Move{2}), std::logic_error);
  CHECK_THROWS_AS(apply_move(parse_board("[3]"), Move{5}), std::logic_error);
}

TEST_CASE("terminal detection") {
  CHECK(is_terminal(parse_board("[XX1]")));
  CHECK(is_terminal(parse_board("[X1X]")));
  CHECK_FALSE(is_terminal(parse_board("[5]")));
  CHECK(is_terminal(Board()));  // the zero-length board
}

TEST_CASE("a fully occupied short circle is legal") {
  Board two = Board::empty_circular(2);
  two = apply_move(two, Move{0});
  two = apply_move(two, Move{1});
  CHECK(two.piece_count() == 2);
  CHECK(is_terminal(two));
  CHECK_THROWS_AS(Board(Shape::Circular, std::vector<Cell>(3, Cell::Occupied), 3),
                  std::invalid_argument);
}

TEST_CASE("removing a piece from a legal board keeps it legal") {
  for (int n = 0; n <= 12; ++n) {
    for_each_legal(Shape::Linear, 3, n, [&](const Board& board) {
      for (int i = 0; i < board.size(); ++i) {
        if (!board.occupied(i)) continue;
        std::vector<Cell> cells = board.cells();
        cells[static_cast<std::size_t>(i)] = Cell::Empty;
        CHECK_NOTHROW(Board(Shape::Linear, std::move(cells), 3));
      }
    });
  }
}

TEST_CASE("legal moves are empty cells; huge k allows every empty cell") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len_dist(0, 16);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = len_dist(rng);
    std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
    for (int i = 0; i < n; ++i)
      if (coin(rng) == 0 && !(i >= 2 && cells[i - 1] == Cell::Occupied && cells[i - 2] == Cell::Occupied))
        cells[static_cast<std::size_t>(i)] = Cell::Occupied;
    const Board board(Shape::Linear, cells, 3);
    for (Move m : legal_moves(board)) CHECK_FALSE(board.occupied(m.index));
    const Board loose(Shape::Linear, cells, n + 2);
    CHECK(static_cast<int>(legal_moves(loose).size()) == board.size() - board.piece_count());
  }
}

TEST_CASE("reflection equivariance of legal moves") {
  for (int n = 0; n <= 11; ++n) {
    for_each_legal(Shape::Linear, 3, n, [&](const Board& board) {
      std::vector<int> mirrored;
      for (Move m : legal_moves(reversed(board))) mirrored.push_back(board.size() - 1 - m.index);
      std::sort(mirrored.begin(), mirrored.end());
      CHECK(mirrored == move_indices(board));
    });
  }
}

TEST_CASE("rotation equivariance on circles") {
  for_each_legal(Shape::Circular, 3, 9, [&](const Board& board) {
    const Board rot = rotated(board, 4);
    CHECK(legal_moves(rot).size() == legal_moves(board).size());
    CHECK(max_run(rot) == max_run(board));
  });
}

TEST_SUITE_END();
