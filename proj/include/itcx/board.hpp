#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace itcx {

enum class Cell : std::uint8_t { Empty = 0, Occupied = 1 };
enum class Shape : std::uint8_t { Linear, Circular };

// A placement, addressed by cell index. Indices count from the left end of a
// linear board; on a circular board they count from a fixed origin.
struct Move {
  int index = 0;
  friend bool operator==(Move a, Move b) { return a.index == b.index; }
  friend bool operator<(Move a, Move b) { return a.index < b.index; }
};

// A board state of the avoidance game: occupying a cell is forbidden if it
// would complete a run of k or more consecutive occupied cells. On circular
// boards runs may wrap; a run is capped at the board length, so a fully
// occupied circle shorter than k is still legal.
class Board {
 public:
  Board() = default;

  Board(Shape shape, std::vector<Cell> cells, int k = 3);

  static Board empty_linear(int length, int k = 3);
  static Board empty_circular(int length, int k = 3);

  Shape shape() const { return shape_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool occupied(int i) const { return cells_[static_cast<std::size_t>(i)] == Cell::Occupied; }
  Cell cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
  const std::vector<Cell>& cells() const { return cells_; }
  int piece_count() const;

  friend bool operator==(const Board& a, const Board& b) {
    return a.shape_ == b.shape_ && a.k_ == b.k_ && a.cells_ == b.cells_;
  }

 private:
  Shape shape_ = Shape::Linear;
  int k_ = 3;
  std::vector<Cell> cells_;
};

// Longest run of consecutive occupied cells (cyclic for circular boards,
// capped at the board length).
int max_run(const Board& board);

// True iff occupying `index` leaves the board legal. `index` must be an
// empty cell in range.
bool placement_legal(const Board& board, int index);

// Exactly the empty cells whose occupation creates no run of >= k.
std::vector<Move> legal_moves(const Board& board);

// Occupies the cell. Throws std::logic_error on an illegal move; a caller
// should only pass moves from legal_moves.
Board apply_move(const Board& board, Move move);

bool is_terminal(const Board& board);

Board reversed(const Board& board);

// Rotates a circular board left by `shift` cells.
Board rotated(const Board& board, int shift);

}  // namespace itcx
