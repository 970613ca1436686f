#include "itcx/board.hpp"

#include <algorithm>

namespace itcx {

Board::Board(Shape shape, std::vector<Cell> cells, int k)
    : shape_(shape), k_(k), cells_(std::move(cells)) {
  if (k_ < 2) throw std::invalid_argument("run limit k must be >= 2");
  if (max_run(*this) >= k_) throw std::invalid_argument("board violates the no-k-run constraint");
}

Board Board::empty_linear(int length, int k) {
  if (length < 0) throw std::invalid_argument("negative board length");
  return Board(Shape::Linear, std::vector<Cell>(static_cast<std::size_t>(length), Cell::Empty), k);
}

Board Board::empty_circular(int length, int k) {
  if (length < 0) throw std::invalid_argument("negative board length");
  return Board(Shape::Circular, std::vector<Cell>(static_cast<std::size_t>(length), Cell::Empty), k);
}

int Board::piece_count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::Occupied));
}

int max_run(const Board& board) {
  const int n = board.size();
  if (n == 0) return 0;
  int best = 0;
  int run = 0;
  for (int i = 0; i < n; ++i) {
    run = board.occupied(i) ? run + 1 : 0;
    best = std::max(best, run);
  }
  if (board.shape() == Shape::Circular && board.occupied(0) && board.occupied(n - 1)) {
    if (best == n) return n;  // fully occupied circle: run capped at length
    int head = 0;
    while (head < n && board.occupied(head)) ++head;
    int tail = 0;
    while (tail < n && board.occupied(n - 1 - tail)) ++tail;
    best = std::max(best, head + tail);
  }
  return best;
}

bool placement_legal(const Board& board, int index) {
  const int n = board.size();
  if (index < 0 || index >= n || board.occupied(index)) return false;
  const bool wrap = board.shape() == Shape::Circular;
  int run = 1;
  for (int j = index - 1, steps = 0; steps < n - 1; --j, ++steps) {
    if (j < 0) {
      if (!wrap) break;
      j += n;
    }
    if (!board.occupied(j)) break;
    ++run;
  }
  for (int j = index + 1, steps = 0; steps < n - 1; ++j, ++steps) {
    if (j >= n) {
      if (!wrap) break;
      j -= n;
    }
    if (!board.occupied(j)) break;
    ++run;
  }
  if (run > n) run = n;  // every cell counted at most once on a circle
  return run < board.k();
}

std::vector<Move> legal_moves(const Board& board) {
  std::vector<Move> moves;
  for (int i = 0; i < board.size(); ++i) {
    if (!board.occupied(i) && placement_legal(board, i)) moves.push_back(Move{i});
  }
  return moves;
}

Board apply_move(const Board& board, Move move) {
  if (!placement_legal(board, move.index)) throw std::logic_error("illegal move");
  std::vector<Cell> cells = board.cells();
  cells[static_cast<std::size_t>(move.index)] = Cell::Occupied;
  return Board(board.shape(), std::move(cells), board.k());
}

bool is_terminal(const Board& board) {
  for (int i = 0; i < board.size(); ++i) {
    if (!board.occupied(i) && placement_legal(board, i)) return false;
  }
  return true;
}

Board reversed(const Board& board) {
  std::vector<Cell> cells(board.cells().rbegin(), board.cells().rend());
  return Board(board.shape(), std::move(cells), board.k());
}

Board rotated(const Board& board, int shift) {
  if (board.shape() != Shape::Circular) throw std::invalid_argument("rotated: circular boards only");
  const int n = board.size();
  if (n == 0) return board;
  shift = ((shift % n) + n) % n;
  std::vector<Cell> cells(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i)] = board.cell((i + shift) % n);
  return Board(Shape::Circular, std::move(cells), board.k());
}

}  // namespace itcx
