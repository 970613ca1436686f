#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "itcx/board.hpp"

namespace itcx {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact Sprague-Grundy solver over raw bit-packed states, one bit per cell,
// for any run limit and either shape. The transposition table is keyed by
// the minimum of a state over its symmetry group (reflection; plus rotations
// when circular). Storage is a flat array while 2^length stays within the
// 64 MB ceiling, and a hash table above that.
class DenseSolver {
 public:
  static constexpr int kMaxLength = 30;
  static constexpr int kFlatMaxLength = 26;  // 2^26 one-byte entries = 64 MB

  DenseSolver(Shape shape, int k, int length);

  // Budget accounting may be shared across solvers; each newly computed
  // state counts one node.
  void set_budget(std::atomic<std::uint64_t>* nodes, std::uint64_t limit);

  int grundy(std::uint32_t state);
  int grundy(const Board& board);

  Shape shape() const { return shape_; }
  int k() const { return k_; }
  int length() const { return length_; }

  bool placement_legal(std::uint32_t state, int index) const;
  std::uint32_t canonical(std::uint32_t state) const;
  std::uint32_t reverse_bits(std::uint32_t state) const;

 private:
  int compute(std::uint32_t canon);
  int lookup(std::uint32_t canon) const;  // -1 when absent
  void store(std::uint32_t canon, int value);

  Shape shape_;
  int k_;
  int length_;
  std::uint32_t full_mask_;
  std::vector<std::uint8_t> flat_;
  std::unordered_map<std::uint32_t, std::uint8_t> table_;
  std::atomic<std::uint64_t>* nodes_ = nullptr;
  std::uint64_t node_limit_ = 0;
};

std::uint32_t board_bits(const Board& board);

// Per-thread pool of dense solvers keyed by (shape, k, length). Small
// lengths get reused across calls; longer one-shot solves are discarded so a
// single big table never outlives its query.
class DensePool {
 public:
  static constexpr int kPooledMaxLength = 22;

  int grundy(const Board& board);
  void set_budget(std::atomic<std::uint64_t>* nodes, std::uint64_t limit);

 private:
  std::map<std::tuple<Shape, int, int>, std::unique_ptr<DenseSolver>> pool_;
  std::atomic<std::uint64_t>* nodes_ = nullptr;
  std::uint64_t node_limit_ = 0;
};

// One-shot convenience with a thread-local pool.
int grundy_dense(const Board& board);

}  // namespace itcx
