#include "itcx/dense.hpp"

#include <bit>

#include "itcx/bits.hpp"

namespace itcx {

DenseSolver::DenseSolver(Shape shape, int k, int length)
    : shape_(shape), k_(k), length_(length) {
  if (length < 0 || length > kMaxLength)
    throw std::invalid_argument("board too long for the dense tier");
  if (k < 2) throw std::invalid_argument("run limit k must be >= 2");
  full_mask_ = length == 0 ? 0u : (length == 32 ? ~0u : (1u << length) - 1);
  if (length <= kFlatMaxLength) {
    flat_.assign(std::size_t{1} << length, 0xFF);
  }
}

void DenseSolver::set_budget(std::atomic<std::uint64_t>* nodes, std::uint64_t limit) {
  nodes_ = nodes;
  node_limit_ = limit;
}

std::uint32_t DenseSolver::reverse_bits(std::uint32_t state) const {
  if (length_ == 0) return 0;
  return bits::reverse32(state) >> (32 - length_);
}

std::uint32_t DenseSolver::canonical(std::uint32_t state) const {
  std::uint32_t best = std::min(state, reverse_bits(state));
  if (shape_ == Shape::Circular && length_ > 0) {
    const std::uint32_t rev = reverse_bits(state);
    for (int r = 1; r < length_; ++r) {
      std::uint32_t a = ((state >> r) | (state << (length_ - r))) & full_mask_;
      std::uint32_t b = ((rev >> r) | (rev << (length_ - r))) & full_mask_;
      best = std::min({best, a, b});
    }
  }
  return best;
}

bool DenseSolver::placement_legal(std::uint32_t state, int index) const {
  const bool wrap = shape_ == Shape::Circular;
  int run = 1;
  for (int j = index - 1, steps = 0; steps < length_ - 1; --j, ++steps) {
    if (j < 0) {
      if (!wrap) break;
      j += length_;
    }
    if (!(state & (1u << j))) break;
    ++run;
  }
  for (int j = index + 1, steps = 0; steps < length_ - 1; ++j, ++steps) {
    if (j >= length_) {
      if (!wrap) break;
      j -= length_;
    }
    if (!(state & (1u << j))) break;
    ++run;
  }
  if (run > length_) run = length_;
  return run < k_;
}

int DenseSolver::lookup(std::uint32_t canon) const {
  if (!flat_.empty()) {
    std::uint8_t v = flat_[canon];
    return v == 0xFF ? -1 : v;
  }
  auto it = table_.find(canon);
  return it == table_.end() ? -1 : it->second;
}

void DenseSolver::store(std::uint32_t canon, int value) {
  if (value > 0xFE) throw std::runtime_error("grundy value exceeds the 8-bit store");
  if (!flat_.empty())
    flat_[canon] = static_cast<std::uint8_t>(value);
  else
    table_.emplace(canon, static_cast<std::uint8_t>(value));
}

int DenseSolver::grundy(std::uint32_t state) {
  const std::uint32_t canon = canonical(state);
  int v = lookup(canon);
  return v >= 0 ? v : compute(canon);
}

int DenseSolver::compute(std::uint32_t canon) {
  if (nodes_ && ++*nodes_ > node_limit_)
    throw BudgetExceeded("node budget exceeded in the dense tier");
  std::uint64_t seen = 0;
  for (int i = 0; i < length_; ++i) {
    if (canon & (1u << i)) continue;
    if (!placement_legal(canon, i)) continue;
    const int child = grundy(canon | (1u << i));
    if (child >= 64) throw std::runtime_error("grundy value out of expected range");
    seen |= std::uint64_t{1} << child;
  }
  const int value = std::countr_one(seen);
  store(canon, value);
  return value;
}

int DenseSolver::grundy(const Board& board) {
  if (board.shape() != shape_ || board.k() != k_ || board.size() != length_)
    throw std::invalid_argument("board does not match this dense solver");
  return grundy(board_bits(board));
}

std::uint32_t board_bits(const Board& board) {
  if (board.size() > 32) throw std::invalid_argument("board too long to bit-pack");
  std::uint32_t bits = 0;
  for (int i = 0; i < board.size(); ++i) {
    if (board.occupied(i)) bits |= 1u << i;
  }
  return bits;
}

int DensePool::grundy(const Board& board) {
  const auto key = std::make_tuple(board.shape(), board.k(), board.size());
  if (board.size() > kPooledMaxLength) {
    DenseSolver solver(board.shape(), board.k(), board.size());
    solver.set_budget(nodes_, node_limit_);
    return solver.grundy(board);
  }
  auto it = pool_.find(key);
  if (it == pool_.end()) {
    it = pool_.emplace(key, std::make_unique<DenseSolver>(board.shape(), board.k(), board.size()))
             .first;
  }
  it->second->set_budget(nodes_, node_limit_);
  return it->second->grundy(board);
}

void DensePool::set_budget(std::atomic<std::uint64_t>* nodes, std::uint64_t limit) {
  nodes_ = nodes;
  node_limit_ = limit;
}

int grundy_dense(const Board& board) {
  thread_local DensePool pool;
  return pool.grundy(board);
}

}  // namespace itcx
