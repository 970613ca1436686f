#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "itcx/dense.hpp"
#include "itcx/reduce.hpp"

namespace itcx {

// Least nonnegative integer absent from the set.
int mex(const std::vector<int>& values);

// Packs a linear component of up to 120 cells: occupancy bits split across
// two words, length in the top byte of the high word. Keys are built from
// the reflection-minimal orientation so mirrored spellings collide.
struct ComponentKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(ComponentKey a, ComponentKey b) { return a.lo == b.lo && a.hi == b.hi; }
  friend bool operator<(ComponentKey a, ComponentKey b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }
};

ComponentKey component_key(const Board& board);
Board component_key_board(ComponentKey key);  // reflection-minimal spelling

struct ComponentKeyHash {
  std::size_t operator()(ComponentKey k) const {
    std::uint64_t x = k.lo * 0x9E3779B97F4A7C15ull ^ (k.hi + 0xD1B54A32D192ED03ull);
    x ^= x >> 32;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

// Persistent component-value memo shared across solver roots and threads.
// Concurrent inserts of the same key must carry the same value; readers may
// miss an in-flight insert and recompute. File format, line oriented:
//
//   ITCX-CACHE v1 k=3 reductions=on
//   <canonical-component>  <sg value>     (tab separated, sorted)
class MemoCache {
 public:
  explicit MemoCache(ReductionMode mode = ReductionMode::Full);

  std::optional<int> lookup(ComponentKey key) const;
  void insert(ComponentKey key, int value);

  ReductionMode mode() const { return mode_; }
  std::size_t size() const;

  void save(const std::filesystem::path& path) const;
  static MemoCache load(const std::filesystem::path& path);

  static std::string header_line(ReductionMode mode);

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<ComponentKey, std::uint8_t, ComponentKeyHash> map;
  };
  Shard& shard_for(ComponentKey key) const;

  ReductionMode mode_;
  std::unique_ptr<Shard[]> shards_;  // fixed kShards entries; pointer keeps the cache movable
};

struct SolveOptions {
  ReductionMode reductions = ReductionMode::Full;
  std::uint64_t node_budget = 1'000'000'000;
};

// Node accounting shared between solver instances, e.g. per-thread solvers
// over one table. Each newly computed state costs one node.
struct Budget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = 1'000'000'000;
};

// Two-tier evaluator. Linear k=3 boards go through rewrite canonicalization
// and a memoized component recursion; everything else (other k, circular
// boards, reductions disabled beyond linear k=3) is answered by the dense
// tier up to its length cap.
class Solver {
 public:
  // A shared budget overrides the per-instance one from options.
  Solver(MemoCache& cache, SolveOptions options = {}, Budget* shared_budget = nullptr);

  int grundy(const Board& board);
  int grundy(const PositionSum& sum);
  // All legal moves whose successor has value 0; the set is empty exactly
  // when the board itself evaluates to 0.
  std::vector<Move> best_moves(const Board& board);

  std::uint64_t nodes() const { return budget_->used.load(); }
  MemoCache& cache() { return cache_; }
  const SolveOptions& options() const { return options_; }

 private:
  PositionSum reduce(const Board& board) const;
  int component_value(const Board& component);
  // Single-word recursion for components of at most 62 cells; same cache
  // keys and match policy as the generic path.
  int fast_sum_value(std::uint64_t occ, int len);
  int fast_component_value(std::uint64_t occ, int len);

  MemoCache& cache_;
  SolveOptions options_;
  Budget own_budget_;
  Budget* budget_;
  DensePool dense_;
};

}  // namespace itcx
