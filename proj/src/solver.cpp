#include "itcx/solver.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "itcx/bits.hpp"
#include "itcx/notation.hpp"

namespace itcx {
namespace {

constexpr int kMaxComponentCells = 120;

// Components short enough for the single-word recursion; longer ones take
// the generic Board path. 62 leaves two bits of headroom for the shifted
// neighbor masks in the legality computation.
constexpr int kFastMaxCells = 62;

std::string mode_word(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::Full: return "on";
    case ReductionMode::BasicOnly: return "basic";
    case ReductionMode::Identity: return "off";
  }
  return "?";
}

ReductionMode mode_from_word(const std::string& word) {
  if (word == "on") return ReductionMode::Full;
  if (word == "basic") return ReductionMode::BasicOnly;
  if (word == "off") return ReductionMode::Identity;
  throw std::runtime_error("cache header: unknown reductions mode '" + word + "'");
}

}  // namespace

int mex(const std::vector<int>& values) {
  std::uint64_t small = 0;
  std::vector<int> big;
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("mex over negative value");
    if (v < 64)
      small |= std::uint64_t{1} << v;
    else
      big.push_back(v);
  }
  int m = std::countr_one(small);
  if (m < 64 && big.empty()) return m;
  while (std::find(big.begin(), big.end(), m) != big.end() ||
         (m < 64 && (small >> m) & 1))
    ++m;
  return m;
}

ComponentKey component_key(const Board& board) {
  if (board.shape() != Shape::Linear || board.k() != 3)
    throw std::invalid_argument("component keys cover linear k=3 boards only");
  if (board.size() > kMaxComponentCells)
    throw std::invalid_argument("component too long to key (limit 120 cells)");
  auto pack = [&](bool flipped) {
    ComponentKey key;
    const int n = board.size();
    for (int i = 0; i < n; ++i) {
      const int src = flipped ? n - 1 - i : i;
      if (!board.occupied(src)) continue;
      if (i < 64)
        key.lo |= std::uint64_t{1} << i;
      else
        key.hi |= std::uint64_t{1} << (i - 64);
    }
    key.hi |= static_cast<std::uint64_t>(n) << 56;
    return key;
  };
  ComponentKey fwd = pack(false);
  ComponentKey rev = pack(true);
  return std::min(fwd, rev);
}

Board component_key_board(ComponentKey key) {
  const int n = static_cast<int>(key.hi >> 56);
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
  for (int i = 0; i < n; ++i) {
    const bool set = i < 64 ? (key.lo >> i) & 1 : (key.hi >> (i - 64)) & 1;
    if (set) cells[static_cast<std::size_t>(i)] = Cell::Occupied;
  }
  return Board(Shape::Linear, std::move(cells), 3);
}

MemoCache::MemoCache(ReductionMode mode) : mode_(mode), shards_(new Shard[kShards]) {}

MemoCache::Shard& MemoCache::shard_for(ComponentKey key) const {
  return shards_[ComponentKeyHash{}(key) % kShards];
}

std::optional<int> MemoCache::lookup(ComponentKey key) const {
  Shard& shard = shard_for(key);
  std::lock_guard<std::mutex> lock(shard.mutex);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(ComponentKey key, int value) {
  if (value < 0 || value > 255) throw std::runtime_error("grundy value exceeds the 8-bit store");
  Shard& shard = shard_for(key);
  std::lock_guard<std::mutex> lock(shard.mutex);
  auto [it, inserted] = shard.map.emplace(key, static_cast<std::uint8_t>(value));
  if (!inserted && it->second != value)
    throw std::logic_error("conflicting grundy values for one cache key");
}

std::size_t MemoCache::size() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < kShards; ++i) {
    const Shard& shard = shards_[i];
    std::lock_guard<std::mutex> lock(shard.mutex);
    total += shard.map.size();
  }
  return total;
}

std::string MemoCache::header_line(ReductionMode mode) {
  return "ITCX-CACHE v1 k=3 reductions=" + mode_word(mode);
}

void MemoCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<ComponentKey, int>> entries;
  for (std::size_t i = 0; i < kShards; ++i) {
    const Shard& shard = shards_[i];
    std::lock_guard<std::mutex> lock(shard.mutex);
    for (const auto& [key, value] : shard.map) entries.emplace_back(key, value);
  }
  std::vector<std::pair<std::string, int>> lines;
  lines.reserve(entries.size());
  for (const auto& [key, value] : entries)
    lines.emplace_back(render(component_key_board(key)), value);
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path.string());
  out << header_line(mode_) << '\n';
  for (const auto& [text, value] : lines) out << text << '\t' << value << '\n';
}

MemoCache MemoCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file: " + path.string());
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string magic, version, kfield, rfield;
  hs >> magic >> version >> kfield >> rfield;
  if (magic != "ITCX-CACHE" || version != "v1")
    throw std::runtime_error("cache header: not an ITCX-CACHE v1 file");
  if (kfield != "k=3") throw std::runtime_error("cache header: unsupported k field '" + kfield + "'");
  if (rfield.rfind("reductions=", 0) != 0)
    throw std::runtime_error("cache header: missing reductions field");
  MemoCache cache(mode_from_word(rfield.substr(11)));

  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("cache line " + std::to_string(lineno) + ": missing tab separator");
    const Board board = parse_board(line.substr(0, tab));
    const int value = std::stoi(line.substr(tab + 1));
    if (cache.mode_ != ReductionMode::Identity) {
      const PositionSum canon = canonicalize(board, cache.mode_);
      if (canon.components.size() != 1 || !(canon.components[0].board == board))
        throw std::runtime_error("cache line " + std::to_string(lineno) +
                                 ": entry is not a canonical component");
    }
    cache.insert(component_key(board), value);
  }
  return cache;
}

Solver::Solver(MemoCache& cache, SolveOptions options, Budget* shared_budget)
    : cache_(cache), options_(options) {
  if (cache.mode() != options.reductions)
    throw std::invalid_argument("cache reduction mode does not match solver options");
  own_budget_.limit = options.node_budget;
  budget_ = shared_budget ? shared_budget : &own_budget_;
  dense_.set_budget(&budget_->used, budget_->limit);
}

PositionSum Solver::reduce(const Board& board) const {
  if (options_.reductions == ReductionMode::Identity) return split_components(board);
  return canonicalize(board, options_.reductions);
}

int Solver::grundy(const Board& board) {
  if (board.shape() == Shape::Linear && board.k() == 3) return grundy(reduce(board));
  return dense_.grundy(board);
}

int Solver::grundy(const PositionSum& sum) {
  int acc = 0;
  for (const Component& c : sum.components) acc ^= component_value(c.board);
  return acc;
}

namespace {

// Word-packed mirror of the rewrite engine in reduce.cpp, used on the hot
// recursion path. Cells are occupancy bits; the match policy is identical
// (leftmost L1 match, else leftmost L2 match, lowest rule on position ties),
// which the equivalence property tests pin down.
struct FastSeg {
  std::uint64_t occ;
  int len;
};

inline ComponentKey fast_key(std::uint64_t occ, int len) {
  const std::uint64_t rev = len == 0 ? 0 : bits::reverse64(occ) >> (64 - len);
  ComponentKey key;
  key.lo = std::min(occ, rev);
  key.hi = static_cast<std::uint64_t>(len) << 56;
  return key;
}

// Applies one rewrite step. Returns false at a fixpoint; otherwise seg is
// replaced by the first part and extra (len 0 when unused) carries a second.
inline bool fast_step(FastSeg& seg, FastSeg& extra, ReductionMode mode) {
  using bits::low_mask;
  const std::uint64_t occ = seg.occ;
  const int len = seg.len;
  extra.len = 0;
  if (len >= 2) {
    const std::uint64_t x1x = occ & ~(occ >> 1) & (occ >> 2) & low_mask(len - 2);
    const std::uint64_t xx = occ & (occ >> 1) & low_mask(len - 1);
    const std::uint64_t l1 = x1x | xx;
    if (l1) {
      const int i = std::countr_zero(l1);
      if ((x1x >> i) & 1) {
        if (i == 0) {
          seg = {occ >> 2, len - 2};
        } else if (i == len - 3) {
          seg = {occ & low_mask(len - 2), len - 2};
        } else {
          extra = {occ >> (i + 2), len - i - 2};
          seg = {occ & low_mask(i + 1), i + 1};
        }
      } else if (len == 2) {
        seg = {0, 0};  // bare [XX]: moveless, identically zero
      } else if (i == 0) {
        seg = {occ >> 3, len - 3};
      } else if (i == len - 2) {
        seg = {occ & low_mask(len - 3), len - 3};
      } else {
        extra = {occ >> (i + 3), len - i - 3};
        seg = {occ & low_mask(i - 1), i - 1};
      }
      return true;
    }
  }
  if (mode != ReductionMode::Full || len < 4) return false;
  const std::uint64_t x2x = occ & ~(occ >> 1) & ~(occ >> 2) & (occ >> 3) & low_mask(len - 3);
  const std::uint64_t x4x = len < 6 ? 0
                                    : occ & ~(occ >> 1) & ~(occ >> 2) & ~(occ >> 3) &
                                          ~(occ >> 4) & (occ >> 5) & low_mask(len - 5);
  const bool left = x2x & 1;
  const bool right = (x2x >> (len - 4)) & 1;
  const int split = x4x ? std::countr_zero(x4x) : len;
  if (left && split > 0) {
    seg = {occ >> 1, len - 1};
  } else if (right && split > len - 4) {
    seg = {occ & low_mask(len - 1), len - 1};
  } else if (x4x) {
    extra = {(occ >> (split + 5)) << 2, len - split - 3};
    seg = {occ & low_mask(split + 1), split + 3};
  } else {
    return false;
  }
  return true;
}

// Legal placements under k=3: occupying i is illegal iff two of its four
// neighbors complete a run through i.
inline std::uint64_t fast_legal_mask(std::uint64_t occ, int len) {
  const std::uint64_t a = occ << 1, b = occ << 2, c = occ >> 1, d = occ >> 2;
  const std::uint64_t illegal = (a & b) | (a & c) | (c & d);
  return ~occ & ~illegal & bits::low_mask(len);
}

}  // namespace

int Solver::fast_sum_value(std::uint64_t occ, int len) {
  int value = 0;
  FastSeg stack[64];
  int top = 0;
  stack[top++] = {occ, len};
  while (top > 0) {
    FastSeg seg = stack[--top];
    if (options_.reductions != ReductionMode::Identity) {
      FastSeg extra;
      while (fast_step(seg, extra, options_.reductions)) {
        if (extra.len > 0) stack[top++] = extra;
      }
    }
    if (seg.len > 0) value ^= fast_component_value(seg.occ, seg.len);
  }
  return value;
}

int Solver::fast_component_value(std::uint64_t occ, int len) {
  const ComponentKey key = fast_key(occ, len);
  if (auto hit = cache_.lookup(key)) return *hit;
  if (++budget_->used > budget_->limit)
    throw BudgetExceeded("node budget exceeded in the component tier");
  std::uint64_t seen = 0;
  std::uint64_t legal = fast_legal_mask(occ, len);
  while (legal) {
    const int i = std::countr_zero(legal);
    legal &= legal - 1;
    const int value = fast_sum_value(occ | (std::uint64_t{1} << i), len);
    if (value >= 64) throw std::runtime_error("grundy value out of expected range");
    seen |= std::uint64_t{1} << value;
  }
  const int value = std::countr_one(seen);
  cache_.insert(key, value);
  return value;
}

int Solver::component_value(const Board& component) {
  if (component.size() <= kFastMaxCells && component.shape() == Shape::Linear &&
      component.k() == 3) {
    std::uint64_t occ = 0;
    for (int i = 0; i < component.size(); ++i)
      if (component.occupied(i)) occ |= std::uint64_t{1} << i;
    return fast_component_value(occ, component.size());
  }
  const ComponentKey key = component_key(component);
  if (auto hit = cache_.lookup(key)) return *hit;
  if (++budget_->used > budget_->limit)
    throw BudgetExceeded("node budget exceeded in the component tier");
  std::uint64_t seen = 0;
  for (const Move move : legal_moves(component)) {
    const PositionSum sum = reduce(apply_move(component, move));
    int value = 0;
    for (const Component& c : sum.components) value ^= component_value(c.board);
    if (value >= 64) throw std::runtime_error("grundy value out of expected range");
    seen |= std::uint64_t{1} << value;
  }
  const int value = std::countr_one(seen);
  cache_.insert(key, value);
  return value;
}

std::vector<Move> Solver::best_moves(const Board& board) {
  std::vector<Move> winners;
  for (const Move move : legal_moves(board)) {
    if (grundy(apply_move(board, move)) == 0) winners.push_back(move);
  }
  return winners;
}

}  // namespace itcx
