#include "itcx/reduce.hpp"

#include <algorithm>
#include <cassert>

#include "itcx/notation.hpp"

namespace itcx {
namespace {

constexpr Cell O = Cell::Occupied;
constexpr Cell E = Cell::Empty;

struct Seg {
  std::vector<Cell> cells;
  std::vector<int> map;
};

Seg seg_of(const Board& board) {
  Seg seg;
  seg.cells = board.cells();
  seg.map.resize(seg.cells.size());
  for (std::size_t i = 0; i < seg.map.size(); ++i) seg.map[i] = static_cast<int>(i);
  return seg;
}

Seg slice(const Seg& seg, int first, int last_exclusive) {
  Seg out;
  out.cells.assign(seg.cells.begin() + first, seg.cells.begin() + last_exclusive);
  out.map.assign(seg.map.begin() + first, seg.map.begin() + last_exclusive);
  return out;
}

void append_synthesized_gap(Seg& seg, int count) {
  seg.cells.insert(seg.cells.end(), static_cast<std::size_t>(count), E);
  seg.map.insert(seg.map.end(), static_cast<std::size_t>(count), -1);
}

// DropXX covers the moveless whole-board [XX], which no bracketed rule
// pattern reaches; it is the zero game and vanishes from the sum.
enum class MatchKind : std::uint8_t {
  L1_1, L1_2, L1_3, L1_4, L1_5, L1_6, DropXX, L2_1, L2_2, L2_3,
};

struct Match {
  MatchKind kind;
  int pos;
};

bool is_l1(MatchKind k) { return k <= MatchKind::DropXX; }

std::vector<Match> find_matches(const std::vector<Cell>& c, ReductionMode mode) {
  std::vector<Match> out;
  if (mode == ReductionMode::Identity) return out;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i + 2 < n; ++i) {
    if (c[i] == O && c[i + 1] == E && c[i + 2] == O) {
      if (i == 0)
        out.push_back({MatchKind::L1_1, i});
      else if (i == n - 3)
        out.push_back({MatchKind::L1_2, i});
      else
        out.push_back({MatchKind::L1_3, i});
    }
  }
  if (n == 2 && c[0] == O && c[1] == O) out.push_back({MatchKind::DropXX, 0});
  for (int i = 0; i + 1 < n; ++i) {
    if (c[i] != O || c[i + 1] != O) continue;
    // A legal board forces empty cells on both flanks of an interior XX.
    if (i == 0 && i + 2 < n) {
      out.push_back({MatchKind::L1_4, i});
    } else if (i > 0 && i + 2 == n) {
      out.push_back({MatchKind::L1_5, i});
    } else if (i > 0 && i + 2 < n) {
      assert(c[i - 1] == E && c[i + 2] == E);
      out.push_back({MatchKind::L1_6, i});
    }
  }
  if (mode != ReductionMode::Full) return out;
  auto x_gap_x = [&](int i, int gap) {
    if (i + gap + 1 >= n) return false;
    if (c[i] != O || c[i + gap + 1] != O) return false;
    for (int j = 1; j <= gap; ++j)
      if (c[i + j] != E) return false;
    return true;
  };
  if (x_gap_x(0, 2)) out.push_back({MatchKind::L2_1, 0});
  if (n >= 4 && x_gap_x(n - 4, 2)) out.push_back({MatchKind::L2_2, n - 4});
  for (int i = 0; i + 5 < n; ++i) {
    if (x_gap_x(i, 4)) out.push_back({MatchKind::L2_3, i});
  }
  return out;
}

// Leftmost L1 match first, then leftmost L2 match; rule order breaks ties.
std::optional<Match> pick_deterministic(const std::vector<Match>& matches) {
  std::optional<Match> best;
  for (const Match& m : matches) {
    if (!best || (is_l1(m.kind) && !is_l1(best->kind)) ||
        (is_l1(m.kind) == is_l1(best->kind) &&
         (m.pos < best->pos || (m.pos == best->pos && m.kind < best->kind)))) {
      best = m;
    }
  }
  return best;
}

std::vector<Seg> apply_match(const Seg& seg, Match m) {
  const int n = static_cast<int>(seg.cells.size());
  switch (m.kind) {
    case MatchKind::L1_1:
      return {slice(seg, 2, n)};
    case MatchKind::L1_2:
      return {slice(seg, 0, n - 2)};
    case MatchKind::L1_3:
      return {slice(seg, 0, m.pos + 1), slice(seg, m.pos + 2, n)};
    case MatchKind::L1_4:
      return {slice(seg, 3, n)};
    case MatchKind::L1_5:
      return {slice(seg, 0, n - 3)};
    case MatchKind::L1_6:
      return {slice(seg, 0, m.pos - 1), slice(seg, m.pos + 3, n)};
    case MatchKind::DropXX:
      return {};
    case MatchKind::L2_1:
      return {slice(seg, 1, n)};
    case MatchKind::L2_2:
      return {slice(seg, 0, n - 1)};
    case MatchKind::L2_3: {
      Seg left = slice(seg, 0, m.pos + 1);
      append_synthesized_gap(left, 2);
      Seg right;
      append_synthesized_gap(right, 2);
      Seg tail = slice(seg, m.pos + 5, n);
      right.cells.insert(right.cells.end(), tail.cells.begin(), tail.cells.end());
      right.map.insert(right.map.end(), tail.map.begin(), tail.map.end());
      return {left, right};
    }
  }
  return {};
}

// Orientation order: occupied cells sort before empty ones, so a component
// is flipped until its pieces sit as far left as possible.
bool reversed_is_smaller(const std::vector<Cell>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Cell fwd = c[i];
    Cell rev = c[n - 1 - i];
    if (fwd == rev) continue;
    return rev == O;
  }
  return false;
}

void require_reducible(const Board& board) {
  if (board.shape() != Shape::Linear) throw std::invalid_argument("reduction requires a linear board");
  if (board.k() != 3) throw std::invalid_argument("reduction requires k = 3");
}

template <typename PickMatch>
PositionSum reduce_with(const Board& board, ReductionMode mode, PickMatch pick) {
  require_reducible(board);
  PositionSum sum;
  std::vector<Seg> work{seg_of(board)};
  while (!work.empty()) {
    Seg seg = std::move(work.back());
    work.pop_back();
    if (seg.cells.empty()) continue;
    std::vector<Match> matches = find_matches(seg.cells, mode);
    if (matches.empty()) {
      if (reversed_is_smaller(seg.cells)) {
        std::reverse(seg.cells.begin(), seg.cells.end());
        std::reverse(seg.map.begin(), seg.map.end());
      }
      sum.components.push_back(Component{Board(Shape::Linear, seg.cells, 3), std::move(seg.map)});
      continue;
    }
    for (Seg& part : apply_match(seg, pick(matches))) work.push_back(std::move(part));
  }
  std::sort(sum.components.begin(), sum.components.end(),
            [](const Component& a, const Component& b) { return render(a.board) < render(b.board); });
  return sum;
}

}  // namespace

std::vector<Board> PositionSum::boards() const {
  std::vector<Board> out;
  out.reserve(components.size());
  for (const Component& c : components) out.push_back(c.board);
  return out;
}

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::L1_1: return "L1.1";
    case RuleId::L1_2: return "L1.2";
    case RuleId::L1_3: return "L1.3";
    case RuleId::L1_4: return "L1.4";
    case RuleId::L1_5: return "L1.5";
    case RuleId::L1_6: return "L1.6";
    case RuleId::L2_1: return "L2.1";
    case RuleId::L2_2: return "L2.2";
    case RuleId::L2_3: return "L2.3";
  }
  return "?";
}

bool is_single(const Board& board) {
  require_reducible(board);
  const auto& c = board.cells();
  const int n = board.size();
  for (int i = 0; i + 1 < n; ++i) {
    if (c[i] == O && c[i + 1] == O) return false;
  }
  for (int i = 0; i + 2 < n; ++i) {
    if (c[i] == O && c[i + 1] == E && c[i + 2] == O) return false;
  }
  return true;
}

PositionSum canonicalize(const Board& board, ReductionMode mode) {
  return reduce_with(board, mode, [](const std::vector<Match>& matches) {
    return *pick_deterministic(matches);
  });
}

PositionSum split_components(const Board& board) {
  PositionSum sum;
  if (board.size() > 0) sum.components.push_back(Component{board, seg_of(board).map});
  return sum;
}

PositionSum canonicalize_shuffled(const Board& board, std::mt19937& rng, ReductionMode mode) {
  return reduce_with(board, mode, [&rng](const std::vector<Match>& matches) {
    std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
    return matches[pick(rng)];
  });
}

std::optional<RuleInstance> instantiate_rule(RuleId id, const std::vector<Cell>& w,
                                             const std::vector<Cell>& v) {
  auto cat = [](std::initializer_list<std::vector<Cell>> parts) {
    std::vector<Cell> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  const std::vector<Cell> x{O};
  const std::vector<Cell> e{E};
  std::vector<Cell> lhs;
  std::vector<std::vector<Cell>> rhs;
  switch (id) {
    case RuleId::L1_1: lhs = cat({x, e, x, w}); rhs = {cat({x, w})}; break;
    case RuleId::L1_2: lhs = cat({w, x, e, x}); rhs = {cat({w, x})}; break;
    case RuleId::L1_3: lhs = cat({w, x, e, x, v}); rhs = {cat({w, x}), cat({x, v})}; break;
    case RuleId::L1_4: lhs = cat({x, x, e, w}); rhs = {w}; break;
    case RuleId::L1_5: lhs = cat({w, e, x, x}); rhs = {w}; break;
    case RuleId::L1_6: lhs = cat({w, e, x, x, e, v}); rhs = {w, v}; break;
    case RuleId::L2_1: lhs = cat({x, e, e, x, w}); rhs = {cat({e, e, x, w})}; break;
    case RuleId::L2_2: lhs = cat({w, x, e, e, x}); rhs = {cat({w, x, e, e})}; break;
    case RuleId::L2_3:
      lhs = cat({w, x, e, e, e, e, x, v});
      rhs = {cat({w, x, e, e}), cat({e, e, x, v})};
      break;
  }
  try {
    RuleInstance inst{Board(Shape::Linear, lhs, 3), {}};
    for (auto& cells : rhs) inst.rhs.emplace_back(Shape::Linear, cells, 3);
    return inst;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace itcx
