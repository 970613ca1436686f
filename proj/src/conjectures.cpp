#include "itcx/conjectures.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "itcx/notation.hpp"
#include "itcx/regular.hpp"

namespace itcx {
namespace {

constexpr Cell O = Cell::Occupied;
constexpr Cell E = Cell::Empty;

bool ConjectureReportHardOk(const std::vector<Violation>& violations) {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.hard; });
}

Board single_piece_board(int a, int b) {
  std::vector<Cell> cells(static_cast<std::size_t>(a + 1 + b), E);
  cells[static_cast<std::size_t>(a)] = O;
  return Board(Shape::Linear, std::move(cells), 3);
}

// Segment sampler: each cell occupied with probability ~1/3 unless that
// would already close a 3-run inside the segment.
std::vector<Cell> random_segment(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> coin(0, 2);
  const int len = len_dist(rng);
  std::vector<Cell> cells(static_cast<std::size_t>(len), E);
  for (int i = 0; i < len; ++i) {
    if (coin(rng) != 0) continue;
    if (i >= 2 && cells[static_cast<std::size_t>(i - 1)] == O &&
        cells[static_cast<std::size_t>(i - 2)] == O)
      continue;
    cells[static_cast<std::size_t>(i)] = O;
  }
  return cells;
}

std::optional<Board> try_board(const std::vector<Cell>& cells) {
  try {
    return Board(Shape::Linear, cells, 3);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<Cell> cat(std::initializer_list<std::vector<Cell>> parts) {
  std::vector<Cell> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Cell> gap(int n) { return std::vector<Cell>(static_cast<std::size_t>(n), E); }

}  // namespace

bool ConjectureReport::hard_ok() const { return ConjectureReportHardOk(violations); }

ConjectureReport check_cover(int max_length, Solver& solver) {
  ConjectureReport report;
  report.id = "cover";
  report.range = "boards with <= 1 piece, length <= " + std::to_string(max_length);

  const std::set<std::string> expected = {"[1X1]", "[1X4]", "[4X1]", "[4X4]"};
  std::set<std::string> found;
  for (int n = 0; n <= max_length; ++n) {
    const Board board = Board::empty_linear(n);
    if (solver.grundy(board) <= 1 && !classify(board).regular())
      found.insert(render(board));
  }
  for (int len = 1; len <= max_length; ++len) {
    for (int a = 0; a < len; ++a) {
      const Board board = single_piece_board(a, len - 1 - a);
      const int g = solver.grundy(board);
      if (g <= 1 && !classify(board).regular()) {
        found.insert(render(board));
        if (g != 1)
          report.violations.push_back({render(board), "value 1 for an isolated exception",
                                       "value " + std::to_string(g), false});
      }
    }
  }
  for (const std::string& pos : found) {
    if (!expected.count(pos))
      report.violations.push_back(
          {pos, "regular or value > 1", "uncovered position of value <= 1", false});
  }
  for (const std::string& pos : expected) {
    if (!found.count(pos))
      report.violations.push_back({pos, "an uncovered value-1 exception", "covered or missing", false});
  }
  report.observations.push_back("uncovered positions of value <= 1: " +
                                std::to_string(found.size()));
  return report;
}

ConjectureReport check_preperiod(int max_a, int max_b, Solver& solver) {
  ConjectureReport report;
  report.id = "preperiod";
  report.range = "a <= " + std::to_string(max_a) + ", b <= " + std::to_string(max_b);

  report.grid.assign(static_cast<std::size_t>(max_a + 1),
                     std::vector<int>(static_cast<std::size_t>(max_b + 1), 0));
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= max_b; ++b)
      report.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          solver.grundy(single_piece_board(a, b));

  auto shift_holds = [&](int a, int b) {
    return report.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 5)] ==
           (report.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ^ 1);
  };

  for (int a = 0; a <= max_a; ++a) {
    const int preperiod = (a == 1 || a == 4) ? 5 : 0;
    for (int b = preperiod + 1; b + 5 <= max_b; ++b) {
      if (!shift_holds(a, b)) {
        const int lhs = report.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 5)];
        const int rhs = report.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ^ 1;
        report.violations.push_back({render(single_piece_board(a, b + 5)),
                                     "value " + std::to_string(rhs) + " (xor-shift of [" +
                                         std::to_string(a) + "X" + std::to_string(b) + "])",
                                     "value " + std::to_string(lhs), false});
      }
    }
    int observed = -1;  // least preperiod consistent with the tested range
    for (int t = 0; t + 5 <= max_b; ++t) {
      bool ok = true;
      for (int b = t + 1; b + 5 <= max_b; ++b) ok = ok && shift_holds(a, b);
      if (ok) {
        observed = t;
        break;
      }
    }
    report.observations.push_back("a=" + std::to_string(a) + ": observed preperiod " +
                                  (observed < 0 ? std::string("> range") : std::to_string(observed)) +
                                  ", stated " + std::to_string(preperiod));
  }

  int residue_reading_violations = 0;
  for (int a = 0; a <= max_a; ++a) {
    const int preperiod = (a % 10 == 1 || a % 10 == 4) ? 5 : 0;
    for (int b = preperiod + 1; b + 5 <= max_b; ++b)
      if (!shift_holds(a, b)) ++residue_reading_violations;
  }
  report.observations.push_back("residue-class reading (preperiod 5 for a = 1,4 mod 10): " +
                                std::to_string(residue_reading_violations) + " violations");
  return report;
}

ConjectureReport check_kodd(int m, int max_length, Solver& solver) {
  if (m < 1) throw std::invalid_argument("check_kodd requires m >= 1");
  ConjectureReport report;
  report.id = "kodd";
  const int k = 2 * m + 1;
  report.range = "k = " + std::to_string(k) + ", lengths <= " + std::to_string(max_length);
  const bool hard = m == 1;  // settled for k = 3; conjectural beyond

  std::vector<int> values(static_cast<std::size_t>(max_length + 1));
  for (int a = 0; a <= max_length; ++a)
    values[static_cast<std::size_t>(a)] = solver.grundy(Board::empty_linear(a, k));
  report.grid.push_back(values);

  auto name = [&](int a) { return "[" + std::to_string(a) + "] (k=" + std::to_string(k) + ")"; };
  for (int a = 0; a < k && a <= max_length; ++a) {
    if (values[static_cast<std::size_t>(a)] != a % 2)
      report.violations.push_back({name(a), "parity value " + std::to_string(a % 2),
                                   "value " + std::to_string(values[static_cast<std::size_t>(a)]),
                                   true});
  }
  for (int a = 0; a <= max_length; ++a) {
    if (values[static_cast<std::size_t>(a)] > 1)
      report.violations.push_back({name(a), "value <= 1",
                                   "value " + std::to_string(values[static_cast<std::size_t>(a)]),
                                   hard});
  }
  const int flip = m % 2;
  for (int a = 0; a + 2 + 3 * m <= max_length; ++a) {
    const int lhs = values[static_cast<std::size_t>(a + 2 + 3 * m)];
    const int rhs = values[static_cast<std::size_t>(a)] ^ flip;
    if (lhs != rhs)
      report.violations.push_back({name(a + 2 + 3 * m),
                                   "value " + std::to_string(rhs) + " (offset recurrence from " +
                                       name(a) + ")",
                                   "value " + std::to_string(lhs), hard});
  }
  for (int a = 0; a <= 2 + 5 * m && a <= max_length; ++a) {
    const int other = 2 + 5 * m - a;
    if (other < 0 || other > max_length) continue;
    const int lhs = values[static_cast<std::size_t>(other)];
    const int rhs = values[static_cast<std::size_t>(a)] ^ flip;
    if (lhs != rhs)
      report.violations.push_back({name(other),
                                   "value " + std::to_string(rhs) + " (reflection recurrence from " +
                                       name(a) + ")",
                                   "value " + std::to_string(lhs), hard});
  }
  return report;
}

ConjectureReport check_simplifications(int max_u_len, int max_i, int samples, std::uint64_t seed,
                                       Solver& solver) {
  ConjectureReport report;
  report.id = "simplify";
  report.range = "segments <= " + std::to_string(max_u_len) + " cells, i <= " +
                 std::to_string(max_i) + ", " + std::to_string(samples) + " samples";
  report.seeded = true;
  report.seed = seed;
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::uniform_int_distribution<int> i_dist(0, max_i);

  auto value_of = [&](const std::vector<Cell>& cells) -> std::optional<int> {
    const std::optional<Board> board = try_board(cells);
    if (!board) return std::nullopt;
    return solver.grundy(*board);
  };
  auto check = [&](const std::vector<Cell>& lhs_cells, int rhs, std::string rhs_desc, bool hard) {
    const std::optional<Board> lhs = try_board(lhs_cells);
    if (!lhs) {
      ++report.samples_skipped;
      return;
    }
    ++report.samples_run;
    const int got = solver.grundy(*lhs);
    if (got != rhs)
      report.violations.push_back({render(*lhs), "value " + std::to_string(rhs) + " (" + rhs_desc + ")",
                                   "value " + std::to_string(got), hard});
  };

  for (int s = 0; s < samples; ++s) {
    const std::vector<Cell> u = random_segment(rng, max_u_len);
    const std::vector<Cell> v = random_segment(rng, max_u_len);
    const int i = i_dist(rng);

    // central split around an X (5i+4) X block
    const std::optional<int> left = value_of(cat({u, {O}, gap(2)}));
    const std::optional<int> right = value_of(cat({gap(2), {O}, v}));
    if (left && right) {
      check(cat({u, {O}, gap(5 * i + 4), {O}, v}), *left ^ *right ^ (i % 2),
            "[uX2] xor [2Xv] xor i&1, i=" + std::to_string(i), i == 0);
      if (i != 0)
        check(cat({u, {O}, gap(4), {O}, v}), *left ^ *right, "[uX2] xor [2Xv], i=0", true);
    }

    const std::optional<int> five_u = value_of(cat({gap(5), u}));
    if (five_u) check(cat({gap(10), u}), *five_u ^ 1, "[5u] xor 1", false);

    const std::optional<int> two_x_u = value_of(cat({gap(2), {O}, u}));
    if (two_x_u) {
      check(cat({gap(8), {O}, u}), *two_x_u, "[2Xu]", false);
      check(cat({{O}, gap(7), {O}, u}), *two_x_u ^ 1, "[2Xu] xor 1", false);
    }
  }
  return report;
}

ConjectureReport circular_table(int max_length, Solver& solver) {
  ConjectureReport report;
  report.id = "circular";
  report.range = "circular lengths 1.." + std::to_string(max_length);
  std::vector<int> values;
  for (int l = 1; l <= max_length; ++l) {
    const int g = solver.grundy(Board::empty_circular(l));
    values.push_back(g);
    const int r = l % 10;
    const std::string pos = "(" + std::to_string(l) + ")";
    if (r == 5) {
      if (g != 1) report.violations.push_back({pos, "value 1", "value " + std::to_string(g), true});
    } else if (r != 1 && r != 9) {
      if (g != 0) report.violations.push_back({pos, "value 0", "value " + std::to_string(g), true});
    } else {
      report.observations.push_back("G(" + pos + ") = " + std::to_string(g) +
                                    " (class " + std::to_string(r) + " mod 10, unjudged)");
    }
  }
  report.grid.push_back(values);
  return report;
}

void print_report(std::ostream& out, const ConjectureReport& report) {
  out << "conjecture " << report.id << "  [" << report.range << "]\n";
  if (report.seeded) out << "  seed " << report.seed << "\n";
  if (report.samples_run || report.samples_skipped)
    out << "  samples run " << report.samples_run << ", skipped " << report.samples_skipped << "\n";
  for (const auto& row : report.grid) {
    out << " ";
    for (int v : row) out << ' ' << v;
    out << '\n';
  }
  for (const std::string& obs : report.observations) out << "  note: " << obs << '\n';
  const bool hard_ok = report.hard_ok();
  out << "  violations " << report.violations.size() << " (" << (hard_ok ? "no" : "SOME")
      << " hard)\n";
  for (const Violation& v : report.violations) {
    out << "violation\tconjecture=" << report.id << "\tposition=" << v.position << "\texpected="
        << v.expected << "\tcomputed=" << v.computed << "\thard=" << (v.hard ? "yes" : "no")
        << '\n';
  }
  out << (hard_ok ? "  settled parts: ok" : "  settled parts: FAILED") << '\n';
}

}  // namespace itcx
