#include "itcx/reduce.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "itcx/dense.hpp"
#include "itcx/notation.hpp"

using namespace itcx;

namespace {

std::vector<std::string> component_strings(const PositionSum& sum) {
  std::vector<std::string> out;
  for (const Component& c : sum.components) out.push_back(render(c.board));
  return out;
}

Board random_legal_board(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> coin(0, 2);
  const int n = len_dist(rng);
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
  for (int i = 0; i < n; ++i)
    if (coin(rng) == 0 &&
        !(i >= 2 && cells[i - 1] == Cell::Occupied && cells[i - 2] == Cell::Occupied))
      cells[static_cast<std::size_t>(i)] = Cell::Occupied;
  return Board(Shape::Linear, std::move(cells), 3);
}

int dense_sum(const PositionSum& sum) {
  int acc = 0;
  for (const Component& c : sum.components) acc ^= grundy_dense(c.board);
  return acc;
}

}  // namespace

TEST_SUITE_BEGIN("reduce");

TEST_CASE("single positions") {
  CHECK(is_single(parse_board("[3X3X3]")));
  CHECK_FALSE(is_single(parse_board("[2XX3]")));
  CHECK_FALSE(is_single(parse_board("[X1X4]")));
  CHECK_THROWS_AS(is_single(Board::empty_circular(5)), std::invalid_argument);
  CHECK_THROWS_AS(is_single(Board::empty_linear(5, 4)), std::invalid_argument);
}

TEST_CASE("canonicalize worked examples") {
  CHECK(component_strings(canonicalize(parse_board("[X1X3]"))) == std::vector<std::string>{"[X3]"});
  CHECK(component_strings(canonicalize(parse_board("[3XX4]"))) ==
        std::vector<std::string>{"[2]", "[3]"});
  CHECK(component_strings(canonicalize(parse_board("[X4X2]"))) ==
        std::vector<std::string>{"[2X2]", "[X2]"});
  CHECK(component_strings(canonicalize(parse_board("[XX6]"))) == std::vector<std::string>{"[5]"});
  CHECK(component_strings(canonicalize(parse_board("[5]"))) == std::vector<std::string>{"[5]"});
  CHECK(canonicalize(parse_board("[1XX1]")).components.empty());
  CHECK(canonicalize(Board()).components.empty());
}

TEST_CASE("basic-only mode keeps X4X blocks") {
  const PositionSum full = canonicalize(parse_board("[X4X2]"), ReductionMode::Full);
  const PositionSum basic = canonicalize(parse_board("[X4X2]"), ReductionMode::BasicOnly);
  CHECK(full.components.size() == 2);
  CHECK(component_strings(basic) == std::vector<std::string>{"[X4X2]"});
}

TEST_CASE("split_components is the identity wrapper") {
  CHECK(component_strings(split_components(parse_board("[2X2]"))) ==
        std::vector<std::string>{"[2X2]"});
  CHECK(split_components(Board()).components.empty());
  CHECK(component_strings(split_components(parse_board("[XX1]"))) ==
        std::vector<std::string>{"[XX1]"});
  const PositionSum identity = split_components(parse_board("[2X2]"));
  for (int i = 0; i < 5; ++i) CHECK(identity.components[0].cell_map[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("idempotence: canonical components are fixpoints") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Board board = random_legal_board(rng, 20);
    for (const Component& c : canonicalize(board).components) {
      CHECK(component_strings(canonicalize(c.board)) == std::vector<std::string>{render(c.board)});
    }
  }
}

TEST_CASE("canonical shape: no XX/X1X, interior gaps in {2,3} or >= 5") {
  for (int n = 0; n <= 14; ++n) {
    for (unsigned s = 0; s < (1u << n); ++s) {
      std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) cells[static_cast<std::size_t>(i)] = Cell::Occupied;
      Board board;
      try {
        board = Board(Shape::Linear, std::move(cells), 3);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (const Component& comp : canonicalize(board).components) {
        CHECK(is_single(comp.board));
        CHECK(comp.board.size() > 0);
        int prev_piece = -1;
        for (int i = 0; i < comp.board.size(); ++i) {
          if (!comp.board.occupied(i)) continue;
          if (prev_piece >= 0) {
            const int gap = i - prev_piece - 1;
            CHECK((gap == 2 || gap == 3 || gap >= 5));
          }
          prev_piece = i;
        }
      }
    }
  }
}

TEST_CASE("each rewrite rule preserves the game value") {
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> len_dist(0, 7);
  std::uniform_int_distribution<int> coin(0, 2);
  auto segment = [&] {
    const int n = len_dist(rng);
    std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::Empty);
    for (int i = 0; i < n; ++i)
      if (coin(rng) == 0 &&
          !(i >= 2 && cells[i - 1] == Cell::Occupied && cells[i - 2] == Cell::Occupied))
        cells[static_cast<std::size_t>(i)] = Cell::Occupied;
    return cells;
  };
  for (RuleId rule : all_rules()) {
    int done = 0;
    while (done < 60) {
      const std::optional<RuleInstance> inst = instantiate_rule(rule, segment(), segment());
      if (!inst || inst->lhs.size() > 11) continue;
      ++done;
      int rhs = 0;
      for (const Board& part : inst->rhs) rhs ^= grundy_dense(part);
      CHECK_MESSAGE(grundy_dense(inst->lhs) == rhs, rule_name(rule), " on ", render(inst->lhs));
    }
  }
}

TEST_CASE("value confluence under randomized rule order") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 250; ++trial) {
    const Board board = random_legal_board(rng, 12);
    const int reference = grundy_dense(board);
    CHECK(dense_sum(canonicalize(board)) == reference);
    CHECK(dense_sum(canonicalize_shuffled(board, rng)) == reference);
  }
}

TEST_CASE("cell maps translate component moves soundly") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 250; ++trial) {
    const Board board = random_legal_board(rng, 12);
    const PositionSum sum = canonicalize(board);
    for (std::size_t ci = 0; ci < sum.components.size(); ++ci) {
      const Component& comp = sum.components[ci];
      int rest = 0;
      for (std::size_t cj = 0; cj < sum.components.size(); ++cj)
        if (cj != ci) rest ^= grundy_dense(sum.components[cj].board);
      for (Move m : legal_moves(comp.board)) {
        const int mapped = comp.cell_map[static_cast<std::size_t>(m.index)];
        if (mapped < 0) continue;  // synthesized cell, no original counterpart
        REQUIRE(mapped < board.size());
        CHECK(placement_legal(board, mapped));
        const int via_components = rest ^ grundy_dense(apply_move(comp.board, m));
        CHECK_MESSAGE(grundy_dense(apply_move(board, Move{mapped})) == via_components,
                      "board ", render(board), " component ", render(comp.board), " move ",
                      m.index);
      }
    }
  }
}

TEST_SUITE_END();
