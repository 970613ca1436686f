#include "itcx/notation.hpp"

#include <cctype>

namespace itcx {
namespace {

constexpr int kMaxGap = 1000000;

void append_normalized(std::vector<PatternItem>& items, PatternItem item) {
  if (item.kind == PatternItem::Kind::Gap) {
    if (item.value == 0) return;
    if (!items.empty() && items.back().kind == PatternItem::Kind::Gap) {
      items.back().value += item.value;
      return;
    }
  }
  items.push_back(item);
}

}  // namespace

bool PositionPattern::concrete() const {
  for (const PatternItem& item : items) {
    if (item.kind == PatternItem::Kind::GapClass) return false;
  }
  return true;
}

PositionPattern parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty input");

  PositionPattern pattern;
  char open = text[pos];
  char close;
  if (open == '[') {
    pattern.shape = Shape::Linear;
    close = ']';
  } else if (open == '(') {
    pattern.shape = Shape::Circular;
    close = ')';
  } else {
    throw ParseError("expected '[' or '(' at start of position");
  }
  ++pos;

  skip_ws();
  while (pos < text.size() && text[pos] != close) {
    char c = text[pos];
    if (c == 'X') {
      pattern.items.push_back(PatternItem::piece());
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      long gap = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        gap = gap * 10 + (text[pos] - '0');
        if (gap > kMaxGap) throw ParseError("gap length too large");
        ++pos;
      }
      append_normalized(pattern.items, PatternItem::gap(static_cast<int>(gap)));
    } else if (c == '~') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("'~' must be followed by a single digit");
      if (pattern.shape == Shape::Circular)
        throw ParseError("residue classes are not allowed in circular positions");
      pattern.items.push_back(PatternItem::gap_class(text[pos] - '0'));
      ++pos;
    } else if (c == ']' || c == ')') {
      throw ParseError("mismatched closing bracket");
    } else {
      throw ParseError(std::string("illegal character '") + c + "' in position");
    }
    skip_ws();
  }
  if (pos == text.size()) throw ParseError("unbalanced brackets: missing closer");
  ++pos;  // consume closer
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after position");
  return pattern;
}

std::string render(const PositionPattern& pattern) {
  std::string out;
  out += pattern.shape == Shape::Linear ? '[' : '(';
  int pending_gap = 0;
  auto flush_gap = [&] {
    if (pending_gap > 0) out += std::to_string(pending_gap);
    pending_gap = 0;
  };
  for (const PatternItem& item : pattern.items) {
    switch (item.kind) {
      case PatternItem::Kind::Gap:
        pending_gap += item.value;
        break;
      case PatternItem::Kind::Piece:
        flush_gap();
        out += 'X';
        break;
      case PatternItem::Kind::GapClass:
        flush_gap();
        out += '~';
        out += static_cast<char>('0' + item.value);
        break;
    }
  }
  flush_gap();
  out += pattern.shape == Shape::Linear ? ']' : ')';
  return out;
}

std::string render(const Board& board) { return render(pattern_of(board)); }

PositionPattern pattern_of(const Board& board) {
  PositionPattern pattern;
  pattern.shape = board.shape();
  int gap = 0;
  for (int i = 0; i < board.size(); ++i) {
    if (board.occupied(i)) {
      if (gap > 0) pattern.items.push_back(PatternItem::gap(gap));
      gap = 0;
      pattern.items.push_back(PatternItem::piece());
    } else {
      ++gap;
    }
  }
  if (gap > 0) pattern.items.push_back(PatternItem::gap(gap));
  return pattern;
}

Board instantiate(const PositionPattern& pattern, int occurrence, int k) {
  if (occurrence < 0) throw std::invalid_argument("occurrence must be nonnegative");
  std::vector<Cell> cells;
  for (const PatternItem& item : pattern.items) {
    switch (item.kind) {
      case PatternItem::Kind::Piece:
        cells.push_back(Cell::Occupied);
        break;
      case PatternItem::Kind::Gap:
        cells.insert(cells.end(), static_cast<std::size_t>(item.value), Cell::Empty);
        break;
      case PatternItem::Kind::GapClass:
        cells.insert(cells.end(), static_cast<std::size_t>(item.value + 10 * occurrence), Cell::Empty);
        break;
    }
  }
  return Board(pattern.shape, std::move(cells), k);
}

Board parse_board(std::string_view text, int k) { return instantiate(parse(text), 0, k); }

}  // namespace itcx
