#include "itcx/regular.hpp"

#include "itcx/residue.hpp"

namespace itcx {
namespace {

void require_classifiable(const Board& board) {
  if (board.shape() != Shape::Linear || board.k() != 3)
    throw std::invalid_argument("classification covers linear k=3 boards only");
}

// Piece positions and the gaps around them, valid for boards with <= 2 pieces.
struct Layout {
  int pieces = 0;
  int left_gap = 0;    // cells before the first piece
  int right_gap = 0;   // cells after the last piece
  int inner_gap = 0;   // cells between the two pieces (2-piece boards)
  bool contiguous_ok = true;
};

Layout layout_of(const Board& board) {
  Layout l;
  int first = -1, last = -1;
  for (int i = 0; i < board.size(); ++i) {
    if (!board.occupied(i)) continue;
    ++l.pieces;
    if (first < 0) first = i;
    last = i;
  }
  if (l.pieces >= 1) {
    l.left_gap = first;
    l.right_gap = board.size() - 1 - last;
    if (l.pieces == 2) l.inner_gap = last - first - 1;
  }
  return l;
}

}  // namespace

int RegularClass::sign() const {
  switch (family) {
    case Family::R1_Empty:
    case Family::R1_Single:
    case Family::R1_Star:
      return 1;
    case Family::Rm1_Empty:
    case Family::Rm1_Single:
    case Family::Rm1_Star:
      return -1;
    case Family::NotRegular:
      return 0;
  }
  return 0;
}

std::optional<int> RegularClass::predicted_sg() const {
  const int s = sign();
  if (s == 0) return std::nullopt;
  return (1 - s) / 2;
}

std::string RegularClass::name() const {
  auto star_name = [&]() -> std::string {
    if (!star) return "";
    switch (*star) {
      case StarVariant::X6: return "(X6)";
      case StarVariant::SixX: return "(6X)";
      case StarVariant::X4X: return "(X4X)";
      case StarVariant::X1: return "(X1)";
      case StarVariant::OneX: return "(1X)";
      case StarVariant::X9X: return "(X9X)";
    }
    return "";
  };
  switch (family) {
    case Family::R1_Empty: return "R1_Empty";
    case Family::R1_Single: return "R1_Single";
    case Family::R1_Star: return "R1_Star" + star_name();
    case Family::Rm1_Empty: return "Rm1_Empty";
    case Family::Rm1_Single: return "Rm1_Single";
    case Family::Rm1_Star: return "Rm1_Star" + star_name();
    case Family::NotRegular: return "NotRegular";
  }
  return "NotRegular";
}

std::vector<RegularClass> matching_families(const Board& board) {
  require_classifiable(board);
  std::vector<RegularClass> out;
  const Layout l = layout_of(board);
  if (l.pieces == 0) {
    const int s = chi1(Residue(board.size()));
    out.push_back({s > 0 ? Family::R1_Empty : Family::Rm1_Empty, std::nullopt});
    return out;
  }
  if (l.pieces == 1) {
    const int product = chi2(Residue(l.left_gap)) * chi2(Residue(l.right_gap));
    if (product == 1) out.push_back({Family::R1_Single, std::nullopt});
    if (product == -1) out.push_back({Family::Rm1_Single, std::nullopt});
    if (l.left_gap == 0 && l.right_gap % 10 == 6) out.push_back({Family::R1_Star, StarVariant::X6});
    if (l.right_gap == 0 && l.left_gap % 10 == 6) out.push_back({Family::R1_Star, StarVariant::SixX});
    if (l.left_gap == 0 && l.right_gap % 10 == 1) out.push_back({Family::Rm1_Star, StarVariant::X1});
    if (l.right_gap == 0 && l.left_gap % 10 == 1) out.push_back({Family::Rm1_Star, StarVariant::OneX});
    return out;
  }
  if (l.pieces == 2 && l.left_gap == 0 && l.right_gap == 0) {
    if (l.inner_gap % 10 == 4) out.push_back({Family::R1_Star, StarVariant::X4X});
    if (l.inner_gap % 10 == 9) out.push_back({Family::Rm1_Star, StarVariant::X9X});
  }
  return out;
}

RegularClass classify(const Board& board) {
  const std::vector<RegularClass> matches = matching_families(board);
  if (matches.empty()) return RegularClass{Family::NotRegular, std::nullopt};
  return matches.front();
}

std::optional<int> ParityResult::predicted_sg() const {
  if (sign == 0) return std::nullopt;
  return (1 - sign) / 2;
}

ParityResult classify_sum(const PositionSum& sum) {
  ParityResult result;
  result.sign = 1;
  for (const Component& c : sum.components) {
    RegularClass cls = classify(c.board);
    if (!cls.regular()) result.sign = 0;
    if (result.sign != 0) result.sign *= cls.sign();
    result.component_classes.push_back(std::move(cls));
  }
  return result;
}

}  // namespace itcx
