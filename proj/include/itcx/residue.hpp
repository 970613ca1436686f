#pragma once

#include <array>
#include <string>
#include <vector>

namespace itcx {

// An element of Z/10Z. Division by 3 is multiplication by 7, since
// gcd(3,10)=1 makes 3 invertible with inverse 7.
class Residue {
 public:
  constexpr Residue(int v = 0) : v_(((v % 10) + 10) % 10) {}
  constexpr int value() const { return v_; }

  friend constexpr Residue operator+(Residue a, Residue b) { return Residue(a.v_ + b.v_); }
  friend constexpr Residue operator-(Residue a, Residue b) { return Residue(a.v_ - b.v_); }
  friend constexpr Residue operator-(Residue a) { return Residue(-a.v_); }
  constexpr Residue div3() const { return Residue(7 * v_); }
  friend constexpr bool operator==(Residue a, Residue b) { return a.v_ == b.v_; }

 private:
  int v_;
};

namespace detail {

// chi1(a) = +1 iff a/3 lies in {0,1,2,3,4}; chi2(a) = +1 iff a/3 lies in
// {9,0,1}, -1 iff a/3 lies in {4,5,6}, 0 otherwise. The tables are derived
// from these formulas at compile time and checked against the expanded
// residue sets, guarding against transcription slips in either form.
constexpr int chi1_formula(int a) { return (7 * a) % 10 <= 4 ? 1 : -1; }
constexpr int chi2_formula(int a) {
  int d = (7 * a) % 10;
  if (d == 9 || d == 0 || d == 1) return 1;
  if (d >= 4 && d <= 6) return -1;
  return 0;
}

constexpr std::array<int, 10> make_table(int (*f)(int)) {
  std::array<int, 10> t{};
  for (int a = 0; a < 10; ++a) t[static_cast<std::size_t>(a)] = f(a);
  return t;
}

inline constexpr std::array<int, 10> kChi1 = make_table(chi1_formula);
inline constexpr std::array<int, 10> kChi2 = make_table(chi2_formula);

constexpr bool in(int a, std::initializer_list<int> set) {
  for (int s : set)
    if (s == a) return true;
  return false;
}

constexpr bool tables_consistent() {
  for (int a = 0; a < 10; ++a) {
    if (kChi1[static_cast<std::size_t>(a)] != (in(a, {0, 2, 3, 6, 9}) ? 1 : -1)) return false;
    int c2 = in(a, {0, 3, 7}) ? 1 : in(a, {2, 5, 8}) ? -1 : 0;
    if (kChi2[static_cast<std::size_t>(a)] != c2) return false;
  }
  return true;
}
static_assert(tables_consistent(), "chi tables disagree with their defining residue sets");

}  // namespace detail

constexpr int chi1(Residue a) { return detail::kChi1[static_cast<std::size_t>(a.value())]; }
constexpr int chi2(Residue a) { return detail::kChi2[static_cast<std::size_t>(a.value())]; }

// One identity of the chi calculus, evaluated at one residue.
struct IdentityCheck {
  std::string identity;
  int residue = 0;
  bool holds = false;
};

// Evaluates the seven chi identities at every a in Z/10Z (the seventh only
// where chi2(a) != 0). All are expected to hold; callers assert on the list.
std::vector<IdentityCheck> prop21_check();

// The two-equality dichotomy behind the interior reduction move:
//   chi1(a)chi1(b) = chi1(a+b+4)   or   chi1(a+1)chi1(b-1) = chi1(a+b+4).
struct AlphaCheck {
  bool first_holds = false;
  bool second_holds = false;
};

constexpr AlphaCheck lemma_alpha_check(Residue a, Residue b) {
  const int target = chi1(a + b + Residue(4));
  return AlphaCheck{
      chi1(a) * chi1(b) == target,
      chi1(a + Residue(1)) * chi1(b - Residue(1)) == target,
  };
}

}  // namespace itcx
