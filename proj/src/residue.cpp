#include "itcx/residue.hpp"

namespace itcx {

std::vector<IdentityCheck> prop21_check() {
  std::vector<IdentityCheck> checks;
  for (int v = 0; v < 10; ++v) {
    const Residue a(v);
    const Residue five(5);
    checks.push_back({"chi1(-a) == -chi1(a)", v, chi1(-a) == -chi1(a)});
    checks.push_back({"chi1(5+a) == -chi1(a)", v, chi1(five + a) == -chi1(a)});
    checks.push_back({"chi1(5-a) == chi1(a)", v, chi1(five - a) == chi1(a)});
    checks.push_back({"chi2(-a) == chi2(a)", v, chi2(-a) == chi2(a)});
    checks.push_back({"chi2(5+a) == -chi2(a)", v, chi2(five + a) == -chi2(a)});
    checks.push_back({"chi2(5-a) == -chi2(a)", v, chi2(five - a) == -chi2(a)});
    if (chi2(a) != 0) {
      checks.push_back({"chi1(a-1) == chi2(a), chi1(a-2) == -chi2(a)", v,
                        chi1(a - Residue(1)) == chi2(a) && chi1(a - Residue(2)) == -chi2(a)});
    }
  }
  return checks;
}

}  // namespace itcx
