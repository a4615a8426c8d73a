#include "charnum/reducible.hpp"

namespace charnum {

std::vector<TangencyTerm> tangency_split(int n) {
  std::vector<TangencyTerm> out;
  if (n < 0) return out;
  for (int lc = 0; lc <= n; ++lc) {
    const Integer outer = binomial(n, lc) * (Integer(1) << lc);
    for (int t1 = 0; t1 <= n - lc; ++t1)
      out.push_back({t1, n - lc - t1, lc, outer * binomial(n - lc, t1)});
  }
  return out;
}

}  // namespace charnum
