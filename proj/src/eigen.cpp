#include "bandlimit/eigen.hpp"

namespace bandlimit {

Rational rational_quadform(const std::vector<Rational>& a, const RationalMatrix& M) {
  if (M.size() != a.size()) throw DomainError("rational_quadform: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (M[i].size() != a.size()) throw DomainError("rational_quadform: matrix is not square");
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) row += M[i][j] * a[j];
    s += a[i] * row;
  }
  return s;
}

} // namespace bandlimit
