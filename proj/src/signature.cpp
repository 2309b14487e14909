#include "knotalg/invariants.hpp"

namespace knotalg {

long symmetric_signature(Matrix<Rational> s) {
  const auto n = s.rows();
  long sig = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (s(k, k) == 0) {
      Eigen::Index j = k + 1;
      while (j < n && s(j, j) == 0) ++j;
      if (j < n) {
        s.row(k).swap(s.row(j));
        s.col(k).swap(s.col(j));
      } else {
        j = k + 1;
        while (j < n && s(k, j) == 0) ++j;
        if (j == n) continue;
        // Replace basis vector k by e_k + e_j: new pivot 2 s(k,j).
        s.row(k) += s.row(j);
        s.col(k) += s.col(j);
      }
    }
    const Rational piv = s(k, k);
    sig += piv > 0 ? 1 : -1;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (s(i, k) == 0) continue;
      const Rational c = s(i, k) / piv;
      s.row(i) -= c * s.row(k);
      s.col(i) -= c * s.col(k);
    }
  }
  return sig;
}

}  // namespace knotalg
