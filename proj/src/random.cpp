#include "knotalg/random.hpp"

namespace knotalg::gen {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Integer(uniform(rng, lo, hi));
  return m;
}

Unimodular random_unimodular(Rng& rng, Eigen::Index n, int steps) {
  Unimodular r{identity<Integer>(n), identity<Integer>(n)};
  if (n < 2) return r;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, n - 1));
    auto j = static_cast<Eigen::Index>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    const Integer c(uniform(rng, -1, 1));
    // u <- u (1 + c E_ij), inv <- (1 - c E_ij) inv
    r.u.col(j) += c * r.u.col(i);
    r.inv.row(i) -= c * r.inv.row(j);
  }
  return r;
}

SeifertForm<Integer> random_nonsingular_form(Rng& rng, Eigen::Index n, int eta, long lo,
                                             long hi) {
  check(n % 2 == 0, ErrorKind::ParseError, "nonsingular forms over Z need even rank");
  for (;;) {
    const IntMatrix theta = random_matrix(rng, n, n, lo, hi);
    const IntMatrix lam = theta - Integer(eta) * theta.transpose();
    if (RingTraits<Integer>::is_unit(determinant<Integer>(lam)))
      return make_seifert_form<Integer>(theta, eta);
  }
}

const char* pad_name(PadKind k) {
  switch (k) {
    case PadKind::Nilpotent: return "nilpotent";
    case PadKind::Unipotent: return "unipotent";
    case PadKind::Mixed: return "mixed";
  }
  return "?";
}

SeifertModule<Integer> random_pad(Rng& rng, PadKind kind) {
  IntMatrix n;
  if (kind == PadKind::Mixed) {
    n = zeros<Integer>(2, 2);
    n(0, 1) = Integer(uniform(rng, -2, 2));
    n(1, 1) = Integer(1);
  } else {
    const auto r = static_cast<Eigen::Index>(uniform(rng, 1, 3));
    n = zeros<Integer>(r, r);
    static const long super[] = {-1, 1, 2};
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = i + 1; j < r; ++j)
        n(i, j) = Integer(j == i + 1 ? super[uniform(rng, 0, 2)] : uniform(rng, -2, 2));
    if (kind == PadKind::Unipotent) n = identity<Integer>(r) - n;
  }
  const Unimodular u = random_unimodular(rng, n.rows());
  return SeifertModule<Integer>(mul<Integer>(mul<Integer>(u.u, n), u.inv));
}

SeifertForm<Integer> pad_form(const SeifertForm<Integer>& f, const SeifertModule<Integer>& pad) {
  return SeifertForm<Integer>{direct_sum(f.module, pad),
                              block_diag<Integer>(f.theta, zeros<Integer>(pad.rank(), pad.rank())),
                              f.eta};
}

SeifertForm<Integer> conjugate(const SeifertForm<Integer>& f, const Unimodular& u) {
  return SeifertForm<Integer>{
      SeifertModule<Integer>(mul<Integer>(mul<Integer>(u.inv, f.e()), u.u)),
      mul<Integer>(mul<Integer>(u.u.transpose(), f.theta), u.u), f.eta};
}

}  // namespace knotalg::gen
