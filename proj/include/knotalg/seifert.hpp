#pragma once

#include <optional>
#include <string>

#include "knotalg/errors.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"

namespace knotalg {

/// Free module of rank n with an endomorphism e.
template <class R>
struct SeifertModule {
  Matrix<R> e;

  SeifertModule() = default;
  explicit SeifertModule(Matrix<R> endo) : e(std::move(endo)) {
    require_square(e, "SeifertModule");
  }
  static SeifertModule zero() { return SeifertModule(zeros<R>(0, 0)); }

  Eigen::Index rank() const { return e.rows(); }
  /// e(1 - e), the matrix of t on the covering.
  Matrix<R> t() const { return mul<R>(e, identity<R>(rank()) - e); }

  friend bool operator==(const SeifertModule& a, const SeifertModule& b) {
    return equal<R>(a.e, b.e);
  }
};

template <class R>
struct SeifertMorphism {
  SeifertModule<R> source;
  SeifertModule<R> target;
  Matrix<R> g;
};

template <class R>
bool intertwines(const SeifertModule<R>& src, const SeifertModule<R>& tgt, const Matrix<R>& g) {
  if (g.rows() != tgt.rank() || g.cols() != src.rank()) return false;
  return equal<R>(mul<R>(tgt.e, g), mul<R>(g, src.e));
}

template <class R>
SeifertMorphism<R> make_morphism(const SeifertModule<R>& src, const SeifertModule<R>& tgt,
                                 const Matrix<R>& g) {
  check(g.rows() == tgt.rank() && g.cols() == src.rank(), ErrorKind::ShapeMismatch,
        "make_morphism: g is " + shape_str(g.rows(), g.cols()) + ", expected " +
            shape_str(tgt.rank(), src.rank()));
  check(intertwines(src, tgt, g), ErrorKind::NotIntertwining, "make_morphism: e'g != ge");
  return {src, tgt, g};
}

/// (P, e)* = (P*, 1 - e*).
template <class R>
SeifertModule<R> dual_module(const SeifertModule<R>& m) {
  return SeifertModule<R>(identity<R>(m.rank()) - transpose_conjugate<R>(m.e));
}

template <class R>
SeifertMorphism<R> dual_morphism(const SeifertMorphism<R>& f) {
  return {dual_module(f.target), dual_module(f.source), transpose_conjugate<R>(f.g)};
}

template <class R>
SeifertModule<R> direct_sum(const SeifertModule<R>& a, const SeifertModule<R>& b) {
  return SeifertModule<R>(block_diag<R>(a.e, b.e));
}

/// 1 - e + z·e, the covering presentation.
template <class R>
LaurentMatrix<R> covering_matrix(const SeifertModule<R>& m) {
  return linear_pencil<R>(identity<R>(m.rank()) - m.e, m.e);
}

/// Least k <= rank with (e(1-e))^k = 0.
template <class R>
std::optional<int> is_near_projection(const SeifertModule<R>& m) {
  return is_nilpotent<R>(m.t());
}

/// π_k with x^k + (1-x)^k = 1 + x(1-x)π_k(x).
IntPoly pi_k(int k);

template <class R>
struct NearProjectionSplit {
  int k = 0;
  Matrix<R> pi_k;
  Matrix<R> projector;
  SeifertModule<R> plus;
  IdempotentSplit<R> plus_split;
  SeifertModule<R> minus;
  IdempotentSplit<R> minus_split;
};

/// Unipotent ⊕ nilpotent decomposition with p = (e^k + (1-e)^k)^{-1} e^k.
template <class R>
NearProjectionSplit<R> split_near_projection(const SeifertModule<R>& m) {
  auto kk = is_near_projection(m);
  check(kk.has_value(), ErrorKind::NotNearProjection,
        "split_near_projection: e(1-e) is not nilpotent");
  const int k = *kk;
  const auto n = m.rank();
  const Matrix<R> one = identity<R>(n);
  const Matrix<R> ek = power<R>(m.e, k);
  const Matrix<R> fk = power<R>(one - m.e, k);

  NearProjectionSplit<R> s;
  s.k = k;
  s.pi_k = poly_eval<R>(pi_k(k), m.e);
  const Matrix<R> nil = mul<R>(m.t(), s.pi_k);
  if (k > 0) ensure(equal<R>(ek + fk, one + nil), "e^k + (1-e)^k != 1 + e(1-e)pi_k(e)");

  // (1 + N)^{-1} = Σ_{j<k} (-N)^j since N^k = 0.
  Matrix<R> u = zeros<R>(n, n);
  Matrix<R> term = one;
  for (int j = 0; j < k; ++j) {
    u += term;
    term = mul<R>(term, Matrix<R>(-nil));
  }
  if (k == 0) u = one;
  ensure(n == 0 || k == 0 || is_identity<R>(mul<R>(ek + fk, u)),
         "near-projection: series inverse failed");
  s.projector = mul<R>(u, ek);
  ensure(equal<R>(mul<R>(s.projector, s.projector), s.projector), "near-projection: p^2 != p");
  ensure(equal<R>(mul<R>(s.projector, m.e), mul<R>(m.e, s.projector)),
         "near-projection: pe != ep");

  s.plus_split = split_idempotent<R>(s.projector);
  s.minus_split = split_idempotent<R>(Matrix<R>(one - s.projector));
  s.plus = SeifertModule<R>(restrict_to<R>(s.plus_split, m.e));
  s.minus = SeifertModule<R>(restrict_to<R>(s.minus_split, m.e));
  ensure(s.plus.rank() + s.minus.rank() == n, "near-projection: ranks do not add up");
  ensure(is_zero_matrix<R>(power<R>(identity<R>(s.plus.rank()) - s.plus.e, k)),
         "near-projection: P+ is not unipotent");
  ensure(is_zero_matrix<R>(power<R>(s.minus.e, k)), "near-projection: P- is not nilpotent");
  return s;
}

}  // namespace knotalg
