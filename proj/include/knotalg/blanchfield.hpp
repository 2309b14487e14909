#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "knotalg/errors.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg {

/// Square presentation d over R[z,1/z] whose augmentation is invertible; h
/// caches augment(d)^{-1}.
template <class R>
struct BlanchfieldPresentation {
  LaurentMatrix<R> d;
  Matrix<R> h;
};

template <class R>
BlanchfieldPresentation<R> make_presentation(const LaurentMatrix<R>& d) {
  require_square(d, "presentation");
  const Matrix<R> eps = augment<R>(d);
  check(is_invertible<R>(eps), ErrorKind::InvalidPresentation,
        "presentation: augmentation is not invertible");
  return {d, inverse<R>(eps)};
}

template <class R>
BlanchfieldPresentation<R> covering(const SeifertModule<R>& m) {
  return {covering_matrix<R>(m), identity<R>(m.rank())};
}

/// Multiplies by z^N so that no negative powers remain.
template <class R>
LaurentMatrix<R> clear_negative_powers(const LaurentMatrix<R>& d) {
  long lo = 0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) lo = std::min(lo, d(i, j).min_degree());
  if (lo == 0) return d;
  return d.unaryExpr([lo](const LaurentPoly<R>& p) { return p.shift(-lo); });
}

template <class R>
long max_z_degree(const LaurentMatrix<R>& d) {
  long hi = 0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) hi = std::max(hi, d(i, j).max_degree());
  return hi;
}

namespace detail {
inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r(1);
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace detail

/// Block companion matrix of Δ = Σ_j d_j ε(d)^{-1} s^{k-j} (s-1)^j; its
/// covering presents coker(d).
template <class R>
SeifertModule<R> seifertize(const BlanchfieldPresentation<R>& b) {
  const LaurentMatrix<R> d = clear_negative_powers<R>(b.d);
  const auto n = d.rows();
  const long k = max_z_degree<R>(d);
  if (n == 0 || k == 0) return SeifertModule<R>::zero();

  std::vector<Matrix<R>> dh(k + 1);
  for (long j = 0; j <= k; ++j) dh[j] = mul<R>(coefficient<R>(d, j), b.h);

  std::vector<Matrix<R>> delta(k + 1, zeros<R>(n, n));
  for (long j = 0; j <= k; ++j) {
    // s^{k-j} (s-1)^j = Σ_i C(j,i) (-1)^{j-i} s^{k-j+i}
    for (long i = 0; i <= j; ++i) {
      Integer c = detail::binomial(j, i);
      if ((j - i) % 2) c = -c;
      delta[k - j + i] += lift<R>(c) * dh[j];
    }
  }
  ensure(is_identity<R>(delta[k]), "seifertize: Δ is not monic");

  Matrix<R> e = zeros<R>(n * k, n * k);
  for (long r = 0; r + 1 < k; ++r) e.block((r + 1) * n, r * n, n, n) = identity<R>(n);
  for (long r = 0; r < k; ++r) e.block(r * n, (k - 1) * n, n, n) = -delta[r];
  return SeifertModule<R>(e);
}

/// B(g) t^{-k} between the coverings of source and target.
template <class R>
struct BlanchfieldMorphism {
  SeifertModule<R> source;
  SeifertModule<R> target;
  Matrix<R> g;
  long k = 0;
};

template <class R>
BlanchfieldMorphism<R> make_blanchfield_morphism(const SeifertModule<R>& src,
                                                 const SeifertModule<R>& tgt,
                                                 const Matrix<R>& g, long k) {
  check(k >= 0, ErrorKind::ParseError, "morphism: t-exponent must be >= 0");
  make_morphism<R>(src, tgt, g);
  return {src, tgt, g, k};
}

template <class R>
BlanchfieldMorphism<R> identity_morphism(const SeifertModule<R>& m) {
  return {m, m, identity<R>(m.rank()), 0};
}

/// Least l <= rank(source) with (g1 T^{k2} - g2 T^{k1}) T^l = 0, if any.
template <class R>
std::optional<int> morphism_equal_exponent(const BlanchfieldMorphism<R>& f1,
                                           const BlanchfieldMorphism<R>& f2) {
  check(f1.source == f2.source && f1.target == f2.target, ErrorKind::SourceTargetMismatch,
        "morphism_equal: different source or target");
  const Matrix<R> t = f1.source.t();
  Matrix<R> x = mul<R>(f1.g, power<R>(t, f2.k)) - mul<R>(f2.g, power<R>(t, f1.k));
  for (Eigen::Index l = 0; l <= f1.source.rank(); ++l) {
    if (is_zero_matrix<R>(x)) return static_cast<int>(l);
    x = mul<R>(x, t);
  }
  return std::nullopt;
}

template <class R>
bool morphism_equal(const BlanchfieldMorphism<R>& f1, const BlanchfieldMorphism<R>& f2) {
  return morphism_equal_exponent(f1, f2).has_value();
}

/// f2 ∘ f1.
template <class R>
BlanchfieldMorphism<R> compose(const BlanchfieldMorphism<R>& f2,
                               const BlanchfieldMorphism<R>& f1) {
  check(f1.target == f2.source, ErrorKind::SourceTargetMismatch,
        "compose: target of the first map is not the source of the second");
  return {f1.source, f2.target, mul<R>(f2.g, f1.g), f1.k + f2.k};
}

/// Greedily divides g by t while the quotient is still an intertwiner.
template <class R>
BlanchfieldMorphism<R> reduce(BlanchfieldMorphism<R> f) {
  const Matrix<R> t = f.source.t();
  while (f.k > 0) {
    auto q = solve_left<R>(t, f.g);
    if (!q || !intertwines(f.source, f.target, *q)) break;
    f.g = *q;
    --f.k;
  }
  return f;
}

struct InvertOptions {
  /// Largest exponent j tried; negative means rank + 24.
  long max_exponent = -1;
};

template <class R>
struct Inverse {
  BlanchfieldMorphism<R> morphism;
  Matrix<R> h;
  long j = 0;
};

/// Finds an intertwiner h with g·h = T_tgt^j and h·g = T_src^j for the least
/// such j up to the cap. The inverse of B(g)t^{-k} is B(T_src^k h) t^{-j}.
template <class R>
std::optional<Inverse<R>> invert(const BlanchfieldMorphism<R>& f, InvertOptions opt = {}) {
  const auto ns = f.source.rank();
  const auto nt = f.target.rank();
  const long cap =
      opt.max_exponent >= 0 ? opt.max_exponent : static_cast<long>(std::max(ns, nt)) + 24;
  const Matrix<R> is = identity<R>(ns);
  const Matrix<R> it = identity<R>(nt);

  // Unknown vec(h), h of shape ns x nt.
  Matrix<R> a(nt * nt + ns * ns + ns * nt, ns * nt);
  a.topRows(nt * nt) = kron<R>(it, f.g);
  a.middleRows(nt * nt, ns * ns) = kron<R>(Matrix<R>(f.g.transpose()), is);
  a.bottomRows(ns * nt) =
      kron<R>(it, f.source.e) - kron<R>(Matrix<R>(f.target.e.transpose()), is);
  const HermiteSolver<R> solver(a);
  const Matrix<R> ts = f.source.t();
  const Matrix<R> tt = f.target.t();

  auto attempt = [&](long j) -> std::optional<Matrix<R>> {
    Vector<R> b(a.rows());
    b.head(nt * nt) = vec<R>(power<R>(tt, j));
    b.segment(nt * nt, ns * ns) = vec<R>(power<R>(ts, j));
    b.tail(ns * nt).setZero();
    auto x = solver.solve(Matrix<R>(b));
    if (!x) return std::nullopt;
    return unvec<R>(Vector<R>(x->col(0)), ns, nt);
  };

  auto best = attempt(cap);
  if (!best) return std::nullopt;
  long lo = 0, hi = cap;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (auto h = attempt(mid)) {
      best = h;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  Inverse<R> inv;
  inv.h = *best;
  inv.j = hi;
  inv.morphism = {f.target, f.source, mul<R>(power<R>(ts, f.k), inv.h), hi};
  ensure(equal<R>(mul<R>(f.g, inv.h), power<R>(tt, hi)), "invert: g h != T^j");
  ensure(equal<R>(mul<R>(inv.h, f.g), power<R>(ts, hi)), "invert: h g != T^j");
  ensure(intertwines(f.target, f.source, inv.h), "invert: h does not intertwine");
  return inv;
}

/// Identification of the dual covering B(P,e)^ with B(P*, 1 - e*). All dual
/// computations happen on the (P*, 1 - e*) side.
template <class R>
struct Zeta {
  SeifertModule<R> module;
  SeifertModule<R> dual_side() const { return dual_module(module); }
};

template <class R>
Zeta<R> zeta(const SeifertModule<R>& m) {
  return {m};
}

/// (B(g) t^{-k})^ transported through ζ: B(g*) t^{-k}.
template <class R>
BlanchfieldMorphism<R> dual_of_morphism(const BlanchfieldMorphism<R>& f) {
  return {dual_module(f.target), dual_module(f.source), transpose_conjugate<R>(f.g), f.k};
}

}  // namespace knotalg
