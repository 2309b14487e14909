#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotalg/forms.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"

namespace knotalg {

/// Shifts to lowest degree 0 and rescales by a unit so that p(1) = 1 when
/// that is possible.
template <class R>
LaurentPoly<R> normalize_alexander(const LaurentPoly<R>& p) {
  if (p.is_zero()) return p;
  LaurentPoly<R> q = p.shift(-p.min_degree());
  const R at1 = q.augment();
  if (RingTraits<R>::is_unit(at1)) q = q * LaurentPoly<R>(RingTraits<R>::unit_inverse(at1));
  return q;
}

/// det(1 - e + ze) normalized.
template <class R>
LaurentPoly<R> alexander(const SeifertForm<R>& f) {
  check(f.nonsingular(), ErrorKind::SingularForm, "alexander: form is singular");
  return normalize_alexander(laurent_det<R>(covering_matrix<R>(f.module)));
}

long symmetric_signature(Matrix<Rational> s);

/// Signature of θ + θ* by congruence diagonalization over Q.
template <class R>
long signature(const SeifertForm<R>& f) {
  check(f.eta == 1, ErrorKind::WrongEta, "signature: needs eta = +1");
  if constexpr (!RingTraits<R>::ordered) {
    fail(ErrorKind::WrongEta, "signature: coefficient ring is not ordered");
  } else {
    const auto n = f.rank();
    Matrix<Rational> s(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s(i, j) = Rational(f.theta(i, j) + f.theta(j, i));
    return symmetric_signature(s);
  }
}

template <class R>
R determinant_invariant(const SeifertForm<R>& f) {
  const R v = alexander(f).eval_minus_one();
  if constexpr (RingTraits<R>::ordered) {
    return v < 0 ? R(-v) : v;
  } else {
    return v;
  }
}

template <class R>
struct InvariantReport {
  LaurentPoly<R> alexander;
  R alexander_at_one;
  std::optional<long> signature;
  R determinant;
  long rank = 0;
  int eta = 1;
};

template <class R>
InvariantReport<R> invariant_report(const SeifertForm<R>& f) {
  InvariantReport<R> r;
  r.alexander = alexander(f);
  r.alexander_at_one = r.alexander.augment();
  if (f.eta == 1 && RingTraits<R>::ordered) r.signature = signature(f);
  r.determinant = determinant_invariant(f);
  r.rank = f.rank();
  r.eta = f.eta;
  return r;
}

struct KnotRecord {
  std::string name;
  IntMatrix seifert_matrix;
  int eta = 1;
};

/// Built-in knots, validated at first use.
const std::vector<KnotRecord>& knot_table();
const KnotRecord& find_knot(const std::string& name);

}  // namespace knotalg
