#pragma once

#include <optional>
#include <string>

#include "knotalg/blanchfield.hpp"
#include "knotalg/errors.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg {

inline void require_eta(int eta) {
  check(eta == 1 || eta == -1, ErrorKind::ParseError, "eta must be +1 or -1");
}

/// (P, e, θ) with θ = (θ - ηθ*) e.
template <class R>
struct SeifertForm {
  SeifertModule<R> module;
  Matrix<R> theta;
  int eta = 1;

  Eigen::Index rank() const { return module.rank(); }
  const Matrix<R>& e() const { return module.e; }
  /// λ = θ - ηθ*.
  Matrix<R> lambda() const { return theta - R(eta) * transpose_conjugate<R>(theta); }
  bool nonsingular() const { return is_invertible<R>(lambda()); }
};

/// Nonsingular form from θ alone: e = λ^{-1} θ.
template <class R>
SeifertForm<R> make_seifert_form(const Matrix<R>& theta, int eta) {
  require_square(theta, "make_seifert_form");
  require_eta(eta);
  SeifertForm<R> f;
  f.theta = theta;
  f.eta = eta;
  const Matrix<R> lam = f.lambda();
  check(is_invertible<R>(lam), ErrorKind::SingularForm,
        "make_seifert_form: theta - eta*theta^T is not invertible");
  f.module = SeifertModule<R>(mul<R>(inverse<R>(lam), theta));
  ensure(equal<R>(mul<R>(lam, f.module.e), theta), "make_seifert_form: theta != lambda e");
  return f;
}

/// Form with an explicit endomorphism; validates θ = λe.
template <class R>
SeifertForm<R> make_seifert_form(const Matrix<R>& theta, const Matrix<R>& e, int eta) {
  require_square(theta, "make_seifert_form");
  require_eta(eta);
  check(theta.rows() == e.rows() && theta.cols() == e.cols(), ErrorKind::ShapeMismatch,
        "make_seifert_form: theta and e differ in shape");
  SeifertForm<R> f{SeifertModule<R>(e), theta, eta};
  check(equal<R>(mul<R>(f.lambda(), e), theta), ErrorKind::NotIntertwining,
        "make_seifert_form: theta != (theta - eta*theta^T) e");
  return f;
}

/// θ' = (θ - ηθ*) e for θ intertwining (P,e) -> (P*, 1-e*).
template <class R>
SeifertForm<R> symmetrize(const Matrix<R>& theta_raw, const SeifertModule<R>& m, int eta) {
  require_eta(eta);
  check(intertwines(m, dual_module(m), theta_raw), ErrorKind::NotIntertwining,
        "symmetrize: theta does not intertwine (P,e) -> (P*,1-e*)");
  const Matrix<R> lam = theta_raw - R(eta) * transpose_conjugate<R>(theta_raw);
  SeifertForm<R> f{m, mul<R>(lam, m.e), eta};
  ensure(equal<R>(f.lambda(), lam), "symmetrize: lambda changed");
  return f;
}

template <class R>
SeifertForm<R> direct_sum(const SeifertForm<R>& a, const SeifertForm<R>& b) {
  check(a.eta == b.eta, ErrorKind::ParseError, "direct_sum: eta differs");
  return {direct_sum(a.module, b.module), block_diag<R>(a.theta, b.theta), a.eta};
}

/// Normal-form Blanchfield form φ = ζ B(g_φ) t^{-k} on the covering of module.
template <class R>
struct BlanchfieldForm {
  SeifertModule<R> module;
  Matrix<R> g_phi;
  long k = 0;
  int eta = 1;

  BlanchfieldMorphism<R> phi() const { return {module, dual_module(module), g_phi, k}; }
};

/// (-η(1-e*)^2 g*, k+1): the normal form of ηφ^.
template <class R>
BlanchfieldMorphism<R> symmetry_partner(const BlanchfieldForm<R>& b) {
  const Matrix<R> ome = identity<R>(b.module.rank()) - transpose_conjugate<R>(b.module.e);
  return {b.module, dual_module(b.module),
          R(-b.eta) * mul<R>(mul<R>(ome, ome), transpose_conjugate<R>(b.g_phi)), b.k + 1};
}

template <class R>
bool is_symmetric(const BlanchfieldForm<R>& b) {
  return morphism_equal(b.phi(), symmetry_partner(b));
}

template <class R>
BlanchfieldForm<R> make_blanchfield_form(const SeifertModule<R>& m, const Matrix<R>& g_phi,
                                         long k, int eta) {
  require_eta(eta);
  check(k >= 0, ErrorKind::ParseError, "Blanchfield form: t-exponent must be >= 0");
  make_morphism<R>(m, dual_module(m), g_phi);
  return {m, g_phi, k, eta};
}

/// Whether the covering of λ is an isomorphism (true when λ is invertible,
/// and also for nonsingular forms padded by near-projection summands).
template <class R>
bool covering_nonsingular(const SeifertForm<R>& f, InvertOptions opt = {}) {
  if (f.nonsingular()) return true;
  return invert<R>({f.module, dual_module(f.module), f.lambda(), 0}, opt).has_value();
}

/// φ = ζ B(θ) t^{-1}.
template <class R>
BlanchfieldForm<R> cover_form(const SeifertForm<R>& f) {
  check(covering_nonsingular(f), ErrorKind::SingularForm,
        "cover_form: the covering form is singular");
  BlanchfieldForm<R> b{f.module, f.theta, 1, f.eta};
  ensure(is_symmetric(b), "cover_form: eta-symmetry fails");
  return b;
}

/// Whether (g, k) is a morphism of forms: B(g*λ'g) t^{-2k} = B(λ). Returns the
/// least annihilating exponent l <= rank, or nullopt.
template <class R>
std::optional<int> check_form_morphism(const Matrix<R>& g, long k, const SeifertForm<R>& src,
                                       const SeifertForm<R>& tgt) {
  if (!intertwines(src.module, tgt.module, g)) return std::nullopt;
  const Matrix<R> t = src.module.t();
  Matrix<R> x = mul<R>(mul<R>(transpose_conjugate<R>(g), tgt.lambda()), g) -
                mul<R>(src.lambda(), power<R>(t, 2 * k));
  for (Eigen::Index l = 0; l <= src.rank(); ++l) {
    if (is_zero_matrix<R>(x)) return static_cast<int>(l);
    x = mul<R>(x, t);
  }
  return std::nullopt;
}

/// Self-dual chain projection for exponent k: f(x) = Σ_{j>=k} C(2k-1,j)
/// x^j (1-x)^{2k-1-j}, so that f(x) + f(1-x) = 1 and x^k | f.
IntPoly binomial_projection(int k);
/// Y with f(x) f(1-x) = (x(1-x))^k Y(x) and Y(x) = Y(1-x).
IntPoly binomial_homotopy(int k);

template <class R>
struct UncoverTrace {
  bool shortcut = false;
  long twist = 0;
  Matrix<R> theta_raw;
  Matrix<R> theta;
  Matrix<R> lambda;
  Matrix<R> h;
  Matrix<R> h_prime;
  int k = 0;
  Matrix<R> p0;
  Matrix<R> p1;
  Matrix<R> q;
  Matrix<R> p_plus;
  Matrix<R> p_minus;
  Matrix<R> big_lambda;
  Matrix<R> e_v;
  IdempotentSplit<R> split;
  int assertions = 0;
};

template <class R>
struct UncoverResult {
  SeifertForm<R> form;
  UncoverTrace<R> trace;
};

struct UncoverOptions {
  InvertOptions invert;
};

/// Nonsingular Seifert form whose covering realizes b.
template <class R>
UncoverResult<R> uncover(const BlanchfieldForm<R>& b, UncoverOptions opt = {}) {
  require_eta(b.eta);
  check(is_symmetric(b), ErrorKind::NotSymmetric, "uncover: form is not eta-symmetric");
  const int eta = b.eta;
  const auto n = b.module.rank();
  const Matrix<R>& e = b.module.e;
  const Matrix<R> one = identity<R>(n);
  const Matrix<R> t = b.module.t();
  const Matrix<R> tt = transpose_conjugate<R>(t);

  UncoverResult<R> res;
  UncoverTrace<R>& tr = res.trace;
  auto assert_that = [&tr](bool ok, const char* what) {
    ensure(ok, std::string("uncover: ") + what);
    ++tr.assertions;
  };

  // Bring k to 1: (s^l)^ φ s^l = t^l φ.
  tr.twist = std::max<long>(b.k - 1, 0);
  tr.theta_raw = b.k >= 1 ? b.g_phi : mul<R>(b.g_phi, t);
  const SeifertForm<R> sym = symmetrize<R>(tr.theta_raw, b.module, eta);
  tr.theta = sym.theta;
  tr.lambda = sym.lambda();
  assert_that(morphism_equal<R>({b.module, dual_module(b.module), tr.theta_raw, 1},
                                {b.module, dual_module(b.module), tr.theta, 1}),
              "symmetrized theta changes the form");

  if (is_invertible<R>(tr.lambda)) {
    tr.shortcut = true;
    res.form = sym;
    return res;
  }

  const BlanchfieldMorphism<R> lam_map{b.module, dual_module(b.module), tr.lambda, 0};
  auto inv = invert<R>(lam_map, opt.invert);
  check(inv.has_value(), ErrorKind::NotNonsingularForm,
        "uncover: the form is not an isomorphism (no inverse within the exponent cap)");
  tr.h = inv->h;
  tr.k = static_cast<int>(inv->j);
  const int k = tr.k;
  assert_that(k >= 1, "singular lambda with exponent 0");

  tr.h_prime = mul<R>(e, tr.h) - R(eta) * mul<R>(transpose_conjugate<R>(tr.h),
                                                 transpose_conjugate<R>(e));
  const Matrix<R> tk = power<R>(t, k);
  const Matrix<R> ttk = power<R>(tt, k);
  assert_that(equal<R>(mul<R>(tr.h_prime, tr.lambda), tk), "h' lambda != (e(1-e))^k");
  assert_that(equal<R>(mul<R>(tr.lambda, tr.h_prime), ttk), "lambda h' != (e*(1-e*))^k");
  assert_that(equal<R>(tr.h_prime, R(-eta) * transpose_conjugate<R>(tr.h_prime)),
              "h' is not (-eta)-symmetric");

  const Matrix<R> e0 = one - transpose_conjugate<R>(e);
  const IntPoly f = binomial_projection(k);
  const IntPoly y = binomial_homotopy(k);
  tr.p0 = poly_eval<R>(f, e0);
  tr.p1 = poly_eval<R>(f, e);
  tr.q = mul<R>(poly_eval<R>(y, e), tr.h_prime);

  assert_that(equal<R>(tr.p1, one - transpose_conjugate<R>(tr.p0)), "p1 != 1 - p0*");
  assert_that(equal<R>(mul<R>(tr.p0, tr.lambda), mul<R>(tr.lambda, tr.p1)),
              "p is not a chain map");
  assert_that(equal<R>(mul<R>(tr.lambda, tr.q), mul<R>(tr.p0, one - tr.p0)),
              "lambda q != p0 (1 - p0)");
  assert_that(equal<R>(mul<R>(tr.q, tr.lambda), mul<R>(tr.p1, one - tr.p1)),
              "q lambda != p1 (1 - p1)");
  assert_that(equal<R>(tr.q, R(-eta) * transpose_conjugate<R>(tr.q)),
              "q is not (-eta)-symmetric");
  assert_that(equal<R>(mul<R>(e, tr.q), mul<R>(tr.q, e0)), "q does not intertwine");

  // V = P* ⊕ P.
  tr.p_plus = block2x2<R>(tr.p0, tr.lambda, tr.q, one - tr.p1);
  const Matrix<R> one_v = identity<R>(2 * n);
  tr.p_minus = one_v - tr.p_plus;
  tr.e_v = block_diag<R>(e0, e);
  assert_that(equal<R>(mul<R>(tr.p_plus, tr.p_plus), tr.p_plus), "p+ is not idempotent");
  assert_that(equal<R>(mul<R>(tr.p_minus, tr.p_minus), tr.p_minus), "p- is not idempotent");
  assert_that(equal<R>(tr.p_plus + tr.p_minus, one_v), "p+ + p- != 1");
  assert_that(equal<R>(mul<R>(tr.p_plus, tr.e_v), mul<R>(tr.e_v, tr.p_plus)),
              "p+ does not commute with e");

  tr.big_lambda = block2x2<R>(R(-eta) * tr.q, R(-eta) * transpose_conjugate<R>(tr.p0), tr.p0,
                              tr.lambda);
  assert_that(equal<R>(tr.big_lambda, R(-eta) * transpose_conjugate<R>(tr.big_lambda)),
              "Lambda is not (-eta)-symmetric");

  tr.split = split_idempotent<R>(tr.p_plus);
  const Matrix<R> e_plus = restrict_to<R>(tr.split, tr.e_v);
  const Matrix<R> lam_plus = mul<R>(
      mul<R>(transpose_conjugate<R>(tr.split.image_basis), tr.big_lambda), tr.split.image_basis);
  assert_that(is_invertible<R>(lam_plus), "restricted Lambda is not invertible");
  const Matrix<R> theta_plus = mul<R>(lam_plus, e_plus);
  res.form = SeifertForm<R>{SeifertModule<R>(e_plus), theta_plus, eta};
  assert_that(equal<R>(res.form.lambda(), lam_plus), "output is not a Seifert form");
  return res;
}

struct RankCertificate {
  bool skipped = false;
  bool holds = true;
  long expected = 0;
  long actual = 0;
};

/// rank(P') = k·rank(P0), k the z-degree of the normalized presentation.
template <class R>
RankCertificate rank_certificate(const UncoverResult<R>& r, const BlanchfieldForm<R>& input) {
  RankCertificate c;
  c.actual = r.form.rank();
  if (r.trace.shortcut) {
    c.skipped = true;
    c.expected = c.actual;
    return c;
  }
  const LaurentMatrix<R> d = clear_negative_powers<R>(covering_matrix<R>(input.module));
  c.expected = max_z_degree<R>(d) * static_cast<long>(input.module.rank());
  c.holds = c.expected == c.actual;
  return c;
}

/// (P_{z,1-z}, (1-z)θ).
template <class R>
struct LocalizedForm {
  Matrix<LocalizedElement<R>> matrix;
  int eta = 1;
  Eigen::Index rank() const { return matrix.rows(); }
};

template <class R>
LocalizedForm<R> localize_form(const SeifertForm<R>& f) {
  check(f.nonsingular(), ErrorKind::SingularForm, "localize_form: form is singular");
  using L = LocalizedElement<R>;
  const L one_minus_z(LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(1));
  LocalizedForm<R> lf;
  lf.eta = f.eta;
  lf.matrix.resize(f.rank(), f.rank());
  for (Eigen::Index i = 0; i < f.rank(); ++i)
    for (Eigen::Index j = 0; j < f.rank(); ++j)
      lf.matrix(i, j) = one_minus_z * L(LaurentPoly<R>(f.theta(i, j)));
  return lf;
}

/// ψ - η ψ̄^T, computed entrywise through the involution on the localization.
template <class R>
Matrix<LocalizedElement<R>> hermitian_defect(const LocalizedForm<R>& lf) {
  Matrix<LocalizedElement<R>> d(lf.rank(), lf.rank());
  for (Eigen::Index i = 0; i < lf.rank(); ++i)
    for (Eigen::Index j = 0; j < lf.rank(); ++j)
      d(i, j) = lf.matrix(i, j) - LocalizedElement<R>(lf.eta) * lf.matrix(j, i).involute();
  return d;
}

/// (1-z)θ - η(1-z^{-1})θ*, built directly over the Laurent ring.
template <class R>
LaurentMatrix<R> hermitian_defect_direct(const SeifertForm<R>& f) {
  const LaurentPoly<R> a = LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(1);
  const LaurentPoly<R> abar = LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(-1);
  LaurentMatrix<R> d(f.rank(), f.rank());
  for (Eigen::Index i = 0; i < f.rank(); ++i)
    for (Eigen::Index j = 0; j < f.rank(); ++j)
      d(i, j) = a * LaurentPoly<R>(f.theta(i, j)) -
                LaurentPoly<R>(R(f.eta)) * abar * LaurentPoly<R>(f.theta(j, i));
  return d;
}

/// Both computations of the defect agree exactly.
template <class R>
bool hermitian_defect_identity(const SeifertForm<R>& f) {
  const auto lf = localize_form(f);
  const auto d1 = hermitian_defect(lf);
  const auto d2 = hermitian_defect_direct(f);
  for (Eigen::Index i = 0; i < f.rank(); ++i)
    for (Eigen::Index j = 0; j < f.rank(); ++j)
      if (d1(i, j) != LocalizedElement<R>(d2(i, j))) return false;
  return true;
}

}  // namespace knotalg
