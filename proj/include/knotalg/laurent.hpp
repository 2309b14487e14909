#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "knotalg/errors.hpp"
#include "knotalg/linalg.hpp"
#include "knotalg/scalar.hpp"

namespace knotalg {

/// Largest |degree| a Laurent polynomial may reach before arithmetic throws
/// ResourceLimit.
inline std::atomic<long> laurent_degree_cap{512};

inline void set_degree_cap(long cap) { laurent_degree_cap.store(cap); }

/// Element of R[z, 1/z]: sparse map degree -> nonzero coefficient.
template <class R>
class LaurentPoly {
public:
  using Terms = std::map<long, R>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(R(c)) {}
  LaurentPoly(long c) : LaurentPoly(R(c)) {}
  LaurentPoly(long long c) : LaurentPoly(R(c)) {}
  explicit LaurentPoly(const R& c) {
    if (!knotalg::is_zero(c)) terms_.emplace(0, c);
  }

  static LaurentPoly monomial(const R& c, long deg) {
    LaurentPoly p;
    if (!knotalg::is_zero(c)) {
      check_degree(deg);
      p.terms_.emplace(deg, c);
    }
    return p;
  }
  static LaurentPoly z(long deg = 1) { return monomial(R(1), deg); }

  static LaurentPoly from_terms(const std::vector<std::pair<long, R>>& terms) {
    LaurentPoly p;
    for (const auto& [d, c] : terms) p += monomial(c, d);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  R coeff(long d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? R(0) : it->second;
  }
  R leading() const { return terms_.rbegin()->second; }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Multiply by z^m.
  LaurentPoly shift(long m) const {
    LaurentPoly p;
    for (const auto& [d, c] : terms_) {
      check_degree(d + m);
      p.terms_.emplace_hint(p.terms_.end(), d + m, c);
    }
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& [d, c] : p.terms_) c = -c;
    return p;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    check_degree(a.min_degree() + b.min_degree());
    check_degree(a.max_degree() + b.max_degree());
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) p.add_term(da + db, ca * cb);
    return p;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Value at z = 1.
  R augment() const {
    R s(0);
    for (const auto& [d, c] : terms_) s += c;
    return s;
  }

  /// Value at z = -1.
  R eval_minus_one() const {
    R s(0);
    for (const auto& [d, c] : terms_) s += (d % 2 == 0) ? c : R(-c);
    return s;
  }

  /// z -> 1/z with coefficients involuted.
  LaurentPoly involute() const {
    LaurentPoly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(-d, RingTraits<R>::conj(c));
    return p;
  }

  /// Units of R[z,1/z] over a domain: c·z^m with c a unit of R.
  bool is_unit() const { return is_monomial() && RingTraits<R>::is_unit(leading()); }

  /// Exact quotient a / b if b divides a, else nullopt.
  static std::optional<LaurentPoly> divide(const LaurentPoly& a, const LaurentPoly& b) {
    check(!b.is_zero(), ErrorKind::NotInvertible, "Laurent division by zero");
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly rem = a.shift(-a.min_degree());
    const LaurentPoly den = b.shift(-b.min_degree());
    const long dd = den.max_degree();
    const R lc = den.leading();
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_degree() >= dd) {
      const R top = rem.leading();
      if (!RingTraits<R>::divides(lc, top)) return std::nullopt;
      const long shift = rem.max_degree() - dd;
      const LaurentPoly step = monomial(RingTraits<R>::exact_div(top, lc), shift);
      q += step;
      rem -= step * den;
    }
    if (!rem.is_zero()) return std::nullopt;
    return q.shift(a.min_degree() - b.min_degree());
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

  std::string to_string(const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [d, c] = *it;
      std::string cs = RingTraits<R>::str(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const bool unit_coeff = cs == "1";
      if (d == 0) {
        out += cs;
      } else {
        if (!unit_coeff) out += cs + "*";
        out += var;
        if (d != 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

private:
  static void check_degree(long d) {
    const long cap = laurent_degree_cap.load();
    if (std::labs(d) > cap)
      fail(ErrorKind::ResourceLimit,
           "Laurent degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  }
  void add_term(long d, const R& c) {
    if (is_zero_scalar(c)) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      check_degree(d);
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }
  static bool is_zero_scalar(const R& c) { return knotalg::is_zero(c); }

  Terms terms_;
};

template <class R>
using LaurentMatrix = Matrix<LaurentPoly<R>>;

template <class R>
struct RingTraits<LaurentPoly<R>> {
  static constexpr bool is_field = false;
  static constexpr bool ordered = false;
  static LaurentPoly<R> conj(const LaurentPoly<R>& a) { return a.involute(); }
  static bool is_unit(const LaurentPoly<R>& a) { return a.is_unit(); }
  static bool divides(const LaurentPoly<R>& b, const LaurentPoly<R>& a) {
    if (b.is_zero()) return a.is_zero();
    return LaurentPoly<R>::divide(a, b).has_value();
  }
  static LaurentPoly<R> exact_div(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    auto q = LaurentPoly<R>::divide(a, b);
    ensure(q.has_value(), "Laurent exact division failed");
    return *q;
  }
  static std::string str(const LaurentPoly<R>& a) { return a.to_string(); }
};

template <class R>
LaurentPoly<R> involute(const LaurentPoly<R>& p) {
  return p.involute();
}

/// Substitutes z = 1 entrywise.
template <class R>
Matrix<R> augment(const LaurentMatrix<R>& m) {
  Matrix<R> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).augment();
  return a;
}

template <class R>
LaurentMatrix<R> to_laurent(const Matrix<R>& m) {
  LaurentMatrix<R> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = LaurentPoly<R>(m(i, j));
  return a;
}

/// m0 + z·m1.
template <class R>
LaurentMatrix<R> linear_pencil(const Matrix<R>& m0, const Matrix<R>& m1) {
  LaurentMatrix<R> a(m0.rows(), m0.cols());
  for (Eigen::Index i = 0; i < m0.rows(); ++i)
    for (Eigen::Index j = 0; j < m0.cols(); ++j)
      a(i, j) = LaurentPoly<R>(m0(i, j)) + LaurentPoly<R>::monomial(m1(i, j), 1);
  return a;
}

/// Coefficient matrix of z^d.
template <class R>
Matrix<R> coefficient(const LaurentMatrix<R>& m, long d) {
  Matrix<R> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).coeff(d);
  return a;
}

namespace detail {

template <class R>
LaurentPoly<R> cofactor_det(const LaurentMatrix<R>& m, Eigen::Index row, unsigned mask,
                            std::map<unsigned, LaurentPoly<R>>& memo) {
  const auto n = m.rows();
  if (row == n) return LaurentPoly<R>(R(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  LaurentPoly<R> acc;
  int parity = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (mask & (1u << j)) continue;
    if (!m(row, j).is_zero()) {
      LaurentPoly<R> term = m(row, j) * cofactor_det(m, row + 1, mask | (1u << j), memo);
      if (parity) acc -= term;
      else acc += term;
    }
    parity ^= 1;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

/// Determinant over the Laurent ring: cofactor expansion up to size 8,
/// fraction-free elimination beyond.
template <class R>
LaurentPoly<R> laurent_det(const LaurentMatrix<R>& m) {
  require_square(m, "laurent_det");
  if (m.rows() <= 8) {
    std::map<unsigned, LaurentPoly<R>> memo;
    return detail::cofactor_det<R>(m, 0, 0u, memo);
  }
  return determinant<LaurentPoly<R>>(m);
}

template <class R>
bool laurent_unit(const LaurentPoly<R>& p) {
  return p.is_unit();
}

/// p and q agree up to a unit c·z^m.
template <class R>
bool equal_up_to_unit(const LaurentPoly<R>& p, const LaurentPoly<R>& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  auto a = LaurentPoly<R>::divide(p, q);
  return a && a->is_unit();
}

// ---------------------------------------------------------------------------
// Localization R[z, 1/z, 1/(1-z)].

/// numerator / (z^a (1-z)^b). In canonical form the numerator has lowest
/// degree 0 and is prime to (1-z) unless b = 0; a may be negative.
template <class R>
class LocalizedElement {
public:
  LocalizedElement() = default;
  LocalizedElement(int c) : num_(R(c)) {}
  explicit LocalizedElement(const LaurentPoly<R>& p) : num_(p) { normalize(); }
  LocalizedElement(const LaurentPoly<R>& p, long a, long b) : num_(p), a_(a), b_(b) {
    check(b >= 0, ErrorKind::ParseError, "LocalizedElement: (1-z)-exponent must be >= 0");
    normalize();
  }

  static LocalizedElement s() { return LocalizedElement(LaurentPoly<R>(R(1)), 0, 1); }

  const LaurentPoly<R>& numerator() const { return num_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }

  LocalizedElement operator-() const { return LocalizedElement(-num_, a_, b_); }
  friend LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y) {
    const long a = std::max(x.a_, y.a_);
    const long b = std::max(x.b_, y.b_);
    return LocalizedElement(x.scaled(a, b) + y.scaled(a, b), a, b);
  }
  friend LocalizedElement operator-(const LocalizedElement& x, const LocalizedElement& y) {
    return x + (-y);
  }
  friend LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y) {
    return LocalizedElement(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
  }
  LocalizedElement& operator+=(const LocalizedElement& o) { return *this = *this + o; }
  LocalizedElement& operator-=(const LocalizedElement& o) { return *this = *this - o; }
  LocalizedElement& operator*=(const LocalizedElement& o) { return *this = *this * o; }

  /// Equality by cross-multiplication.
  friend bool operator==(const LocalizedElement& x, const LocalizedElement& y) {
    return x.num_ * one_minus_z_pow(y.b_) * LaurentPoly<R>::z(y.a_) ==
           y.num_ * one_minus_z_pow(x.b_) * LaurentPoly<R>::z(x.a_);
  }
  friend bool operator!=(const LocalizedElement& x, const LocalizedElement& y) {
    return !(x == y);
  }

  /// z -> 1/z. Uses 1 - 1/z = -(1/z)(1-z).
  LocalizedElement involute() const {
    LaurentPoly<R> n = num_.involute();
    if (b_ % 2) n = -n;
    return LocalizedElement(n, -a_ - b_, b_);
  }

  static LaurentPoly<R> one_minus_z_pow(long k) {
    LaurentPoly<R> p(R(1));
    const LaurentPoly<R> f = LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(1);
    for (long i = 0; i < k; ++i) p *= f;
    return p;
  }

  std::string to_string() const {
    std::string d;
    if (a_ != 0) d += "z^" + std::to_string(a_);
    if (b_ != 0) d += std::string(d.empty() ? "" : "*") + "(1 - z)^" + std::to_string(b_);
    if (d.empty()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + d + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const LocalizedElement& x) {
    return os << x.to_string();
  }

private:
  LaurentPoly<R> scaled(long a, long b) const {
    return (num_ * one_minus_z_pow(b - b_)).shift(a - a_);
  }
  void normalize() {
    if (num_.is_zero()) {
      a_ = b_ = 0;
      return;
    }
    const long m = num_.min_degree();
    num_ = num_.shift(-m);
    a_ -= m;
    const LaurentPoly<R> f = LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(1);
    while (b_ > 0 && knotalg::is_zero(num_.augment())) {
      num_ = RingTraits<LaurentPoly<R>>::exact_div(num_, f);
      --b_;
    }
  }

  LaurentPoly<R> num_;
  long a_ = 0;
  long b_ = 0;
};

/// t^{-k} · Σ_j c_j s^j with s = 1/(1-z), t = s(1-s). The polynomial in s is
/// stored as a LaurentPoly with nonnegative degrees.
template <class R>
class STElement {
public:
  STElement() = default;
  STElement(long k, const LaurentPoly<R>& poly) : k_(k), poly_(poly) {
    check(k >= 0 && (poly.is_zero() || poly.min_degree() >= 0), ErrorKind::ParseError,
          "STElement: need k >= 0 and a polynomial in s");
    normalize();
  }

  static LaurentPoly<R> t_poly() { return LaurentPoly<R>::z(1) - LaurentPoly<R>::z(2); }

  long k() const { return k_; }
  const LaurentPoly<R>& poly() const { return poly_; }

  friend STElement operator+(const STElement& x, const STElement& y) {
    const long k = std::max(x.k_, y.k_);
    return STElement(k, x.raised(k) + y.raised(k));
  }
  friend STElement operator*(const STElement& x, const STElement& y) {
    return STElement(x.k_ + y.k_, x.poly_ * y.poly_);
  }
  friend bool operator==(const STElement& x, const STElement& y) {
    const long k = std::max(x.k_, y.k_);
    return x.raised(k) == y.raised(k);
  }
  friend bool operator!=(const STElement& x, const STElement& y) { return !(x == y); }

  std::string to_string() const {
    std::string p = poly_.to_string("s");
    if (k_ == 0) return p;
    return "t^-" + std::to_string(k_) + "*(" + p + ")";
  }

private:
  LaurentPoly<R> raised(long k) const {
    LaurentPoly<R> p = poly_;
    for (long i = k_; i < k; ++i) p *= t_poly();
    return p;
  }
  void normalize() {
    if (poly_.is_zero()) {
      k_ = 0;
      return;
    }
    while (k_ > 0 && knotalg::is_zero(poly_.coeff(0)) && knotalg::is_zero(poly_.augment())) {
      poly_ = RingTraits<LaurentPoly<R>>::exact_div(poly_, t_poly());
      --k_;
    }
  }

  long k_ = 0;
  LaurentPoly<R> poly_;
};

/// z^m in the (s,t) coordinates: z = (s-1)/s = -(1-s)^2/t, 1/z = -s^2/t.
template <class R>
STElement<R> z_power_st(long m) {
  const long k = std::labs(m);
  LaurentPoly<R> base = m >= 0 ? LaurentPoly<R>(R(1)) - LaurentPoly<R>::z(1)
                               : LaurentPoly<R>::z(1);
  LaurentPoly<R> p(R(1));
  for (long i = 0; i < 2 * k; ++i) p *= base;
  if (k % 2) p = -p;
  return STElement<R>(k, p);
}

template <class R>
STElement<R> z_to_st(const LocalizedElement<R>& x) {
  STElement<R> acc;
  for (const auto& [d, c] : x.numerator().terms()) {
    acc = acc + STElement<R>(0, LaurentPoly<R>(c)) * z_power_st<R>(d - x.a());
  }
  return acc * STElement<R>(0, LaurentPoly<R>::z(x.b()));
}

template <class R>
LocalizedElement<R> st_to_z(const STElement<R>& x) {
  using L = LocalizedElement<R>;
  L acc;
  L spow(1);
  const L s = L::s();
  for (long j = 0; j <= x.poly().max_degree(); ++j) {
    const R c = x.poly().coeff(j);
    if (!knotalg::is_zero(c)) acc += L(LaurentPoly<R>(c)) * spow;
    spow *= s;
  }
  // 1/t = -(1-z)^2 / z
  const L tinv(-L::one_minus_z_pow(2), 1, 0);
  for (long i = 0; i < x.k(); ++i) acc *= tinv;
  return acc;
}

}  // namespace knotalg

namespace Eigen {
template <class R>
struct NumTraits<knotalg::LaurentPoly<R>> : GenericNumTraits<knotalg::LaurentPoly<R>> {
  typedef knotalg::LaurentPoly<R> Real;
  typedef knotalg::LaurentPoly<R> NonInteger;
  typedef knotalg::LaurentPoly<R> Nested;
  typedef knotalg::LaurentPoly<R> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <class R>
struct NumTraits<knotalg::LocalizedElement<R>> : GenericNumTraits<knotalg::LocalizedElement<R>> {
  typedef knotalg::LocalizedElement<R> Real;
  typedef knotalg::LocalizedElement<R> NonInteger;
  typedef knotalg::LocalizedElement<R> Nested;
  typedef knotalg::LocalizedElement<R> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
