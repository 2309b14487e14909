#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotalg/errors.hpp"
#include "knotalg/scalar.hpp"

namespace knotalg {

template <class R>
using Matrix = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
template <class R>
using Vector = Eigen::Matrix<R, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;

template <class R>
Matrix<R> identity(Eigen::Index n) {
  return Matrix<R>::Identity(n, n);
}

template <class R>
Matrix<R> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<R>::Zero(rows, cols);
}

inline std::string shape_str(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  check(m.rows() == m.cols(), ErrorKind::NotSquare,
        std::string(what) + ": matrix is " + shape_str(m.rows(), m.cols()));
}

template <class R>
bool equal(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class R>
bool is_zero_matrix(const Matrix<R>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class R>
bool is_identity(const Matrix<R>& a) {
  return a.rows() == a.cols() && equal<R>(a, identity<R>(a.rows()));
}

// Shape-checked arithmetic.
template <class R>
Matrix<R> add(const Matrix<R>& a, const Matrix<R>& b) {
  check(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::ShapeMismatch,
        "add: " + shape_str(a.rows(), a.cols()) + " vs " + shape_str(b.rows(), b.cols()));
  return a + b;
}

template <class R>
Matrix<R> sub(const Matrix<R>& a, const Matrix<R>& b) {
  check(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::ShapeMismatch,
        "sub: " + shape_str(a.rows(), a.cols()) + " vs " + shape_str(b.rows(), b.cols()));
  return a - b;
}

template <class R>
Matrix<R> mul(const Matrix<R>& a, const Matrix<R>& b) {
  check(a.cols() == b.rows(), ErrorKind::ShapeMismatch,
        "mul: " + shape_str(a.rows(), a.cols()) + " * " + shape_str(b.rows(), b.cols()));
  if (a.cols() == 0) return zeros<R>(a.rows(), b.cols());
  return a * b;
}

template <class R>
Matrix<R> neg(const Matrix<R>& a) {
  return -a;
}

/// Dual of a morphism: entrywise involution followed by transpose.
template <class R>
Matrix<R> transpose_conjugate(const Matrix<R>& a) {
  return a.transpose().unaryExpr([](const R& x) { return RingTraits<R>::conj(x); });
}

template <class R>
Matrix<R> power(const Matrix<R>& m, long k) {
  require_square(m, "power");
  Matrix<R> result = identity<R>(m.rows());
  Matrix<R> base = m;
  while (k > 0) {
    if (k & 1) result = mul<R>(result, base);
    k >>= 1;
    if (k) base = mul<R>(base, base);
  }
  return result;
}

template <class R>
Matrix<R> block_diag(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m = zeros<R>(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

template <class R>
Matrix<R> block2x2(const Matrix<R>& a, const Matrix<R>& b, const Matrix<R>& c,
                   const Matrix<R>& d) {
  check(a.rows() == b.rows() && c.rows() == d.rows() && a.cols() == c.cols() &&
            b.cols() == d.cols(),
        ErrorKind::ShapeMismatch, "block2x2: incompatible blocks");
  Matrix<R> m(a.rows() + c.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.topRightCorner(b.rows(), b.cols()) = b;
  m.bottomLeftCorner(c.rows(), c.cols()) = c;
  m.bottomRightCorner(d.rows(), d.cols()) = d;
  return m;
}

/// vec(A X B) = kron(B^T, A) vec(X), with column-major vec.
template <class R>
Matrix<R> kron(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return m;
}

template <class R>
Vector<R> vec(const Matrix<R>& a) {
  Vector<R> v(a.size());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) v(j * a.rows() + i) = a(i, j);
  return v;
}

template <class R>
Matrix<R> unvec(const Vector<R>& v, Eigen::Index rows, Eigen::Index cols) {
  Matrix<R> a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = v(j * rows + i);
  return a;
}

/// Integer polynomial in ascending powers.
using IntPoly = std::vector<Integer>;

/// Horner evaluation of an integer polynomial at a square matrix.
template <class R>
Matrix<R> poly_eval(const IntPoly& c, const Matrix<R>& m) {
  require_square(m, "poly_eval");
  const auto n = m.rows();
  Matrix<R> acc = zeros<R>(n, n);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul<R>(acc, m);
    const R coeff = lift<R>(*it);
    for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += coeff;
  }
  return acc;
}

/// Determinant by Bareiss fraction-free elimination (integral domains) or
/// Gaussian elimination (fields).
template <class R>
R determinant(const Matrix<R>& m) {
  require_square(m, "determinant");
  const auto n = m.rows();
  if (n == 0) return R(1);
  Matrix<R> a = m;
  R sign(1);
  if constexpr (RingTraits<R>::is_field) {
    R det(1);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index piv = k;
      while (piv < n && is_zero(a(piv, k))) ++piv;
      if (piv == n) return R(0);
      if (piv != k) {
        a.row(k).swap(a.row(piv));
        sign = -sign;
      }
      det *= a(k, k);
      const R inv = R(1) / a(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (is_zero(a(i, k))) continue;
        const R f = a(i, k) * inv;
        for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    return sign * det;
  } else {
    R prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (is_zero(a(k, k))) {
        Eigen::Index piv = k + 1;
        while (piv < n && is_zero(a(piv, k))) ++piv;
        if (piv == n) return R(0);
        a.row(k).swap(a.row(piv));
        sign = -sign;
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          a(i, j) = RingTraits<R>::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        a(i, k) = R(0);
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }
}

/// Column Hermite normal form A·U = H over a Euclidean domain (column echelon
/// form over a field). U is unimodular; the first `rank` columns of H are
/// nonzero, the rest vanish.
template <class R>
class HermiteSolver {
public:
  explicit HermiteSolver(const Matrix<R>& a) : h_(a), u_(identity<R>(a.cols())) {
    using RT = RingTraits<R>;
    const auto m = h_.rows();
    const auto n = h_.cols();
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < m && r < n; ++i) {
      for (;;) {
        Eigen::Index best = -1;
        for (Eigen::Index j = r; j < n; ++j) {
          if (is_zero(h_(i, j))) continue;
          if (best < 0 || RT::size(h_(i, j)) < RT::size(h_(i, best))) best = j;
        }
        if (best < 0) break;
        if (best != r) swap_cols(r, best);
        bool done = true;
        for (Eigen::Index j = r + 1; j < n; ++j) {
          if (is_zero(h_(i, j))) continue;
          add_col(j, r, -RT::divmod(h_(i, j), h_(i, r)).first);
          if (!is_zero(h_(i, j))) done = false;
        }
        if (done) break;
      }
      if (is_zero(h_(i, r))) continue;
      const R unit = RT::normalizer(h_(i, r));
      if (unit != R(1)) {
        h_.col(r) *= unit;
        u_.col(r) *= unit;
      }
      for (Eigen::Index j = 0; j < r; ++j) {
        if (is_zero(h_(i, j))) continue;
        add_col(j, r, -RT::divmod(h_(i, j), h_(i, r)).first);
      }
      pivots_.push_back(i);
      ++r;
    }
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }
  const Matrix<R>& hermite() const { return h_; }
  const Matrix<R>& transform() const { return u_; }
  const std::vector<Eigen::Index>& pivot_rows() const { return pivots_; }

  /// One solution X of A·X = B, or nullopt if none exists over R.
  std::optional<Matrix<R>> solve(const Matrix<R>& b) const {
    check(b.rows() == h_.rows(), ErrorKind::ShapeMismatch,
          "solve_linear: rhs has " + std::to_string(b.rows()) + " rows, expected " +
              std::to_string(h_.rows()));
    const auto r = rank();
    Matrix<R> y = zeros<R>(h_.cols(), b.cols());
    for (Eigen::Index col = 0; col < b.cols(); ++col) {
      for (Eigen::Index c = 0; c < r; ++c) {
        const auto i = pivots_[c];
        R s = b(i, col);
        for (Eigen::Index j = 0; j < c; ++j)
          if (!is_zero(h_(i, j))) s -= h_(i, j) * y(j, col);
        if (!RingTraits<R>::divides(h_(i, c), s)) return std::nullopt;
        y(c, col) = RingTraits<R>::exact_div(s, h_(i, c));
      }
    }
    if (!equal<R>(mul<R>(h_.leftCols(r), y.topRows(r)), b)) return std::nullopt;
    return mul<R>(u_, y);
  }

private:
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    h_.col(a).swap(h_.col(b));
    u_.col(a).swap(u_.col(b));
  }
  void add_col(Eigen::Index dst, Eigen::Index src, const R& f) {
    h_.col(dst) += f * h_.col(src);
    u_.col(dst) += f * u_.col(src);
  }

  Matrix<R> h_;
  Matrix<R> u_;
  std::vector<Eigen::Index> pivots_;
};

/// Solves coeffs·X = rhs over the ring.
template <class R>
std::optional<Matrix<R>> solve_linear(const Matrix<R>& coeffs, const Matrix<R>& rhs) {
  check(coeffs.rows() == rhs.rows(), ErrorKind::ShapeMismatch,
        "solve_linear: " + shape_str(coeffs.rows(), coeffs.cols()) + " vs rhs " +
            shape_str(rhs.rows(), rhs.cols()));
  return HermiteSolver<R>(coeffs).solve(rhs);
}

/// Solves X·coeffs = rhs over the ring.
template <class R>
std::optional<Matrix<R>> solve_left(const Matrix<R>& coeffs, const Matrix<R>& rhs) {
  check(coeffs.cols() == rhs.cols(), ErrorKind::ShapeMismatch,
        "solve_left: " + shape_str(coeffs.rows(), coeffs.cols()) + " vs rhs " +
            shape_str(rhs.rows(), rhs.cols()));
  auto x = solve_linear<R>(coeffs.transpose(), rhs.transpose());
  if (!x) return std::nullopt;
  return Matrix<R>(x->transpose());
}

template <class R>
bool is_invertible(const Matrix<R>& m) {
  return m.rows() == m.cols() && RingTraits<R>::is_unit(determinant<R>(m));
}

template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  require_square(m, "inverse");
  check(RingTraits<R>::is_unit(determinant<R>(m)), ErrorKind::NotInvertible,
        "inverse: determinant is not a unit");
  auto x = solve_linear<R>(m, identity<R>(m.rows()));
  ensure(x.has_value(), "inverse: unimodular system has no solution");
  return *x;
}

/// Least k <= n with m^k = 0.
template <class R>
std::optional<int> is_nilpotent(const Matrix<R>& m) {
  require_square(m, "is_nilpotent");
  const auto n = m.rows();
  Matrix<R> p = identity<R>(n);
  for (Eigen::Index k = 0; k <= n; ++k) {
    if (is_zero_matrix<R>(p)) return static_cast<int>(k);
    p = mul<R>(p, m);
  }
  return std::nullopt;
}

template <class R>
struct IdempotentSplit {
  Matrix<R> projector;
  Matrix<R> image_basis;
  Matrix<R> section;
  Eigen::Index rank() const { return image_basis.cols(); }
};

/// Basis of im(p) as a free direct summand, with section·basis = 1.
template <class R>
IdempotentSplit<R> split_idempotent(const Matrix<R>& p) {
  require_square(p, "split_idempotent");
  check(equal<R>(mul<R>(p, p), p), ErrorKind::NotIdempotent, "split_idempotent: p^2 != p");
  HermiteSolver<R> hnf(p);
  IdempotentSplit<R> s;
  s.projector = p;
  s.image_basis = hnf.hermite().leftCols(hnf.rank());
  auto sec = HermiteSolver<R>(s.image_basis).solve(p);
  ensure(sec.has_value(), "split_idempotent: image basis does not span im(p)");
  s.section = *sec;
  ensure(equal<R>(mul<R>(s.image_basis, s.section), p), "split_idempotent: basis*section != p");
  ensure(is_identity<R>(mul<R>(s.section, s.image_basis)),
         "split_idempotent: section*basis != 1");
  return s;
}

/// Restriction of an endomorphism commuting with the projector to its image.
template <class R>
Matrix<R> restrict_to(const IdempotentSplit<R>& s, const Matrix<R>& e) {
  return mul<R>(mul<R>(s.section, e), s.image_basis);
}

}  // namespace knotalg
