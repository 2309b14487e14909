#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"

namespace support {

template <class R = knotalg::Integer>
knotalg::Matrix<R> mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  knotalg::Matrix<R> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = knotalg::lift<R>(knotalg::Integer(v));
    ++i;
  }
  return m;
}

/// {{degree, coefficient}, ...}
template <class R = knotalg::Integer>
knotalg::LaurentPoly<R> poly(std::initializer_list<std::pair<long, long>> terms) {
  knotalg::LaurentPoly<R> p;
  for (const auto& [d, c] : terms)
    p += knotalg::LaurentPoly<R>::monomial(knotalg::lift<R>(knotalg::Integer(c)), d);
  return p;
}

inline const knotalg::IntMatrix& trefoil() {
  static const knotalg::IntMatrix t = mat({{-1, 1}, {0, -1}});
  return t;
}

inline const knotalg::IntMatrix& figure_eight() {
  static const knotalg::IntMatrix t = mat({{1, 1}, {0, -1}});
  return t;
}

}  // namespace support
