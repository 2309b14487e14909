#pragma once

#include <json.hpp>

#include <string>

#include "knotalg/blanchfield.hpp"
#include "knotalg/errors.hpp"
#include "knotalg/forms.hpp"
#include "knotalg/invariants.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/linalg.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg::io {

using json = nlohmann::json;

json error_object(ErrorKind kind, const std::string& message);
json parse_text(const std::string& text);
json read_file(const std::string& path);
std::string dump(const json& j);

/// Throws ParseError unless j[key] exists.
const json& field(const json& j, const char* key);
long as_long(const json& j, const char* what);
int as_eta(const json& j);

template <class R>
json to_json(const R& x) {
  return RingTraits<R>::str(x);
}

template <class R>
R scalar_from_json(const json& j) {
  if (j.is_string()) return RingTraits<R>::parse(j.get<std::string>());
  if (j.is_number_integer()) return RingTraits<R>::parse(std::to_string(j.get<long long>()));
  fail(ErrorKind::ParseError, "expected a decimal string, got " + j.dump());
}

template <class R>
json to_json(const Matrix<R>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json<R>(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class T, class F>
Matrix<T> matrix_from_json_with(const json& j, F&& entry) {
  check(j.is_object(), ErrorKind::ParseError, "matrix must be an object");
  const long rows = as_long(field(j, "rows"), "rows");
  const long cols = as_long(field(j, "cols"), "cols");
  check(rows >= 0 && cols >= 0, ErrorKind::ParseError, "matrix shape must be non-negative");
  const json& e = field(j, "entries");
  check(e.is_array() && static_cast<long>(e.size()) == rows, ErrorKind::ShapeMismatch,
        "matrix entries do not have " + std::to_string(rows) + " rows");
  Matrix<T> m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    check(e[i].is_array() && static_cast<long>(e[i].size()) == cols, ErrorKind::ShapeMismatch,
          "matrix row " + std::to_string(i) + " does not have " + std::to_string(cols) +
              " entries");
    for (long c = 0; c < cols; ++c) m(i, c) = entry(e[i][c]);
  }
  return m;
}

template <class R>
Matrix<R> matrix_from_json(const json& j) {
  return matrix_from_json_with<R>(j, [](const json& x) { return scalar_from_json<R>(x); });
}

template <class R>
json to_json(const LaurentPoly<R>& p) {
  json c = json::array();
  for (const auto& [d, v] : p.terms()) c.push_back(json::array({d, to_json<R>(v)}));
  return {{"coeffs", c}};
}

template <class R>
LaurentPoly<R> laurent_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return LaurentPoly<R>(scalar_from_json<R>(j));
  check(j.is_object(), ErrorKind::ParseError, "Laurent polynomial must be an object");
  const json& c = field(j, "coeffs");
  check(c.is_array(), ErrorKind::ParseError, "coeffs must be an array");
  LaurentPoly<R> p;
  for (const auto& term : c) {
    check(term.is_array() && term.size() == 2, ErrorKind::ParseError,
          "coefficient entries are [degree, \"value\"] pairs");
    p += LaurentPoly<R>::monomial(scalar_from_json<R>(term[1]), as_long(term[0], "degree"));
  }
  return p;
}

template <class R>
json to_json(const LaurentMatrix<R>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json<R>(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class R>
LaurentMatrix<R> laurent_matrix_from_json(const json& j) {
  return matrix_from_json_with<LaurentPoly<R>>(
      j, [](const json& x) { return laurent_from_json<R>(x); });
}

template <class R>
json to_json(const SeifertModule<R>& m) {
  return {{"rank", m.rank()}, {"e", to_json<R>(m.e)}};
}

template <class R>
SeifertModule<R> module_from_json(const json& j) {
  Matrix<R> e = matrix_from_json<R>(field(j, "e"));
  require_square(e, "module");
  if (j.contains("rank"))
    check(as_long(j["rank"], "rank") == e.rows(), ErrorKind::ShapeMismatch,
          "module rank does not match e");
  return SeifertModule<R>(e);
}

template <class R>
json to_json(const SeifertForm<R>& f) {
  return {{"eta", f.eta}, {"theta", to_json<R>(f.theta)}, {"e", to_json<R>(f.module.e)}};
}

/// Reads {"eta", "theta", "e"?}; e is derived when omitted.
template <class R>
SeifertForm<R> form_from_json(const json& j, int default_eta = 1) {
  check(j.is_object(), ErrorKind::ParseError, "form must be an object");
  const int eta = j.contains("eta") ? as_eta(j["eta"]) : default_eta;
  const Matrix<R> theta = matrix_from_json<R>(field(j, "theta"));
  if (j.contains("e") && !j["e"].is_null())
    return make_seifert_form<R>(theta, matrix_from_json<R>(j["e"]), eta);
  return make_seifert_form<R>(theta, eta);
}

template <class R>
json to_json(const BlanchfieldPresentation<R>& p) {
  return {{"d", to_json<R>(p.d)}};
}

template <class R>
BlanchfieldPresentation<R> presentation_from_json(const json& j) {
  return make_presentation<R>(laurent_matrix_from_json<R>(field(j, "d")));
}

template <class R>
json to_json(const BlanchfieldForm<R>& b) {
  return {{"eta", b.eta}, {"e", to_json<R>(b.module.e)}, {"g_phi", to_json<R>(b.g_phi)},
          {"k", b.k}};
}

template <class R>
BlanchfieldForm<R> blanchfield_form_from_json(const json& j, int default_eta = 1) {
  check(j.is_object(), ErrorKind::ParseError, "Blanchfield form must be an object");
  const int eta = j.contains("eta") ? as_eta(j["eta"]) : default_eta;
  const Matrix<R> e = matrix_from_json<R>(field(j, "e"));
  require_square(e, "Blanchfield form");
  return make_blanchfield_form<R>(SeifertModule<R>(e), matrix_from_json<R>(field(j, "g_phi")),
                                  as_long(field(j, "k"), "k"), eta);
}

template <class R>
json to_json(const BlanchfieldMorphism<R>& f) {
  return {{"source", to_json<R>(f.source)},
          {"target", to_json<R>(f.target)},
          {"g", to_json<R>(f.g)},
          {"k", f.k}};
}

template <class R>
BlanchfieldMorphism<R> morphism_from_json(const json& j) {
  return make_blanchfield_morphism<R>(module_from_json<R>(field(j, "source")),
                                      module_from_json<R>(field(j, "target")),
                                      matrix_from_json<R>(field(j, "g")),
                                      as_long(field(j, "k"), "k"));
}

template <class R>
json to_json(const InvariantReport<R>& r) {
  return {{"alexander", to_json<R>(r.alexander)},
          {"alexander_text", r.alexander.to_string()},
          {"alexander_at_one", to_json<R>(r.alexander_at_one)},
          {"signature", r.signature ? json(*r.signature) : json(nullptr)},
          {"determinant", to_json<R>(r.determinant)},
          {"rank", r.rank},
          {"eta", r.eta}};
}

template <class R>
InvariantReport<R> report_from_json(const json& j) {
  InvariantReport<R> r;
  r.alexander = laurent_from_json<R>(field(j, "alexander"));
  r.alexander_at_one = scalar_from_json<R>(field(j, "alexander_at_one"));
  const json& sig = field(j, "signature");
  if (!sig.is_null()) r.signature = as_long(sig, "signature");
  r.determinant = scalar_from_json<R>(field(j, "determinant"));
  r.rank = as_long(field(j, "rank"), "rank");
  r.eta = as_eta(field(j, "eta"));
  return r;
}

template <class R>
json to_json(const LocalizedElement<R>& x) {
  return {{"numerator", to_json<R>(x.numerator())}, {"a", x.a()}, {"b", x.b()}};
}

template <class R>
LocalizedElement<R> localized_from_json(const json& j) {
  return LocalizedElement<R>(laurent_from_json<R>(field(j, "numerator")),
                             as_long(field(j, "a"), "a"), as_long(field(j, "b"), "b"));
}

template <class R>
json to_json(const LocalizedForm<R>& f) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < f.rank(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < f.rank(); ++j) row.push_back(to_json<R>(f.matrix(i, j)));
    rows.push_back(row);
  }
  return {{"eta", f.eta},
          {"matrix", {{"rows", f.rank()}, {"cols", f.rank()}, {"entries", rows}}}};
}

}  // namespace knotalg::io
