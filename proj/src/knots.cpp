#include "knotalg/invariants.hpp"

namespace knotalg {

namespace {

KnotRecord make_record(const std::string& name, Eigen::Index n, std::initializer_list<long> entries) {
  KnotRecord r;
  r.name = name;
  r.seifert_matrix = zeros<Integer>(n, n);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) r.seifert_matrix(i, j) = Integer(*it++);
  const IntMatrix lam = r.seifert_matrix - Integer(r.eta) * r.seifert_matrix.transpose();
  ensure(RingTraits<Integer>::is_unit(determinant<Integer>(lam)),
         "knot table: " + name + " is not a nonsingular Seifert matrix");
  return r;
}

}  // namespace

const std::vector<KnotRecord>& knot_table() {
  static const std::vector<KnotRecord> table = {
      make_record("unknot", 0, {}),
      make_record("trefoil", 2, {-1, 1, 0, -1}),
      make_record("figure-eight", 2, {1, 1, 0, -1}),
  };
  return table;
}

const KnotRecord& find_knot(const std::string& name) {
  for (const auto& r : knot_table())
    if (r.name == name) return r;
  fail(ErrorKind::ParseError, "unknown knot '" + name + "'");
}

}  // namespace knotalg
