#include <doctest.h>

#include "knotalg/random.hpp"
#include "knotalg/seifert.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace knotalg;
using support::mat;
using Z = Integer;
using M = SeifertModule<Z>;

namespace {

const M trefoil_module(mat({{0, 1}, {-1, 1}}));

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("make_morphism examples") {
    const M m(mat({{2, 1}, {0, -1}}));
    CHECK_NOTHROW(make_morphism<Z>(m, m, m.e));
    const M m2(mat({{0, 0}, {1, 0}}));
    try {
      make_morphism<Z>(m, m2, identity<Z>(2));
      FAIL("expected NotIntertwining");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIntertwining);
    }
    CHECK_NOTHROW(make_morphism<Z>(trefoil_module, trefoil_module,
                                   IntMatrix(identity<Z>(2) - trefoil_module.e)));
    CHECK_THROWS_AS(make_morphism<Z>(m, m, identity<Z>(3)), Error);
  }

  TEST_CASE("e and 1-e are endomorphisms") {
    gen::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
      const auto n = static_cast<Eigen::Index>(gen::uniform(rng, 0, 4));
      const M m(gen::random_matrix(rng, n, n, -3, 3));
      REQUIRE(intertwines(m, m, m.e));
      REQUIRE(intertwines(m, m, IntMatrix(identity<Z>(n) - m.e)));
    }
  }

  TEST_CASE("dual examples") {
    CHECK(dual_module(M(zeros<Z>(2, 2))) == M(identity<Z>(2)));
    CHECK(equal<Z>(dual_module(trefoil_module).e, mat({{1, 1}, {-1, 0}})));
    const auto id = make_morphism<Z>(trefoil_module, trefoil_module, identity<Z>(2));
    CHECK(is_identity<Z>(dual_morphism(id).g));
  }

  TEST_CASE("dual properties") {
    gen::Rng rng(32);
    for (int i = 0; i < 100; ++i) {
      const auto n = static_cast<Eigen::Index>(gen::uniform(rng, 0, 4));
      const M m(gen::random_matrix(rng, n, n, -3, 3));
      REQUIRE(dual_module(dual_module(m)) == m);
      const auto g = make_morphism<Z>(m, m, IntMatrix(m.e * m.e - Z(2) * m.e));
      const auto h = make_morphism<Z>(m, m, IntMatrix(identity<Z>(n) - m.e));
      const auto gh = make_morphism<Z>(m, m, mul<Z>(g.g, h.g));
      const auto dg = dual_morphism(g), dh = dual_morphism(h);
      REQUIRE(equal<Z>(dual_morphism(gh).g, mul<Z>(dh.g, dg.g)));
      REQUIRE(intertwines(dual_module(m), dual_module(m), dg.g));
    }
  }

  TEST_CASE("is_near_projection examples") {
    CHECK(is_near_projection(M(mat({{0, 1}, {0, 0}}))) == 2);
    CHECK(is_near_projection(M(mat({{1, 0}, {0, 0}}))) == 1);
    CHECK_FALSE(is_near_projection(trefoil_module).has_value());
    CHECK(is_near_projection(M::zero()).has_value());
  }

  TEST_CASE("near-projections are exactly the modules with trivial covering") {
    gen::Rng rng(33);
    int near = 0;
    for (int i = 0; i < 500; ++i) {
      const auto n = static_cast<Eigen::Index>(gen::uniform(rng, 0, 4));
      IntMatrix e = gen::random_matrix(rng, n, n, -2, 2);
      if (i % 2) {
        for (Eigen::Index r = 0; r < n; ++r)
          for (Eigen::Index s = 0; s < r; ++s) e(r, s) = Z(0);
        for (Eigen::Index r = 0; r < n; ++r) e(r, r) = Z(gen::uniform(rng, 0, 1));
      }
      const M m(e);
      const bool np = is_near_projection(m).has_value();
      const IntMatrix id = IntMatrix::Identity(n, n);
      REQUIRE(np == oracle::is_unit_monomial(oracle::pencil_det(IntMatrix(id - e), e)));
      REQUIRE(np == laurent_det<Z>(covering_matrix<Z>(m)).is_unit());
      near += np;
    }
    CHECK(near > 100);
  }

  TEST_CASE("split examples") {
    const auto s0 = split_near_projection(M(zeros<Z>(3, 3)));
    CHECK(s0.plus.rank() == 0);
    CHECK(s0.minus.rank() == 3);
    const auto s1 = split_near_projection(M(identity<Z>(2)));
    CHECK(s1.plus.rank() == 2);
    CHECK(s1.minus.rank() == 0);
    const auto s2 = split_near_projection(M(mat({{1, 0}, {0, 0}})));
    CHECK(s2.plus.rank() == 1);
    CHECK(s2.minus.rank() == 1);
    CHECK(equal<Z>(s2.projector, mat({{1, 0}, {0, 0}})));
    try {
      split_near_projection(trefoil_module);
      FAIL("expected NotNearProjection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNearProjection);
    }
  }

  TEST_CASE("pi_k closed form") {
    for (int k = 1; k <= 8; ++k) {
      const IntPoly pk = pi_k(k);
      for (long x = -3; x <= 3; ++x) {
        Z xk(1), yk(1);
        for (int i = 0; i < k; ++i) {
          xk *= x;
          yk *= 1 - x;
        }
        Z val(0), pw(1);
        for (const auto& c : pk) {
          val += c * pw;
          pw *= x;
        }
        REQUIRE(xk + yk == 1 + Z(x * (1 - x)) * val);
      }
    }
  }

  TEST_CASE("split properties on random near-projections") {
    gen::Rng rng(34);
    for (int i = 0; i < 200; ++i) {
      const auto n = static_cast<Eigen::Index>(gen::uniform(rng, 1, 5));
      IntMatrix e = zeros<Z>(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        e(r, r) = Z(gen::uniform(rng, 0, 1));
        for (Eigen::Index s = r + 1; s < n; ++s) e(r, s) = Z(gen::uniform(rng, -2, 2));
      }
      const auto u = gen::random_unimodular(rng, n);
      const M m(IntMatrix(u.u * e * u.inv));
      const auto sp = split_near_projection(m);
      const IntMatrix& p = sp.projector;
      REQUIRE(p * p == p);
      REQUIRE(p * m.e == m.e * p);
      REQUIRE(sp.plus.rank() + sp.minus.rank() == n);
      const IntMatrix ip = IntMatrix::Identity(sp.plus.rank(), sp.plus.rank());
      REQUIRE(power<Z>(IntMatrix(ip - sp.plus.e), sp.k).isZero());
      REQUIRE(power<Z>(sp.minus.e, sp.k).isZero());
      long ones = 0;
      for (Eigen::Index r = 0; r < n; ++r) ones += e(r, r) == 1;
      REQUIRE(sp.plus.rank() == ones);
    }
  }

  TEST_CASE("direct sum examples") {
    CHECK(direct_sum(trefoil_module, M::zero()) == trefoil_module);
    CHECK(direct_sum(M(mat({{0}})), M(mat({{1}}))) == M(mat({{0, 0}, {0, 1}})));
    const M tt = direct_sum(trefoil_module, trefoil_module);
    CHECK(tt.rank() == 4);
    CHECK(equal<Z>(tt.e, block_diag<Z>(trefoil_module.e, trefoil_module.e)));
  }

  TEST_CASE("covering matrix") {
    CHECK(laurent_det<Z>(covering_matrix<Z>(M(mat({{0}})))) == LaurentPoly<Z>(Z(1)));
    CHECK(covering_matrix<Z>(M(mat({{-1}})))(0, 0) == support::poly({{0, 2}, {1, -1}}));
    const auto c = covering_matrix<Z>(trefoil_module);
    CHECK(c(0, 0) == LaurentPoly<Z>(Z(1)));
    CHECK(c(0, 1) == support::poly({{0, -1}, {1, 1}}));
    CHECK(c(1, 0) == support::poly({{0, 1}, {1, -1}}));
    CHECK(c(1, 1) == LaurentPoly<Z>::z(1));
  }
}
