#include <doctest.h>

#include "knotalg/laurent.hpp"
#include "knotalg/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace knotalg;
using support::poly;
using Z = Integer;
using LP = LaurentPoly<Z>;
using L = LocalizedElement<Z>;
using ST = STElement<Z>;

namespace {

LP random_poly(gen::Rng& rng, long lo_deg, long hi_deg, long c = 3) {
  LP p;
  for (long d = lo_deg; d <= hi_deg; ++d) p += LP::monomial(Z(gen::uniform(rng, -c, c)), d);
  return p;
}

LaurentMatrix<Z> random_laurent_matrix(gen::Rng& rng, Eigen::Index n) {
  LaurentMatrix<Z> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = random_poly(rng, -2, 2, 2);
  return m;
}

const LP one_minus_z = poly({{0, 1}, {1, -1}});

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic examples") {
    CHECK(one_minus_z * one_minus_z.involute() == poly({{-1, -1}, {0, 2}, {1, -1}}));
    LaurentMatrix<Z> d(2, 2);
    d << LP(Z(1)), poly({{1, 1}, {0, -1}}), one_minus_z, LP::z(1);
    CHECK(laurent_det<Z>(d) == poly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK((one_minus_z * LP()).is_zero());
  }

  TEST_CASE("storage has no zero coefficients") {
    const LP p = poly({{0, 1}, {1, 2}}) + poly({{1, -2}});
    CHECK(p.terms().size() == 1);
    CHECK((p - p).terms().empty());
    CHECK(poly({{3, 0}}).is_zero());
  }

  TEST_CASE("to_string") {
    CHECK(poly({{2, 1}, {1, -1}, {0, 1}}).to_string() == "z^2 - z + 1");
    CHECK(poly({{-1, 2}, {0, -3}}).to_string() == "-3 + 2*z^-1");
    CHECK(LP().to_string() == "0");
  }

  TEST_CASE("augment examples") {
    LaurentMatrix<Z> a(1, 1);
    a(0, 0) = poly({{0, 2}, {1, -1}});
    CHECK(augment<Z>(a)(0, 0) == 1);
    for (long k : {-3L, 0L, 5L}) CHECK(LP::z(k).augment() == 1);
    LaurentMatrix<Z> d(2, 2);
    d << LP(Z(1)), poly({{1, 1}, {0, -1}}), one_minus_z, LP::z(1);
    CHECK(is_identity<Z>(augment<Z>(d)));
  }

  TEST_CASE("involute examples") {
    CHECK(one_minus_z.involute() == poly({{0, 1}, {-1, -1}}));
    CHECK(LP(Z(7)).involute() == LP(Z(7)));
    CHECK(poly({{-1, 2}, {2, 3}}).involute() == poly({{1, 2}, {-2, 3}}));
  }

  TEST_CASE("ring map and anti-automorphism properties") {
    gen::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
      const LP p = random_poly(rng, -3, 3);
      const LP q = random_poly(rng, -2, 4);
      REQUIRE((p * q).augment() == p.augment() * q.augment());
      REQUIRE((p + q).augment() == p.augment() + q.augment());
      REQUIRE((p * q).involute() == q.involute() * p.involute());
      REQUIRE(p.involute().involute() == p);
      REQUIRE((p * q).eval_minus_one() == p.eval_minus_one() * q.eval_minus_one());
    }
  }

  TEST_CASE("division") {
    gen::Rng rng(22);
    for (int i = 0; i < 200; ++i) {
      const LP a = random_poly(rng, -2, 2);
      LP b = random_poly(rng, 0, 2);
      if (b.is_zero()) continue;
      const auto q = LP::divide(a * b, b);
      REQUIRE(q);
      REQUIRE(*q == a);
    }
    CHECK_FALSE(LP::divide(LP(Z(1)), poly({{0, 2}, {1, -1}})).has_value());
    CHECK(LP::divide(LP(Z(1)), LP::z(3)) == LP::z(-3));
  }

  TEST_CASE("units") {
    CHECK(LP::z(4).is_unit());
    CHECK((-LP::z(-2)).is_unit());
    CHECK_FALSE(LP::monomial(Z(2), 1).is_unit());
    CHECK_FALSE(one_minus_z.is_unit());
    CHECK(equal_up_to_unit(poly({{0, 2}, {1, -1}}), poly({{5, -2}, {6, 1}})));
    CHECK_FALSE(equal_up_to_unit(poly({{0, 2}, {1, -1}}), poly({{0, 2}, {1, 1}})));
  }

  TEST_CASE("determinant is multiplicative") {
    gen::Rng rng(23);
    for (int i = 0; i < 30; ++i) {
      const auto m = random_laurent_matrix(rng, 3);
      const auto n = random_laurent_matrix(rng, 3);
      LaurentMatrix<Z> mn = mul<LP>(m, n);
      REQUIRE(laurent_det<Z>(mn) == laurent_det<Z>(m) * laurent_det<Z>(n));
    }
  }

  TEST_CASE("determinant matches polynomial oracle") {
    gen::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
      const auto n = static_cast<Eigen::Index>(gen::uniform(rng, 0, 4));
      const IntMatrix a = gen::random_matrix(rng, n, n, -3, 3);
      const IntMatrix b = gen::random_matrix(rng, n, n, -3, 3);
      REQUIRE(oracle::matches(laurent_det<Z>(linear_pencil<Z>(a, b)), oracle::pencil_det(a, b)));
    }
  }

  TEST_CASE("large determinants use elimination") {
    gen::Rng rng(25);
    const auto m = random_laurent_matrix(rng, 9);
    const auto u = to_laurent<Z>(gen::random_unimodular(rng, 9, 10).u);
    LaurentMatrix<Z> mu = mul<LP>(m, u);
    CHECK(equal_up_to_unit(laurent_det<Z>(mu), laurent_det<Z>(m)));
  }

  TEST_CASE("degree cap") {
    set_degree_cap(10);
    CHECK_THROWS_AS(LP::z(11), Error);
    try {
      (void)(LP::z(6) * LP::z(6));
      FAIL("expected ResourceLimit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    set_degree_cap(512);
  }

  TEST_CASE("localized examples") {
    const L s = L::s();
    const L minus_z_s(poly({{1, -1}}), 0, 1);
    CHECK(s + minus_z_s == L(1));
    const L t = s * minus_z_s;
    CHECK(t == L(poly({{1, -1}}), 0, 2));
    CHECK(t == s * (L(1) - s));
    const L n(poly({{1, 1}}) * one_minus_z, 2, 2);
    CHECK(n.a() == 1);
    CHECK(n.b() == 1);
    CHECK(n.numerator() == LP(Z(1)));
    CHECK(n == L(LP(Z(1)), 1, 1));
  }

  TEST_CASE("localized canonical form") {
    const L z(LP::z(1));
    CHECK(z.a() == -1);
    CHECK(z.numerator() == LP(Z(1)));
    const L x(one_minus_z * one_minus_z, 0, 1);
    CHECK(x.b() == 0);
    CHECK(x.numerator() == one_minus_z);
    CHECK(L(LP(), 4, 4).is_zero());
    CHECK_THROWS_AS(L(LP(Z(1)), 0, -1), Error);
  }

  TEST_CASE("localized arithmetic is a commutative ring with involution") {
    gen::Rng rng(26);
    auto rand_el = [&] {
      return L(random_poly(rng, -1, 2, 2), gen::uniform(rng, -1, 2), gen::uniform(rng, 0, 2));
    };
    for (int i = 0; i < 200; ++i) {
      const L x = rand_el(), y = rand_el(), w = rand_el();
      REQUIRE(x * (y + w) == x * y + x * w);
      REQUIRE(x * y == y * x);
      REQUIRE((x * y).involute() == x.involute() * y.involute());
      REQUIRE(x.involute().involute() == x);
      REQUIRE(x - x == L(0));
    }
  }

  TEST_CASE("s and t coordinates") {
    const ST s(0, LP::z(1));
    CHECK(z_to_st<Z>(L::s()) == s);
    const L t(poly({{1, -1}}), 0, 2);
    const ST t_st = z_to_st<Z>(t);
    CHECK(t_st == ST(0, poly({{1, 1}, {2, -1}})));
    CHECK(st_to_z<Z>(ST(0, poly({{1, 1}, {0, -1}}))) == L(LP::z(1), 0, 1));
    CHECK(st_to_z<Z>(ST(1, LP(Z(1)))) == L(-one_minus_z * one_minus_z, 1, 0));
  }

  TEST_CASE("s/t round trip") {
    gen::Rng rng(27);
    for (int i = 0; i < 500; ++i) {
      const L x(random_poly(rng, -2, 2, 3), gen::uniform(rng, -2, 3), gen::uniform(rng, 0, 3));
      REQUIRE(st_to_z<Z>(z_to_st<Z>(x)) == x);
    }
  }

  TEST_CASE("laurent over prime fields") {
    ModP::Modulus guard(3);
    using LPp = LaurentPoly<ModP>;
    const LPp p = support::poly<ModP>({{0, 1}, {1, 1}});
    CHECK((p * p * p) == support::poly<ModP>({{0, 1}, {3, 1}}));
    CHECK(LPp::monomial(ModP(2), 5).is_unit());
  }
}
