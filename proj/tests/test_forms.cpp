#include <doctest.h>

#include "knotalg/forms.hpp"
#include "knotalg/invariants.hpp"
#include "knotalg/random.hpp"
#include "support.hpp"

using namespace knotalg;
using support::mat;
using support::poly;
using Z = Integer;
using M = SeifertModule<Z>;
using F = SeifertForm<Z>;
using LP = LaurentPoly<Z>;
using L = LocalizedElement<Z>;

namespace {

F trefoil_form() { return make_seifert_form<Z>(support::trefoil(), 1); }
F figure_eight_form() { return make_seifert_form<Z>(support::figure_eight(), 1); }

F padded(const F& f, const IntMatrix& e_pad) {
  return direct_sum(f, F{M(e_pad), zeros<Z>(e_pad.rows(), e_pad.rows()), f.eta});
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("make_seifert_form examples") {
    CHECK(equal<Z>(trefoil_form().e(), mat({{0, 1}, {-1, 1}})));
    CHECK(equal<Z>(figure_eight_form().e(), mat({{0, 1}, {1, 1}})));
    CHECK(equal<Z>(make_seifert_form<Z>(mat({{0, 1}, {0, 0}}), 1).e(), mat({{0, 0}, {0, 1}})));
    try {
      make_seifert_form<Z>(mat({{1, 0}, {0, 1}}), 1);
      FAIL("expected SingularForm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularForm);
    }
    CHECK_THROWS_AS(make_seifert_form<Z>(support::trefoil(), 2), Error);
  }

  TEST_CASE("explicit e must satisfy theta = lambda e") {
    CHECK_NOTHROW(make_seifert_form<Z>(support::trefoil(), mat({{0, 1}, {-1, 1}}), 1));
    CHECK_THROWS_AS(make_seifert_form<Z>(support::trefoil(), mat({{1, 1}, {-1, 1}}), 1), Error);
  }

  TEST_CASE("symmetrize examples") {
    const F t = trefoil_form();
    CHECK(equal<Z>(symmetrize<Z>(t.theta, t.module, 1).theta, t.theta));
    CHECK(symmetrize<Z>(zeros<Z>(2, 2), t.module, 1).theta.isZero());
    const M m(mat({{2, 1}, {0, -1}}));
    try {
      symmetrize<Z>(identity<Z>(2), m, 1);
      FAIL("expected NotIntertwining");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIntertwining);
    }
  }

  TEST_CASE("symmetrize preserves lambda and is idempotent") {
    gen::Rng rng(51);
    for (int i = 0; i < 100; ++i) {
      const int eta = i % 2 ? -1 : 1;
      const F f = gen::random_nonsingular_form(rng, 2 * gen::uniform(rng, 1, 2), eta);
      // Any theta_raw = f.theta * poly(e) intertwines.
      const IntMatrix raw = f.theta * (Z(gen::uniform(rng, -2, 2)) * identity<Z>(f.rank()) +
                                       Z(gen::uniform(rng, -2, 2)) * f.e());
      const F s = symmetrize<Z>(raw, f.module, eta);
      REQUIRE(equal<Z>(s.lambda(), IntMatrix(raw - Z(eta) * raw.transpose())));
      REQUIRE(equal<Z>(symmetrize<Z>(s.theta, f.module, eta).theta, s.theta));
    }
  }

  TEST_CASE("cover_form examples") {
    const F t = trefoil_form();
    const auto b = cover_form(t);
    CHECK(equal<Z>(b.g_phi, support::trefoil()));
    CHECK(b.k == 1);
    const IntMatrix ome = identity<Z>(2) - IntMatrix(t.e().transpose());
    CHECK(equal<Z>(IntMatrix(-ome * ome * t.theta.transpose()), t.theta));
    CHECK(is_symmetric(b));
    const auto b0 = cover_form(make_seifert_form<Z>(zeros<Z>(0, 0), 1));
    CHECK(b0.module.rank() == 0);
    CHECK(is_symmetric(cover_form(figure_eight_form())));
  }

  TEST_CASE("cover_form symmetry on random forms") {
    gen::Rng rng(52);
    for (int i = 0; i < 100; ++i) {
      const int eta = i % 2 ? -1 : 1;
      const F f = gen::random_nonsingular_form(rng, 2 * gen::uniform(rng, 0, 2), eta);
      const auto b = cover_form(f);
      REQUIRE(morphism_equal(b.phi(), symmetry_partner(b)));
      const auto bp = cover_form(padded(f, mat({{0, 1}, {0, 0}})));
      REQUIRE(is_symmetric(bp));
    }
  }

  TEST_CASE("cover_form rejects singular coverings") {
    const F bad{M(mat({{-1}})), zeros<Z>(1, 1), 1};
    try {
      cover_form(bad);
      FAIL("expected SingularForm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularForm);
    }
  }

  TEST_CASE("check_form_morphism examples") {
    const F t = trefoil_form();
    CHECK(check_form_morphism<Z>(identity<Z>(2), 0, t, t) == 0);
    CHECK_FALSE(check_form_morphism<Z>(zeros<Z>(2, 2), 0, t, t).has_value());
    gen::Rng rng(53);
    for (int i = 0; i < 20; ++i) {
      const auto u = gen::random_unimodular(rng, 2);
      const F src = gen::conjugate(t, u);
      REQUIRE(check_form_morphism<Z>(u.u, 0, src, t) == 0);
    }
    // t is the identity on the trefoil module, so a t-shifted identity also works.
    CHECK(check_form_morphism<Z>(t.module.t(), 1, t, t) == 0);
  }

  TEST_CASE("uncover examples") {
    const F t = trefoil_form();
    const auto r = uncover(cover_form(t));
    CHECK(r.trace.shortcut);
    CHECK(r.form.rank() == 2);
    CHECK(alexander(r.form) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(signature(r.form) == -2);

    const F p = padded(t, mat({{0}}));
    CHECK_FALSE(p.nonsingular());
    const auto rp = uncover(cover_form(p));
    CHECK_FALSE(rp.trace.shortcut);
    CHECK(rp.form.nonsingular());
    CHECK(alexander(rp.form) == alexander(t));
    CHECK(signature(rp.form) == -2);
    CHECK(determinant_invariant(rp.form) == 3);
    CHECK(rp.trace.assertions > 10);
    const auto& tr = rp.trace;
    CHECK(equal<Z>(IntMatrix(tr.p_plus + tr.p_minus), identity<Z>(tr.p_plus.rows())));
    CHECK(equal<Z>(IntMatrix(tr.h_prime * tr.lambda), power<Z>(p.module.t(), tr.k)));

    const auto r0 = uncover(cover_form(make_seifert_form<Z>(zeros<Z>(0, 0), -1)));
    CHECK(r0.form.rank() == 0);
  }

  TEST_CASE("uncover handles other t-exponents") {
    const F t = trefoil_form();
    const auto b = cover_form(padded(t, mat({{1, 1}, {0, 1}})));
    const BlanchfieldForm<Z> b3{b.module, mul<Z>(mul<Z>(b.g_phi, b.module.t()), b.module.t()), 3,
                                b.eta};
    REQUIRE(is_symmetric(b3));
    const auto r = uncover(b3);
    CHECK(r.trace.twist == 2);
    CHECK(alexander(r.form) == alexander(t));
    CHECK(signature(r.form) == signature(t));

    const BlanchfieldForm<Z> b0{t.module, mul<Z>(t.theta, inverse<Z>(t.module.t())), 0, 1};
    REQUIRE(is_symmetric(b0));
    CHECK(alexander(uncover(b0).form) == alexander(t));
  }

  TEST_CASE("uncover rejects asymmetric and singular forms") {
    const F t = trefoil_form();
    const BlanchfieldForm<Z> asym{t.module, mul<Z>(t.theta, t.module.e), 1, 1};
    REQUIRE_FALSE(is_symmetric(asym));
    try {
      uncover(asym);
      FAIL("expected NotSymmetric");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
    const M m(mat({{-1}}));
    const BlanchfieldForm<Z> sing{m, zeros<Z>(1, 1), 1, 1};
    REQUIRE(is_symmetric(sing));
    try {
      uncover(sing);
      FAIL("expected NotNonsingularForm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotNonsingularForm);
    }
  }

  TEST_CASE("uncover round trip with pads") {
    gen::Rng rng(54);
    for (int i = 0; i < 40; ++i) {
      const int eta = i % 2 ? -1 : 1;
      const F f = gen::random_nonsingular_form(rng, 2 * gen::uniform(rng, 0, 2), eta);
      const auto kind = static_cast<gen::PadKind>(i % 3);
      const F p = gen::pad_form(f, gen::random_pad(rng, kind));
      const auto r = uncover(cover_form(p));
      REQUIRE(r.form.nonsingular());
      REQUIRE(alexander(r.form) == alexander(f));
      REQUIRE(determinant_invariant(r.form) == determinant_invariant(f));
      if (eta == 1) REQUIRE(signature(r.form) == signature(f));
    }
  }

  TEST_CASE("rank certificate") {
    const F t = trefoil_form();
    const auto b = cover_form(t);
    const auto c = rank_certificate(uncover(b), b);
    CHECK(c.skipped);
    CHECK(c.holds);
    // Balanced pads (one nilpotent, one unipotent) keep the rank.
    const auto bb = cover_form(padded(padded(t, mat({{0}})), mat({{1}})));
    const auto rb = uncover(bb);
    const auto cb = rank_certificate(rb, bb);
    CHECK_FALSE(cb.skipped);
    CHECK(cb.expected == 4);
    CHECK(cb.actual == 4);
    CHECK(cb.holds);
    // A lone nilpotent pad cannot be matched: nonsingular forms over Z have even rank.
    const auto bp = cover_form(padded(t, mat({{0}})));
    const auto cp = rank_certificate(uncover(bp), bp);
    CHECK(cp.expected == 3);
    CHECK(cp.actual % 2 == 0);
    CHECK_FALSE(cp.holds);
  }

  TEST_CASE("uncover over the rationals") {
    using Q = Rational;
    const auto tq = make_seifert_form<Q>(mat<Q>({{-1, 1}, {0, -1}}), 1);
    const SeifertForm<Q> pad{SeifertModule<Q>(mat<Q>({{0}})), mat<Q>({{0}}), 1};
    const auto r = uncover(cover_form(direct_sum(tq, pad)));
    CHECK_FALSE(r.trace.shortcut);
    CHECK(r.form.nonsingular());
    CHECK(alexander(r.form) == alexander(tq));
  }

  TEST_CASE("localize examples") {
    const LP omz = poly({{0, 1}, {1, -1}});
    for (const F& f : {trefoil_form(), figure_eight_form()}) {
      const auto lf = localize_form(f);
      for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) REQUIRE(lf.matrix(i, j) == L(omz * LP(f.theta(i, j))));
      CHECK(hermitian_defect_identity(f));
    }
    CHECK(localize_form(make_seifert_form<Z>(zeros<Z>(0, 0), 1)).rank() == 0);
    CHECK_THROWS_AS(localize_form(F{M(mat({{0}})), zeros<Z>(1, 1), 1}), Error);
  }

  TEST_CASE("hermitian defect identity on random forms") {
    gen::Rng rng(55);
    for (int i = 0; i < 60; ++i) {
      const F f = gen::random_nonsingular_form(rng, 2 * gen::uniform(rng, 0, 2), i % 2 ? -1 : 1);
      REQUIRE(hermitian_defect_identity(f));
    }
  }
}
