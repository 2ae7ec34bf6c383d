#include <doctest.h>

#include "mabuchi/classify.hpp"
#include "mabuchi/error.hpp"
#include "mabuchi/pn_bundles.hpp"

using mabuchi::BigRational;
using mabuchi::ErrorCode;
using mabuchi::PnBundleParams;
using mabuchi::PnTuple;
using mabuchi::Polynomial;

namespace {

template <class F>
void for_each_fano(unsigned n_max, F&& f) {
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= 6; ++k)
      for (unsigned d0 = 0; d0 <= 4; ++d0)
        for (unsigned di = 0; di <= 4; ++di)
          if (k * (d0 + 1) < n + 1) f(PnTuple{n, k, d0, di});
}

BigRational two_to(unsigned e) {
  BigRational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 2;
  return r;
}

}  // namespace

TEST_CASE("derived constants") {
  const PnBundleParams p({3, 1, 1, 0});
  CHECK(p.lambda() == BigRational(4 * 2 - 1, 3));
  CHECK(p.a() == BigRational(2, 3));
  CHECK(p.b() == BigRational(2, 3));
  CHECK(p.w() == BigRational(1, 3));
  CHECK(p.lambda() - 1 == 2 * p.a());
  CHECK(p.w() + 1 == 2 * p.b());
  REQUIRE(p.c_const().has_value());
  CHECK(*p.c_const() == BigRational(4, 3));
  CHECK_FALSE(PnBundleParams({2, 1, 1, 0}).c_const().has_value());
  const PnBundleParams q({5, 1, 1, 2});
  REQUIRE(q.c_const().has_value());
  CHECK(*q.c_const() == q.a() * 2 / 3);
}

TEST_CASE("I for the two P^1 bundles") {
  CHECK(mabuchi::i_integral(PnBundleParams({1, 1, 0, 1})) == BigRational(-16, 135));
  CHECK(mabuchi::i_integral(PnBundleParams({2, 1, 0, 1})) == BigRational(16, 405));
}

TEST_CASE("I from a hand-expanded integrand") {
  // (1,1,0,1): lambda = 5/3, w = -1/3, integrand (5/3 + x)(1 - x)^2 (x + 1/3)
  const Polynomial f = Polynomial{BigRational(5, 3), 1} * pow(Polynomial{1, -1}, 2) * Polynomial{BigRational(1, 3), 1};
  CHECK(definite_integral(f, BigRational(-1), BigRational(1)) == BigRational(-16, 135));
}

TEST_CASE("sign of M_X - 1 follows the sign of I") {
  for_each_fano(6, [](const PnTuple& t) {
    const PnBundleParams p(t);
    const BigRational mx = mabuchi::mabuchi_constant(p.manifold());
    CHECK((mx - 1).sign() == mabuchi::i_integral(p).sign());
  });
}

TEST_CASE("beta expansions agree with direct integration") {
  for_each_fano(5, [](const PnTuple& t) {
    INFO(t.str());
    const PnBundleParams p(t);
    CHECK(mabuchi::i_beta_expansion(p) == mabuchi::i_integral(p));
    CHECK(mabuchi::futaki_positivity(p) == mabuchi::futaki_unit_interval_form(p));
    CHECK(mabuchi::futaki_positivity(p) > BigRational(0));
    const auto s = mabuchi::s0_s1_ratio(p);
    CHECK(s.s0 == p.a() * s.l + s.k);
    CHECK(s.s1 == BigRational(static_cast<long>(t.n)) * s.k);
  });
}

TEST_CASE("the prefactor of I is 1/((d_inf+2)(d0+d_inf+2))") {
  // With 1/(d0+2) in place of 1/(d_inf+2) the expansion only matches when d0 = d_inf.
  for_each_fano(5, [](const PnTuple& t) {
    const PnBundleParams p(t);
    const auto s = mabuchi::s0_s1_ratio(p);
    const BigRational bracket = BigRational(static_cast<long>(t.d_inf + 1)) * s.s1 - BigRational(static_cast<long>(t.d0 + 1)) * s.s0;
    const BigRational scale = two_to(t.d0 + t.d_inf + t.n + 3) / BigRational(static_cast<long>(t.d0 + t.d_inf + 2));
    const BigRational with_d_inf = scale * bracket / BigRational(static_cast<long>(t.d_inf + 2));
    const BigRational with_d0 = scale * bracket / BigRational(static_cast<long>(t.d0 + 2));
    CHECK(with_d_inf == mabuchi::i_integral(p));
    CHECK((with_d0 == mabuchi::i_integral(p)) == (t.d0 == t.d_inf));
  });
}

TEST_CASE("S0 integrates (1 - t)^(d_inf+2), not (1 + t)^(d_inf+2)") {
  for_each_fano(4, [](const PnTuple& t) {
    const PnBundleParams p(t);
    const auto s = mabuchi::s0_s1_ratio(p);
    const Polynomial core = Polynomial::monomial(1, t.d0) * pow(Polynomial{p.a(), 1}, t.n);
    CHECK(definite_integral(core * pow(Polynomial{1, -1}, t.d_inf + 2), 0, 1) == s.s0);
    CHECK(definite_integral(core * pow(Polynomial{1, 1}, t.d_inf + 2), 0, 1) != s.s0);
  });
}

TEST_CASE("Chebyshev-type quantity") {
  CHECK(mabuchi::s0_s1_ratio(PnBundleParams({1, 1, 0, 1})).chebyshev.is_zero());
  CHECK(mabuchi::s0_s1_ratio(PnBundleParams({2, 1, 0, 1})).chebyshev > BigRational(0));
  const auto s = mabuchi::s0_s1_ratio(PnBundleParams({3, 1, 1, 1}));
  CHECK(s.s1 / s.s0 == BigRational(3) * s.k / (PnBundleParams({3, 1, 1, 1}).a() * s.l + s.k));
}

TEST_CASE("unit-interval form of I for k = 1, d_inf = 0") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d0 = 0; d0 + 1 < n + 1 && d0 <= 4; ++d0) {
      const PnBundleParams p({n, 1, d0, 0});
      CHECK(mabuchi::i_unit_interval_form(p) == mabuchi::i_integral(p));
      CHECK(mabuchi::i_integral(p) < BigRational(0));
    }
  CHECK_THROWS_AS(mabuchi::i_unit_interval_form(PnBundleParams({2, 1, 0, 1})), mabuchi::Error);
}

TEST_CASE("eq1 implies M_X > 1") {
  int holds = 0;
  for_each_fano(6, [&](const PnTuple& t) {
    const PnBundleParams p(t);
    if (!mabuchi::eq1_check(p)) return;
    ++holds;
    CHECK(mabuchi::mabuchi_constant(p.manifold()) > BigRational(1));
  });
  CHECK(holds > 0);
  CHECK(mabuchi::eq1_check(PnBundleParams({3, 1, 0, 1})));
  CHECK_FALSE(mabuchi::eq1_check(PnBundleParams({2, 1, 0, 1})));  // M_X > 1 there, eq1 is only sufficient
  CHECK_FALSE(mabuchi::eq1_check(PnBundleParams({1, 1, 0, 1})));
}

TEST_CASE("closed-form membership") {
  CHECK(mabuchi::classify_closed_form({1, 1, 0, 1}));
  CHECK(mabuchi::classify_closed_form({4, 1, 2, 0}));
  CHECK_FALSE(mabuchi::classify_closed_form({2, 1, 0, 1}));
  CHECK_FALSE(mabuchi::classify_closed_form({2, 2, 0, 0}));
}

TEST_CASE("evaluate_tuple") {
  const auto v = mabuchi::evaluate_tuple({2, 1, 0, 1});
  CHECK(v.i == BigRational(16, 405));
  CHECK(v.mabuchi_constant > BigRational(1));
  CHECK_FALSE(v.computed_exists);
  CHECK_FALSE(v.closed_form_exists);
  const auto u = mabuchi::evaluate_tuple({1, 1, 0, 1});
  CHECK(u.mabuchi_constant == BigRational(35, 43));
  CHECK(u.computed_exists);
  try {
    (void)mabuchi::evaluate_tuple({1, 2, 0, 0});
    FAIL("expected NotFano");
  } catch (const mabuchi::Error& e) {
    CHECK(e.code() == ErrorCode::NotFano);
  }
}

TEST_CASE("grid scans") {
  const auto tiny = mabuchi::grid_scan({1, 1, 0, 1});
  REQUIRE(tiny.verdicts.size() == 2);
  CHECK(tiny.verdicts[0].tuple == PnTuple{1, 1, 0, 0});
  CHECK(tiny.verdicts[1].tuple == PnTuple{1, 1, 0, 1});
  CHECK(tiny.verdicts[0].computed_exists);
  CHECK(tiny.verdicts[1].computed_exists);

  const auto full = mabuchi::grid_scan({});
  const auto parallel = mabuchi::grid_scan({}, 4);
  REQUIRE(full.verdicts.size() == parallel.verdicts.size());
  for (std::size_t i = 0; i < full.verdicts.size(); ++i) {
    CHECK(full.verdicts[i].tuple == parallel.verdicts[i].tuple);
    CHECK(full.verdicts[i].mabuchi_constant == parallel.verdicts[i].mabuchi_constant);
    if (i) CHECK(full.verdicts[i - 1].tuple < full.verdicts[i].tuple);
  }
  bool saw_special = false;
  for (const auto& v : full.verdicts) {
    CHECK(v.closed_form_exists == v.computed_exists);
    CHECK(v.mabuchi_constant != BigRational(1));
    if (v.tuple == PnTuple{2, 2, 0, 0}) saw_special = true;
  }
  CHECK(saw_special);
  CHECK(full.verdicts.size() + full.skipped.size() == 6u * 6u * 5u * 5u);
  CHECK_THROWS_AS(mabuchi::grid_scan({0, 1, 0, 0}), mabuchi::Error);
}
