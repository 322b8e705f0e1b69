#include <doctest.h>

#include <random>

#include "qlf/invariants.hpp"
#include "qlf/numeric.hpp"

using namespace qlf;

namespace {
const Bits B{256};
Real tol(long e) { return pow2(e, Bits{64}); }
}  // namespace

TEST_CASE("group ring arithmetic lives in Z[x]/(x^{2N}-1)") {
  const long n2 = 10;
  const auto x = GroupRingElement::monomial(n2, 1);
  GroupRingElement p = GroupRingElement::monomial(n2, 0);
  for (int i = 0; i < 10; ++i) p = p * x;
  CHECK(p == GroupRingElement::monomial(n2, 0));
  CHECK(GroupRingElement::monomial(n2, -3) == GroupRingElement::monomial(n2, 7));
  GroupRingElement s(n2);
  s.add_rotated(x, 4, 3);
  CHECK(s == GroupRingElement::monomial(n2, 5, 3));
  s -= GroupRingElement::monomial(n2, 5, 3);
  CHECK(s.is_zero());
}

TEST_CASE("group ring evaluation against the zeta table") {
  const RootContext ctx(7, B);
  const auto g = GroupRingElement::monomial(14, 3, 2) + GroupRingElement::monomial(14, 11, -5);
  const HPComplex want = ctx.zeta(3) * 2L - ctx.zeta(11) * 5L;
  CHECK(max_abs_diff(g.evaluate(ctx), want) < tol(-250));
  // zeta^N = -1
  CHECK(max_abs_diff(ctx.zeta(7), HPComplex(Real(-1L, B))) < tol(-250));
  CHECK(ctx.unit_norm_defect() < tol(-250));
}

TEST_CASE("omega-binomials") {
  for (long N : {3L, 5L, 8L}) {
    const RootContext ctx(N, B, true);
    // [N, k] vanishes at a primitive N-th root for 0 < k < N
    for (long k = 1; k < N; ++k) CHECK(abs(ctx.binom(N, k)) < tol(-240));
    for (long n = 0; n <= N; ++n) {
      CHECK(max_abs_diff(ctx.binom(n, 0), HPComplex(Real(1L, B))) < tol(-250));
      for (long k = 0; k <= n; ++k) {
        CHECK(max_abs_diff(ctx.binom(n, k), ctx.binom_exact(n, k).evaluate(ctx)) < tol(-240));
        CHECK(max_abs_diff(ctx.binom(n, k), ctx.binom(n, n - k)) < tol(-240));
      }
    }
  }
  // [4,2] = 1 + q + 2q^2 + q^3 + q^4 at q = omega, N = 7
  const RootContext ctx(7, B);
  HPComplex want(B);
  const long c[] = {1, 1, 2, 1, 1};
  for (long i = 0; i < 5; ++i) want += ctx.zeta(2 * i) * c[i];
  CHECK(max_abs_diff(ctx.binom(4, 2), want) < tol(-240));
}

TEST_CASE("Hopf link") {
  for (long N = 1; N <= 12; ++N) {
    const RootContext ctx(N, B, true);
    NestedOptions o;
    o.exact = true;
    const auto r = kashaev_nested(1, ctx, o);
    CHECK(max_abs_diff(r.value, HPComplex(Real(N, B))) < tol(-250));
    REQUIRE(r.exact_value.has_value());
    CHECK(*r.exact_value == GroupRingElement::monomial(2 * N, 0, N));
  }
}

TEST_CASE("nested, leaves, theta and jones routes agree on random inputs") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 25; ++t) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const long N = 1 + static_cast<long>(rng() % 14);
    const RootContext ctx(N, B);
    const auto a = kashaev_nested(m, ctx);
    NestedOptions lv;
    lv.strategy = NestedStrategy::leaves;
    const auto b = kashaev_nested(m, ctx, lv);
    const auto c = kashaev_theta(m, ctx);
    const auto d = kashaev_jones_limit(m, ctx);
    CAPTURE(m);
    CAPTURE(N);
    CHECK(max_abs_diff(a.value, b.value) < tol(-240));
    CHECK(max_abs_diff(a.value, c.value) < tol(-240));
    CHECK(max_abs_diff(a.value, d.value) < tol(-240));
  }
}

TEST_CASE("exact backend reproduces the complex value for every a") {
  for (int m = 2; m <= 4; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      for (long N : {1L, 4L, 9L}) {
        const RootContext ctx(N, B, true);
        const HPComplex y = y_series(m, a, ctx);
        CHECK(max_abs_diff(y, y_series_exact(m, a, ctx).evaluate(ctx)) < tol(-240));
      }
    }
  }
}

TEST_CASE("parallel evaluation is bit-identical to sequential") {
  const RootContext ctx(17, B);
  for (int m = 2; m <= 5; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      NestedOptions seq;
      NestedOptions par;
      par.threads = 3;
      const HPComplex x = y_series(m, a, ctx, seq);
      const HPComplex y = y_series(m, a, ctx, par);
      CHECK(x.real() == y.real());
      CHECK(x.imag() == y.imag());
    }
  }
}

TEST_CASE("colored Jones ratio through the character") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-0.3, 0.3);
  for (int t = 0; t < 20; ++t) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const long N = 1 + static_cast<long>(rng() % 8);
    const HPComplex h(d(rng), d(rng), B);
    CHECK(max_abs_diff(colored_jones_ratio(m, N, h), colored_jones_ratio_chi(m, N, h)) < tol(-200));
  }
}

TEST_CASE("preconditions") {
  const RootContext ctx(5, B);
  CHECK_THROWS_AS(kashaev_theta(1, ctx), PreconditionError);
  CHECK_THROWS_AS(y_series(3, 2, ctx), PreconditionError);
  CHECK_THROWS_AS(RootContext(0, B), PreconditionError);
  CHECK_THROWS_AS(y_series_exact(3, 0, ctx), PreconditionError);  // exact tables not built
  CHECK(to_string(InvariantMethod::theta) == "theta");
}
