#include <doctest.h>

#include <cmath>

#include "qlf/asymptotics.hpp"
#include "qlf/characters.hpp"
#include "qlf/modular.hpp"
#include "qlf/numeric.hpp"

using namespace qlf;

namespace {
const Bits B{256};
Real tol(long e) { return pow2(e, Bits{64}); }
}  // namespace

TEST_CASE("m = 2 leading part against the Eichler integral at -N") {
  // leading = -sqrt(-iN) Phi~_2^{(0)}(-N), principal root; Phi~_2^{(0)}(-N) = e^{-pi i N/4}
  for (long N = 1; N <= 20; ++N) {
    const auto e = build_expansion(2, 0, N, 0, B);
    const HPComplex root = sqrt(HPComplex(Real(0L, B), Real(-N, B)));
    const HPComplex phi = eichler_at_rational(2, 0, -N, 1, B);
    CHECK(max_abs_diff(phi, unit_root(-N, 4, B)) < tol(-240));
    CHECK(max_abs_diff(e.leading_theta_part, -(root * phi)) < tol(-240));
  }
}

TEST_CASE("tail starts at a + 1 and uses the Euler numbers") {
  for (int m = 2; m <= 5; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const auto e = build_expansion(m, a, 7, 3, B);
      REQUIRE(e.tail.size() == 4);
      CHECK(max_abs_diff(e.tail[0], HPComplex(Real(static_cast<long>(a + 1), B))) < tol(-250));
      const auto E = euler_numbers_gf(m, a, 1).values;
      const HPComplex step = e.tail[1] - e.tail[0];
      const HPComplex want(Real(0L, B), Real::pi(B) * Real(E[1], B) / (2L * m * 7));
      CHECK(max_abs_diff(step, want) < tol(-240));
    }
  }
  CHECK_THROWS_AS(build_expansion(3, 0, 5, 13), PreconditionError);
}

TEST_CASE("a = 0 expansion matches the phase-distributed form") {
  for (int m = 2; m <= 5; ++m) {
    for (long N : {1L, 2L, 9L, 50L}) {
      for (int K = 0; K <= 6; ++K) {
        const auto e = build_expansion(m, 0, N, K, B);
        const HPComplex ours = e.phase * e.value(K);
        const HPComplex other = corollary_expansion(m, N, K, B);
        // relative: the tail can reach 2^10 in size for N = 1
        Real scale = abs(other);
        if (scale < Real(1L, B)) scale = Real(1L, B);
        CHECK(max_abs_diff(ours, other) < tol(-240) * scale);
      }
    }
  }
}

TEST_CASE("conjecture 2 residuals") {
  for (long N : {1L, 5L, 11L}) {
    const RootContext ctx(N, B);
    for (int m = 2; m <= 4; ++m) {
      CHECK(conjecture2_residual(m, 0, ctx) < tol(-232));
      for (int a = 1; a <= m - 2; ++a) CHECK(conjecture2_residual(m, a, ctx) < Real(1e-12, B));
    }
  }
}

TEST_CASE("log-log slope of an exact power law") {
  std::vector<double> x{2, 4, 8, 16}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -2.5));
  CHECK(loglog_slope(x, y) == doctest::Approx(-2.5).epsilon(1e-12));
  CHECK_THROWS_AS(loglog_slope({1}, {1}), PreconditionError);
}

TEST_CASE("error scan decays at the truncation order") {
  const ErrorScan s = conjecture1_error_scan(2, 0, 1, {8, 16, 32});
  CHECK(s.rows.size() == 3);
  CHECK(std::fabs(s.slope + 2.0) < 0.5);
  for (std::size_t i = 1; i < s.rows.size(); ++i) CHECK(s.rows[i].abs_err < s.rows[i - 1].abs_err);
  CHECK_THROWS_AS(conjecture1_error_scan(2, 0, 1, {16, 8}), PreconditionError);
}

TEST_CASE("threaded scan gives the same table") {
  const ErrorScan a = conjecture1_error_scan(3, 1, 0, {4, 6, 9}, B, 1);
  const ErrorScan b = conjecture1_error_scan(3, 1, 0, {4, 6, 9}, B, 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].abs_err == b.rows[i].abs_err);
}

TEST_CASE("volume sequence decreases toward zero") {
  for (int m : {1, 2, 4}) {
    const VolumeScan v = volume_conjecture_check(m, {10, 20, 40, 80});
    CHECK(v.decreasing);
  }
  // m = 1: (2 pi/N) log N
  const VolumeScan h = volume_conjecture_check(1, {10});
  CHECK(std::fabs(h.rows[0].value.to_double() - 2 * M_PI / 10 * std::log(10.0)) < 1e-12);
}
