#include <doctest.h>

#include "qlf/characters.hpp"
#include "qlf/numeric.hpp"

using namespace qlf;

namespace {

std::vector<BigRational> first4(const EulerNumberTable& t) { return {t.values.begin(), t.values.begin() + 4}; }

}  // namespace

TEST_CASE("tabulated generalized Euler numbers") {
  CHECK(first4(euler_numbers_gf(2, 0, 3)) == std::vector<BigRational>{1, -1, 5, -61});
  CHECK(first4(euler_numbers_gf(3, 0, 3)) == std::vector<BigRational>{1, rat(-8, 3), 32, -896});
  CHECK(first4(euler_numbers_gf(3, 1, 3)) == std::vector<BigRational>{2, rat(-10, 3), 34, -910});
  CHECK(first4(euler_numbers_gf(4, 0, 3)) == std::vector<BigRational>{1, -5, 109, -5465});
  CHECK(first4(euler_numbers_gf(4, 1, 3)) == std::vector<BigRational>{2, -8, 160, -7808});
  CHECK(first4(euler_numbers_gf(4, 2, 3)) == std::vector<BigRational>{3, -7, 119, -5587});
}

TEST_CASE("low orders match the closed forms of the generating function") {
  for (int m = 2; m <= 9; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const auto E = euler_numbers_gf(m, a, 3).values;
      const BigRational b = a + 1;
      const BigRational M = m;
      const BigRational base = b * (b * b - M * M);
      CHECK(E[0] == b);
      CHECK(E[1] == base * 2 / 6);
      CHECK(E[2] == base * (3 * b * b - 7 * M * M) * 24 / 360);
      CHECK(E[3] == base * (3 * b * b * b * b - 18 * b * b * M * M + 31 * M * M * M * M) * 720 / 15120);
    }
  }
}

TEST_CASE("both routes agree") {
  for (int m = 2; m <= 6; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const auto g = euler_numbers_gf(m, a, 12);
      const auto b = euler_numbers_bernoulli(m, a, 12);
      CHECK(g.values == b.values);
      CHECK(g.route == EulerRoute::generating_function);
      CHECK(b.route == EulerRoute::bernoulli);
    }
  }
}

TEST_CASE("E_k is m times the L-value at -2k") {
  for (int m = 2; m <= 5; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const auto v = char_values(PeriodicChar(m, a));
      for (int k = 0; k <= 6; ++k) CHECK(euler_number_bernoulli(m, a, k) == m * l_value(2 * k, v));
    }
  }
}

TEST_CASE("sh ratio expands into the character") {
  for (int m = 2; m <= 8; ++m) {
    for (int a = 0; a <= m - 2; ++a) CHECK(chi_generating_check(m, a, 200));
  }
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(euler_numbers_gf(3, 2), PreconditionError);
  CHECK_THROWS_AS(euler_numbers_gf(1, 0), PreconditionError);
  CHECK_THROWS_AS(euler_number_bernoulli(3, 0, -1), PreconditionError);
  CHECK(to_string(EulerRoute::bernoulli) == "bernoulli");
}
