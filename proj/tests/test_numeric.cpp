#include <doctest.h>

#include <random>

#include "qlf/numeric.hpp"

using namespace qlf;

TEST_CASE("Bernoulli numbers") {
  const std::vector<BigRational> ref = {rat(1, 1), rat(-1, 2), rat(1, 6), 0, rat(-1, 30), 0, rat(1, 42), 0,
                                        rat(-1, 30), 0, rat(5, 66), 0, rat(-691, 2730)};
  for (std::size_t n = 0; n < ref.size(); ++n) CHECK(bernoulli_number(static_cast<int>(n)) == ref[n]);
  CHECK_THROWS_AS(bernoulli_number(-1), PreconditionError);
}

TEST_CASE("B_3(1/4) by direct expansion") {
  // x^3 - 3x^2/2 + x/2 at x = 1/4
  CHECK(bernoulli_polynomial(3, rat(1, 4)) == rat(3, 64));
}

TEST_CASE("Bernoulli polynomial identities") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 15);
    const BigRational x = rat(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 40));
    const BigRational sgn = n % 2 == 0 ? 1 : -1;
    CHECK(bernoulli_polynomial(n, 1 - x) == sgn * bernoulli_polynomial(n, x));
    BigRational xp = 1;
    for (int i = 0; i < n - 1; ++i) xp *= x;
    CHECK(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) == n * xp);
  }
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("periodic character") {
  const PeriodicChar chi(5, 1);
  CHECK(chi.modulus() == 10);
  CHECK(chi(3) == 1);
  CHECK(chi(7) == -1);
  for (long n = -40; n <= 40; ++n) {
    CHECK(chi(-n) == -chi(n));
    CHECK(chi(n + 10) == chi(n));
    const long r = ((n % 10) + 10) % 10;
    CHECK(chi(n) == (r == 3 ? 1 : r == 7 ? -1 : 0));
  }
  CHECK_THROWS_AS(PeriodicChar(3, 2), PreconditionError);
  CHECK_THROWS_AS(PeriodicChar(1, 0), PreconditionError);
}

TEST_CASE("L-values of the character mod 4 are halved Euler numbers") {
  // chi_4^{(0)} is the non-principal character mod 4; L(-2k) = E_{2k}/2
  const auto v = char_values(PeriodicChar(2, 0));
  CHECK(l_value(0, v) == rat(1, 2));
  CHECK(l_value(2, v) == rat(-1, 2));
  CHECK(l_value(4, v) == rat(5, 2));
  CHECK(l_value(6, v) == rat(-61, 2));
  // odd character, so B_{2,chi} = 0
  CHECK(l_value(1, v) == 0);
}

TEST_CASE("L-value needs zero mean") {
  CHECK_THROWS_AS(l_value(0, std::vector<BigInt>{1, 1}), PreconditionError);
}

TEST_CASE("numeric L-value agrees with exact") {
  const Bits B{192};
  for (int m = 2; m <= 5; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const auto v = char_values(PeriodicChar(m, a));
      std::vector<HPComplex> z;
      for (const auto& x : v) z.emplace_back(Real(x, B));
      for (int k = 0; k <= 6; ++k) {
        const HPComplex got = l_value(k, z, B);
        CHECK(max_abs_diff(got, HPComplex(Real(l_value(k, v), B))) < pow2(-150, B));
      }
    }
  }
}
