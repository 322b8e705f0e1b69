#include "qlf/characters.hpp"

#include "qlf/numeric.hpp"
#include "qlf/series.hpp"

namespace qlf {

std::string to_string(EulerRoute r) {
  return r == EulerRoute::generating_function ? "generating_function" : "bernoulli";
}

namespace {

void check_ma(int m, int a) {
  require(m >= 2, "Euler numbers require m >= 2");
  require(a >= 0 && a <= m - 2, "Euler numbers require 0 <= a <= m-2");
}

BigInt ipow(long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

}  // namespace

EulerNumberTable euler_numbers_gf(int m, int a, int k_max) {
  check_ma(m, a);
  require(k_max >= 0, "k_max must be >= 0");
  const auto n = static_cast<std::size_t>(k_max + 1);
  // sh(cz)/z = c sum_j (c^2 w)^j/(2j+1)!, so only even powers of z appear
  std::vector<BigRational> p(n);
  std::vector<BigRational> q(n);
  for (std::size_t j = 0; j < n; ++j) {
    const BigInt f = factorial(static_cast<long>(2 * j + 1));
    p[j] = rat(ipow(a + 1, 2 * j + 1), f);
    q[j] = rat(ipow(m, 2 * j + 1), f);
  }
  // r = m p / q by forward substitution
  std::vector<BigRational> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigRational acc = m * p[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= q[j] * r[k - j];
    r[k] = acc / q[0];
    r[k].canonicalize();
  }
  EulerNumberTable t{m, a, EulerRoute::generating_function, {}};
  for (std::size_t k = 0; k < n; ++k) {
    BigRational e = r[k] * BigRational(factorial(static_cast<long>(2 * k)));
    e.canonicalize();
    t.values.push_back(e);
  }
  return t;
}

BigRational euler_number_bernoulli(int m, int a, int k) {
  check_ma(m, a);
  require(k >= 0, "k must be >= 0");
  const int n = 2 * k + 1;
  const BigRational x1 = rat(m - 1 - a, 2 * m);
  const BigRational x2 = rat(m + 1 + a, 2 * m);
  const BigRational diff = bernoulli_polynomial(n, x1) - bernoulli_polynomial(n, x2);
  BigRational e = -BigRational(m * ipow(2 * m, static_cast<unsigned long>(2 * k))) / BigRational(BigInt(n)) * diff;
  e.canonicalize();
  return e;
}

EulerNumberTable euler_numbers_bernoulli(int m, int a, int k_max) {
  EulerNumberTable t{m, a, EulerRoute::bernoulli, {}};
  for (int k = 0; k <= k_max; ++k) t.values.push_back(euler_number_bernoulli(m, a, k));
  return t;
}

bool chi_generating_check(int m, int a, int order) {
  check_ma(m, a);
  const PeriodicChar chi(m, a);
  const BigRational ord(order);
  const FormalSeries num = FormalSeries::monomial(1, m - 1 - a, 1, ord) - FormalSeries::monomial(1, m + 1 + a, 1, ord);
  const FormalSeries den = FormalSeries::monomial(1, 0, 1, ord) - FormalSeries::monomial(1, 2 * m, 1, ord);
  const FormalSeries quo = series_divide(num, den);
  const long upto = std::min<long>(order, quo.order().get_num().get_si() / quo.order().get_den().get_si());
  for (long n = 0; n < upto; ++n) {
    if (quo.coeff(BigRational(n)) != chi(n)) return false;
  }
  return upto == order;
}

}  // namespace qlf
