#include <doctest.h>

#include "qlf/numeric.hpp"
#include "qlf/qbinomial.hpp"

using namespace qlf;

namespace {

Poly dense(const FormalSeries& s, std::size_t n) {
  Poly p(n);
  for (const auto& t : s.terms()) {
    REQUIRE(s.denom() == 1);
    if (t.k < static_cast<std::int64_t>(n)) p[static_cast<std::size_t>(t.k)] = t.c;
  }
  return p;
}

}  // namespace

TEST_CASE("[4,2] by product expansion") {
  // (1-q^4)(1-q^3)/((1-q)(1-q^2)) = (1+q+q^2+q^3)(1+q^2)... = 1+q+2q^2+q^3+q^4
  const Poly& p = QBinomialTable::global().get(4, 2);
  CHECK(p == Poly{1, 1, 2, 1, 1});
}

TEST_CASE("q-binomial symmetries and q = 1") {
  auto& tab = QBinomialTable::global();
  for (long n = 0; n <= 14; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Poly& p = tab.get(n, k);
      CHECK(p == tab.get(n, n - k));
      BigInt s = 0;
      for (const auto& c : p) s += c;
      CHECK(s == binomial(n, k));
      // palindromic of degree k(n-k)
      CHECK(static_cast<long>(p.size()) == k * (n - k) + 1);
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == p[p.size() - 1 - i]);
      // the other Pascal rule [n,k] = q^{n-k}[n-1,k-1] + [n-1,k]
      if (n >= 1 && k >= 1 && k < n) {
        Poly r(p.size());
        const Poly& a = tab.get(n - 1, k - 1);
        const Poly& b = tab.get(n - 1, k);
        for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(n - k)] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        CHECK(r == p);
      }
    }
  }
  CHECK(tab.get(3, 5).empty());
  CHECK(tab.get(3, -1).empty());
}

TEST_CASE("gauss_binomial respects its order") {
  const FormalSeries s = gauss_binomial(6, 3, BigRational(4));
  CHECK(s.order() == BigRational(4));
  CHECK(dense(s, 4) == Poly{1, 1, 2, 3});
}

TEST_CASE("(q;q)_inf is Euler's pentagonal series") {
  const long L = 80;
  const FormalSeries p = pochhammer(1, 1, L, 1, BigRational(L));
  Poly ref(static_cast<std::size_t>(L));
  for (long k = -10; k <= 10; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < L) ref[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  CHECK(dense(p, static_cast<std::size_t>(L)) == ref);
}

TEST_CASE("(-1;q^2)_n") {
  // (1+1)(1+q^2)(1+q^4)
  const FormalSeries p = pochhammer(-1, 2, 3, 0, BigRational(10));
  CHECK(dense(p, 10) == Poly{2, 0, 2, 0, 2, 0, 2, 0, 0, 0});
}

TEST_CASE("eta(s tau) carries q^{s/24} and substitutes q -> q^s") {
  const BigRational o(30);
  const FormalSeries e1 = dedekind_eta(BigRational(1), o);
  CHECK(e1.valuation() == rat(1, 24));
  CHECK(e1.coeff(rat(1, 24) + 1) == -1);
  CHECK(e1.coeff(rat(1, 24) + 5) == 1);
  CHECK(e1.coeff(rat(1, 24) + 3) == 0);
  const FormalSeries e2 = dedekind_eta(BigRational(2), o);
  CHECK(e2.valuation() == rat(1, 12));
  CHECK(e2.coeff(rat(1, 12) + 2) == -1);
  const FormalSeries eh = dedekind_eta(rat(1, 2), o);
  CHECK(eh.coeff(rat(1, 48) + rat(1, 2)) == -1);
  CHECK(eh.order() >= o);
}

TEST_CASE("poly_mul truncates") {
  CHECK(poly_mul({1, 1}, {1, 1}, 2) == Poly{1, 2});
  CHECK(poly_mul({1, 2, 3}, {4, 5}, 10) == Poly{4, 13, 22, 15});
}
