#include <doctest.h>

#include <map>
#include <random>

#include "qlf/numeric.hpp"
#include "qlf/series.hpp"

using namespace qlf;

namespace {

// Random series on a random grid with a random rational shift.
FormalSeries random_series(std::mt19937_64& rng, std::int64_t denom, const BigRational& order, int terms) {
  std::vector<FormalSeries::Term> t;
  const auto lim = static_cast<std::int64_t>(mpz_get_si(BigInt(order.get_num() * denom / order.get_den()).get_mpz_t()));
  for (int i = 0; i < terms; ++i) {
    t.push_back({static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(lim)),
                 BigInt(static_cast<long>(rng() % 21) - 10)});
  }
  return FormalSeries::from_terms(std::move(t), denom, order);
}

// Product through an exponent -> coefficient map, no dense grid.
std::map<BigRational, BigInt> naive_product(const FormalSeries& a, const FormalSeries& b) {
  std::map<BigRational, BigInt> out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      out[rat(x.k, a.denom()) + rat(y.k, b.denom())] += x.c * y.c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("from_terms merges and drops zeros") {
  const FormalSeries s = FormalSeries::from_terms({{3, 2}, {1, 5}, {3, -2}, {1, 1}, {40, 7}}, 2, BigRational(10));
  REQUIRE(s.terms().size() == 1);
  CHECK(s.coeff(rat(1, 2)) == 6);
  CHECK(s.coeff(rat(3, 2)) == 0);
  CHECK(s.coeff(rat(1, 3)) == 0);
  CHECK_THROWS_AS(s.coeff(BigRational(10)), PreconditionError);
  CHECK(s.valuation() == rat(1, 2));
}

TEST_CASE("product matches the naive double loop and the order rule") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::int64_t da = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t db = 1 + static_cast<std::int64_t>(rng() % 6);
    const BigRational oa(static_cast<long>(3 + rng() % 10));
    const BigRational ob(static_cast<long>(3 + rng() % 10));
    const FormalSeries a = random_series(rng, da, oa, 8);
    const FormalSeries b = random_series(rng, db, ob, 8);
    const FormalSeries p = a * b;
    const BigRational expect_order = std::min(BigRational(oa + b.valuation()), BigRational(ob + a.valuation()));
    CHECK(p.order() == expect_order);
    const auto ref = naive_product(a, b);
    for (const auto& [e, c] : ref) {
      if (e < p.order()) CHECK(p.coeff(e) == c);
    }
    for (const auto& term : p.terms()) {
      const BigRational e = rat(term.k, p.denom());
      auto it = ref.find(e);
      CHECK(it != ref.end());
    }
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
    const BigRational order(20);
    const FormalSeries a = random_series(rng, d, order, 10);
    // divisor with unit leading coefficient at a random shift
    FormalSeries b = random_series(rng, d, order, 6);
    b = b + FormalSeries::monomial(rng() % 2 ? 1 : -1, 0, d, order);
    b = b.truncated(order);
    if (b.leading_coefficient() != 1 && b.leading_coefficient() != -1) continue;
    const FormalSeries q = series_divide_checked(a * b, b);
    CHECK_FALSE(first_mismatch(q, a).has_value());
  }
  const FormalSeries two = FormalSeries::monomial(2, 0, 1, BigRational(5));
  CHECK_THROWS_AS(series_divide(two, two), PreconditionError);
}

TEST_CASE("1/(1-q) is the geometric series") {
  const BigRational o(30);
  const FormalSeries one_minus_q = FormalSeries::from_terms({{0, 1}, {1, -1}}, 1, o);
  const FormalSeries g = series_divide(FormalSeries::monomial(1, 0, 1, o), one_minus_q);
  for (long k = 0; k < 30; ++k) CHECK(g.coeff(BigRational(k)) == 1);
}

TEST_CASE("shift, substitution and grids") {
  const FormalSeries s = FormalSeries::from_terms({{0, 1}, {1, 3}}, 1, BigRational(4));
  const FormalSeries sh = s.shifted(rat(1, 3));
  CHECK(sh.order() == rat(13, 3));
  CHECK(sh.coeff(rat(4, 3)) == 3);
  const FormalSeries sub = s.substituted(rat(1, 2));
  CHECK(sub.order() == BigRational(2));
  CHECK(sub.coeff(rat(1, 2)) == 3);
  CHECK(s.with_denom(6).coeff(BigRational(1)) == 3);
  CHECK(sh.with_denom(6).normalized().denom() == 3);
}

TEST_CASE("serialization") {
  const FormalSeries s = FormalSeries::from_terms({{1, -4}, {3, 2}}, 4, BigRational(2));
  CHECK(s.to_csv().rfind("exponent_numerator,denom,coefficient\n", 0) == 0);
  const auto j = s.to_json();
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == 1);
  CHECK(j[0][1] == 4);
  CHECK(j[0][2] == "-4");
}

TEST_CASE("first_mismatch only looks below the common order") {
  const FormalSeries a = FormalSeries::from_terms({{0, 1}, {5, 1}}, 1, BigRational(10));
  const FormalSeries b = FormalSeries::from_terms({{0, 1}}, 1, BigRational(5));
  CHECK_FALSE(first_mismatch(a, b).has_value());
  const FormalSeries c = FormalSeries::from_terms({{0, 1}, {2, 1}}, 1, BigRational(5));
  REQUIRE(first_mismatch(a, c).has_value());
  CHECK(*first_mismatch(a, c) == BigRational(2));
}

TEST_CASE("BiSeries substitution x -> q x") {
  BiSeries k(4, 1, BigRational(10));
  k.add_term(0, 0, 1);
  k.add_term(2, 1, 5);
  k.add_term(7, 0, 9);  // beyond x_order, ignored
  const BiSeries s = k.x_substituted(BigRational(1));
  CHECK(s.coefficient(2).coeff(BigRational(3)) == 5);
  CHECK(k.at_x_one().coeff(BigRational(1)) == 5);
  CHECK(first_mismatch(k, s).has_value());
  const BiSeries m = k.monomial_times(2, BigRational(1), 1);
  CHECK(m.coefficient(3).coeff(BigRational(2)) == 10);
}
