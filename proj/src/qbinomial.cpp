#include "qlf/qbinomial.hpp"

#include <algorithm>
#include <mutex>

#include "qlf/numeric.hpp"

namespace qlf {

QBinomialTable& QBinomialTable::global() {
  static QBinomialTable t;
  return t;
}

void QBinomialTable::grow_to(long n) {
  std::unique_lock lock(mutex_);
  while (static_cast<long>(rows_.size()) <= n) {
    const long r = static_cast<long>(rows_.size());
    std::vector<Poly> row(static_cast<std::size_t>(r + 1));
    row[0] = Poly{1};
    row[static_cast<std::size_t>(r)] = Poly{1};
    const auto& prev = r > 0 ? rows_[static_cast<std::size_t>(r - 1)] : row;
    for (long k = 1; k < r; ++k) {
      const Poly& left = prev[static_cast<std::size_t>(k - 1)];  // [r-1, k-1]
      const Poly& up = prev[static_cast<std::size_t>(k)];        // [r-1, k]
      Poly p(static_cast<std::size_t>(k * (r - k) + 1));
      for (std::size_t i = 0; i < left.size(); ++i) p[i] += left[i];
      for (std::size_t i = 0; i < up.size(); ++i) p[i + static_cast<std::size_t>(k)] += up[i];
      row[static_cast<std::size_t>(k)] = std::move(p);
    }
    rows_.push_back(std::move(row));
  }
}

const Poly& QBinomialTable::get(long n, long k) {
  if (n < 0 || k < 0 || k > n) return zero_;
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<long>(rows_.size())) return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

FormalSeries gauss_binomial(long n, long k, const BigRational& order) {
  return FormalSeries::from_dense(QBinomialTable::global().get(n, k), order);
}

Poly poly_mul(const Poly& a, const Poly& b, std::size_t limit) {
  if (a.empty() || b.empty()) return {};
  Poly out(std::min(limit, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), out.size() - i);
    for (std::size_t j = 0; j < jmax; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

FormalSeries pochhammer(int sign, long base, long n, long start, const BigRational& order) {
  require(sign == 1 || sign == -1, "pochhammer sign must be +1 or -1");
  require(base > 0 && n >= 0 && start >= 0, "pochhammer requires base > 0, n >= 0, start >= 0");
  BigInt lim_z;
  mpz_cdiv_q(lim_z.get_mpz_t(), order.get_num_mpz_t(), order.get_den_mpz_t());
  const std::size_t lim = static_cast<std::size_t>(std::max<long>(lim_z.get_si(), 0));
  Poly p(lim);
  if (lim > 0) p[0] = 1;
  for (long j = start; j < start + n; ++j) {
    const long e = base * j;
    // multiply by (1 - sign q^e) in place, high degrees first
    if (e == 0) {
      for (auto& c : p) c *= (1 - sign);
      continue;
    }
    for (std::size_t i = lim; i-- > static_cast<std::size_t>(e);) {
      if (sign == 1) p[i] -= p[i - static_cast<std::size_t>(e)];
      else p[i] += p[i - static_cast<std::size_t>(e)];
    }
  }
  return FormalSeries::from_dense(p, order);
}

FormalSeries dedekind_eta(const BigRational& s, const BigRational& order) {
  require(s > 0, "dedekind_eta scale must be positive");
  // prod (1 - t^n) in t = q^s, to t-order T with s T > order
  const BigRational t_order = order / s;
  BigInt tz;
  mpz_fdiv_q(tz.get_mpz_t(), t_order.get_num_mpz_t(), t_order.get_den_mpz_t());
  const std::size_t T = static_cast<std::size_t>(std::max<long>(tz.get_si() + 2, 1));
  Poly p(T);
  p[0] = 1;
  for (std::size_t n = 1; n < T; ++n) {
    for (std::size_t i = T; i-- > n;) p[i] -= p[i - n];
  }
  FormalSeries prod = FormalSeries::from_dense(p, BigRational(BigInt(static_cast<long>(T))));
  return prod.substituted(s).shifted(s / 24).with_denom(24 * s.get_den().get_si()).truncated(order);
}

}  // namespace qlf
