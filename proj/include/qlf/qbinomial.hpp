#pragma once

#include <deque>
#include <shared_mutex>
#include <vector>

#include "qlf/series.hpp"

namespace qlf {

/// Integer polynomial in q, coefficient i at index i.
using Poly = std::vector<BigInt>;

/// Memoized triangle of Gaussian binomials [n, k] built by the Pascal rule
/// [n,k] = [n-1,k-1] + q^k [n-1,k]. Concurrent readers, serialized growth.
class QBinomialTable {
 public:
  /// The polynomial [n, k]; an empty Poly (zero) unless 0 <= k <= n.
  /// The reference stays valid for the lifetime of the table.
  const Poly& get(long n, long k);

  static QBinomialTable& global();

 private:
  void grow_to(long n);

  std::shared_mutex mutex_;
  std::deque<std::vector<Poly>> rows_;
  Poly zero_;
};

/// [n, k] as a series in q (exact polynomial, returned at the given order).
FormalSeries gauss_binomial(long n, long k, const BigRational& order = BigRational(FormalSeries::kDefaultOrder));

/// prod_{j=start}^{start+n-1} (1 - sign q^{base j}); sign = -1 gives (-1; q^base)_n
/// and (sign=+1, base=1, start=1) gives (q; q)_n.
FormalSeries pochhammer(int sign, long base, long n, long start = 0,
                        const BigRational& order = BigRational(FormalSeries::kDefaultOrder));

/// eta(s tau) = q^{s/24} prod_{n>=1} (1 - q^{s n}) truncated at order.
FormalSeries dedekind_eta(const BigRational& s, const BigRational& order);

/// Dense integer polynomial product truncated below `limit` terms.
Poly poly_mul(const Poly& a, const Poly& b, std::size_t limit);

}  // namespace qlf
