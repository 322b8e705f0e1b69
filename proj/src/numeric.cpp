#include "qlf/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace qlf {

namespace {

class BernoulliCache {
 public:
  BernoulliCache() { values_.emplace_back(1); }

  BigRational get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    // deque keeps references to existing entries stable while growing
    while (values_.size() <= static_cast<std::size_t>(n)) {
      const long m = static_cast<long>(values_.size());
      BigRational acc = 0;
      for (long j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * values_[static_cast<std::size_t>(j)];
      BigRational b = -acc / BigRational(BigInt(m + 1));
      b.canonicalize();
      values_.push_back(b);
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigRational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational bernoulli_number(int n) {
  require(n >= 0, "bernoulli index must be >= 0");
  return cache().get(n);
}

BigRational bernoulli_polynomial(int n, const BigRational& x) {
  require(n >= 0, "bernoulli_polynomial: n must be >= 0");
  // Horner in x over the coefficients binom(n,j) B_j of x^{n-j}
  BigRational acc = 0;
  for (int j = 0; j <= n; ++j) {
    acc = acc * x + BigRational(binomial(n, j)) * bernoulli_number(j);
  }
  acc.canonicalize();
  return acc;
}

PeriodicChar::PeriodicChar(int m, int a) : m_(m), a_(a) {
  require(m >= 2, "character requires m >= 2");
  require(a >= 0 && a <= m - 2, "character requires 0 <= a <= m-2");
}

int PeriodicChar::operator()(long n) const {
  const long f = 2L * m_;
  long r = n % f;
  if (r < 0) r += f;
  if (r == m_ - 1 - a_) return 1;
  if (r == m_ + 1 + a_) return -1;
  return 0;
}

int chi_eval(const PeriodicChar& chi, long n) { return chi(n); }

std::vector<BigInt> char_values(const PeriodicChar& chi) {
  std::vector<BigInt> v;
  for (long n = 1; n <= chi.modulus(); ++n) v.emplace_back(chi(n));
  return v;
}

BigRational l_value(int k, const std::vector<BigInt>& values) {
  require(k >= 0, "l_value: k must be >= 0");
  require(!values.empty(), "l_value: empty period");
  const long f = static_cast<long>(values.size());
  BigInt total = 0;
  for (const auto& v : values) total += v;
  require(total == 0, "l_value: sequence does not have mean zero");
  BigRational s = 0;
  for (long n = 1; n <= f; ++n) {
    const auto& c = values[static_cast<std::size_t>(n - 1)];
    if (c == 0) continue;
    s += BigRational(c) * bernoulli_polynomial(k + 1, rat(n, f));
  }
  BigInt fk;
  mpz_pow_ui(fk.get_mpz_t(), BigInt(f).get_mpz_t(), static_cast<unsigned long>(k));
  BigRational out = -rat(fk, k + 1) * s;
  out.canonicalize();
  return out;
}

HPComplex l_value(int k, const std::vector<HPComplex>& values, Bits bits) {
  require(k >= 0, "l_value: k must be >= 0");
  require(!values.empty(), "l_value: empty period");
  const long f = static_cast<long>(values.size());
  HPComplex total(bits);
  for (const auto& v : values) total += v;
  const Real tol = pow2(-(bits.value - 8), bits);
  require(abs(total) <= tol, "l_value: sequence does not have mean zero");
  HPComplex s(bits);
  for (long n = 1; n <= f; ++n) {
    const Real b(bernoulli_polynomial(k + 1, rat(n, f)), bits);
    s += values[static_cast<std::size_t>(n - 1)] * b;
  }
  BigInt fk;
  mpz_pow_ui(fk.get_mpz_t(), BigInt(f).get_mpz_t(), static_cast<unsigned long>(k));
  const Real scale(rat(-fk, k + 1), bits);
  return s * scale;
}

}  // namespace qlf
