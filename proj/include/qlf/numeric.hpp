#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlf/complex.hpp"
#include "qlf/real.hpp"

namespace qlf {

/// Raised when an operation is called outside its domain. The CLI maps this
/// to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

/// Bernoulli number B_n (with B_1 = -1/2), from a process-wide cache.
BigRational bernoulli_number(int n);

/// B_n(x) = sum_j binom(n,j) B_j x^{n-j}.
BigRational bernoulli_polynomial(int n, const BigRational& x);

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// The odd function chi_{2m}^{(a)} of period 2m: +1 at m-1-a, -1 at m+1+a.
class PeriodicChar {
 public:
  PeriodicChar(int m, int a);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int a() const { return a_; }
  [[nodiscard]] int modulus() const { return 2 * m_; }
  /// Residue carrying +1, i.e. m-1-a.
  [[nodiscard]] int plus_residue() const { return m_ - 1 - a_; }
  [[nodiscard]] int minus_residue() const { return m_ + 1 + a_; }

  [[nodiscard]] int operator()(long n) const;

 private:
  int m_;
  int a_;
};

int chi_eval(const PeriodicChar& chi, long n);

/// L(-k, C) for an exact integer-valued sequence C of period f = values.size()
/// (values[i] = C(i+1)). Requires zero mean.
BigRational l_value(int k, const std::vector<BigInt>& values);

/// Same for a numeric sequence; zero-mean tolerance 2^{-(prec-8)}.
HPComplex l_value(int k, const std::vector<HPComplex>& values, Bits bits);

/// Convenience: the character's period as an integer sequence C(1..2m).
std::vector<BigInt> char_values(const PeriodicChar& chi);

}  // namespace qlf
