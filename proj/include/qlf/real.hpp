#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace qlf {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Precision in bits. Kept distinct from integer values so constructors
/// like Real(5, Bits{128}) cannot be confused.
struct Bits {
  mpfr_prec_t value;
};

inline constexpr Bits kDefaultPrecision{256};

/// p/q in lowest terms (q != 0).
inline BigRational rat(const BigInt& p, const BigInt& q) {
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

/// Arbitrary-precision real number over MPFR.
///
/// Binary operations produce a result carrying the larger of the two operand
/// precisions; all rounding is to nearest.
class Real {
 public:
  Real() : Real(kDefaultPrecision) {}
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(double value, Bits bits);
  Real(const BigInt& value, Bits bits);
  Real(const BigRational& value, Bits bits);
  Real(std::string_view decimal, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Same value rounded to a new precision.
  [[nodiscard]] Real with_precision(Bits bits) const;

  [[nodiscard]] Bits precision() const { return Bits{mpfr_get_prec(v_)}; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits
  /// (0 picks enough digits to round-trip the precision).
  [[nodiscard]] std::string to_string(int digits = 0) const;

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  /// log2|x|, or -inf for zero.
  [[nodiscard]] double log2_abs() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real atan2(const Real& y, const Real& x);
  friend Real pow(const Real& x, const Real& y);
  friend Real abs(const Real& x);
  /// x * 2^e, exact.
  friend Real ldexp(const Real& x, long e);

  static Real pi(Bits bits);

  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  [[nodiscard]] mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

/// 2^e at the given precision (exact).
Real pow2(long e, Bits bits);

}  // namespace qlf
