#pragma once

#include <string>

#include "qlf/real.hpp"

namespace qlf {

/// Arbitrary-precision complex scalar; both parts share one precision.
class HPComplex {
 public:
  HPComplex() : HPComplex(kDefaultPrecision) {}
  explicit HPComplex(Bits bits) : re_(bits), im_(bits) {}
  HPComplex(Real re, Real im);
  HPComplex(const Real& re);  // NOLINT(google-explicit-constructor)
  HPComplex(double re, double im, Bits bits) : re_(re, bits), im_(im, bits) {}

  [[nodiscard]] const Real& real() const { return re_; }
  [[nodiscard]] const Real& imag() const { return im_; }
  [[nodiscard]] Bits precision() const { return re_.precision(); }
  [[nodiscard]] HPComplex with_precision(Bits bits) const;

  HPComplex& operator+=(const HPComplex& o);
  HPComplex& operator-=(const HPComplex& o);
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);
  HPComplex& operator*=(const Real& o);
  HPComplex& operator*=(long o);
  HPComplex& operator/=(long o);

  friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
  friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
  friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
  friend HPComplex operator*(HPComplex a, const Real& b) { return a *= b; }
  friend HPComplex operator*(const Real& b, HPComplex a) { return a *= b; }
  friend HPComplex operator*(HPComplex a, long b) { return a *= b; }
  friend HPComplex operator*(long b, HPComplex a) { return a *= b; }
  friend HPComplex operator/(HPComplex a, long b) { return a /= b; }
  friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re_, -a.im_); }

  /// a += b * c without temporaries for the product's parts.
  void add_product(const HPComplex& b, const HPComplex& c);

  [[nodiscard]] std::string to_string(int digits = 20) const;

 private:
  Real re_;
  Real im_;
};

HPComplex conj(const HPComplex& z);
Real abs(const HPComplex& z);
Real norm(const HPComplex& z);  // |z|^2
Real arg(const HPComplex& z);   // in (-pi, pi]
HPComplex exp(const HPComplex& z);
HPComplex log(const HPComplex& z);  // principal branch
HPComplex pow(const HPComplex& z, const HPComplex& w);  // principal branch
HPComplex sqrt(const HPComplex& z);  // principal branch

/// e^{i theta}.
HPComplex expi(const Real& theta);
/// e^{pi i p / q} for an integer p and positive integer q.
HPComplex unit_root(long p, long q, Bits bits);
HPComplex unit_root(const BigRational& turns_over_two, Bits bits);

/// max(|re|, |im|) of a difference; the norm used for residuals.
Real max_abs_diff(const HPComplex& a, const HPComplex& b);

}  // namespace qlf
