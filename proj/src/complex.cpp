#include "qlf/complex.hpp"

#include <algorithm>
#include <utility>

namespace qlf {

HPComplex::HPComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const auto p = std::max(re_.precision().value, im_.precision().value);
  if (re_.precision().value != p) re_ = re_.with_precision(Bits{p});
  if (im_.precision().value != p) im_ = im_.with_precision(Bits{p});
}

HPComplex::HPComplex(const Real& re) : re_(re), im_(re.precision()) {}

HPComplex HPComplex::with_precision(Bits bits) const {
  return {re_.with_precision(bits), im_.with_precision(bits)};
}

HPComplex& HPComplex::operator+=(const HPComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  const Real d = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / d;
  Real im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

HPComplex& HPComplex::operator*=(long o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

HPComplex& HPComplex::operator/=(long o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

void HPComplex::add_product(const HPComplex& b, const HPComplex& c) {
  // fma/fms keep one rounding per part
  Real t(re_.precision());
  mpfr_fmms(t.get(), b.re_.get(), c.re_.get(), b.im_.get(), c.im_.get(), MPFR_RNDN);
  re_ += t;
  mpfr_fmma(t.get(), b.re_.get(), c.im_.get(), b.im_.get(), c.re_.get(), MPFR_RNDN);
  im_ += t;
}

std::string HPComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  std::string i = im_.to_string(digits);
  if (!i.empty() && i[0] != '-') i = "+" + i;
  return s + i + "i";
}

HPComplex conj(const HPComplex& z) { return {z.real(), -z.imag()}; }

Real norm(const HPComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const HPComplex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real arg(const HPComplex& z) { return atan2(z.imag(), z.real()); }

HPComplex exp(const HPComplex& z) {
  const Real r = exp(z.real());
  return {r * cos(z.imag()), r * sin(z.imag())};
}

HPComplex log(const HPComplex& z) { return {log(abs(z)), arg(z)}; }

HPComplex pow(const HPComplex& z, const HPComplex& w) {
  if (z.real().is_zero() && z.imag().is_zero()) return HPComplex(z.precision());
  return exp(w * log(z));
}

HPComplex sqrt(const HPComplex& z) {
  if (z.real().is_zero() && z.imag().is_zero()) return HPComplex(z.precision());
  const Real r = sqrt(abs(z));
  const Real half = arg(z) / 2L;
  return {r * cos(half), r * sin(half)};
}

HPComplex expi(const Real& theta) {
  Real s(theta.precision());
  Real c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

HPComplex unit_root(long p, long q, Bits bits) {
  return unit_root(BigRational(p, q), bits);
}

HPComplex unit_root(const BigRational& t, Bits bits) {
  // reduce t modulo 2 exactly so the angle passed to MPFR stays in [0, 2pi)
  BigRational r = t;
  r.canonicalize();
  BigInt two_den = 2 * r.get_den();
  BigInt num = r.get_num() % two_den;
  if (num < 0) num += two_den;
  const BigRational red(num, r.get_den());
  // guard bits against the pi multiplication
  const Bits work{bits.value + 16};
  Real theta = Real::pi(work) * Real(red, work);
  HPComplex z = expi(theta);
  return z.with_precision(bits);
}

Real max_abs_diff(const HPComplex& a, const HPComplex& b) {
  const Real dr = abs(a.real() - b.real());
  const Real di = abs(a.imag() - b.imag());
  return dr < di ? di : dr;
}

}  // namespace qlf
