#include "qlf/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qlf/numeric.hpp"
#include "qlf/qbinomial.hpp"

namespace qlf {

namespace {

void check_ma(int m, int a) {
  require(m >= 2, "theta series require m >= 2");
  require(a >= 0 && a <= m - 2, "theta series require 0 <= a <= m-2");
}

// q -> -q on an integer-exponent series.
FormalSeries negate_q(const FormalSeries& s) {
  require(s.denom() == 1, "negate_q expects integer exponents");
  std::vector<FormalSeries::Term> t = s.terms();
  for (auto& x : t) {
    if (x.k % 2 != 0) x.c = -x.c;
  }
  return FormalSeries::from_terms(std::move(t), 1, s.order());
}

FormalSeries power(const FormalSeries& s, int e) {
  FormalSeries r = s;
  for (int i = 1; i < e; ++i) r = r * s;
  return r;
}

IdentityReport compare_series(std::string name, const FormalSeries& lhs, const FormalSeries& rhs, long q_order) {
  const BigRational qo(q_order);
  if (lhs.order() < qo || rhs.order() < qo) {
    throw std::logic_error(name + ": series not determined to the requested order");
  }
  IdentityReport rep;
  rep.name = std::move(name);
  const FormalSeries l = lhs.truncated(qo);
  const FormalSeries r = rhs.truncated(qo);
  rep.coefficients_checked = static_cast<long>(std::max(l.terms().size(), r.terms().size()));
  if (auto e = first_mismatch(l, r)) {
    rep.mismatch = Mismatch{"q", *e, l.coeff(*e), r.coeff(*e)};
    rep.passed = false;
  } else {
    rep.passed = true;
  }
  return rep;
}

// sum over n >= 1 (n >= 0 when include_zero) of weight(n) e^{pi i tau n^2/2m}
template <class Weight>
HPComplex q_sum(int m, const HPComplex& tau, bool include_zero, Weight weight) {
  require(tau.imag().sign() > 0, "tau must lie in the upper half plane");
  const Bits bits = tau.precision();
  const Bits work{bits.value + 16};
  const HPComplex t = tau.with_precision(work);
  const Real pi = Real::pi(work);
  const HPComplex unit(Real(0L, work), pi / (2L * m));  // pi i/(2m)
  const Real tol = pow2(-(bits.value - 32), work);
  HPComplex s(work);
  int small = 0;
  for (long n = include_zero ? 0 : 1;; ++n) {
    const long w = weight(n);
    if (w == 0) continue;
    HPComplex term = exp(unit * t * Real(n * n, work)) * w;
    s += term;
    if (abs(term) < tol) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return s.with_precision(bits);
}

}  // namespace

FormalSeries theta_series(int m, int a, long q_order) {
  check_ma(m, a);
  const PeriodicChar chi(m, a);
  const long D = 4L * m;
  std::vector<FormalSeries::Term> t;
  for (long n = 1; n * n < D * q_order; ++n) {
    const int c = chi(n);
    if (c != 0) t.push_back({n * n, BigInt(2 * n * c)});
  }
  return FormalSeries::from_terms(std::move(t), D, BigRational(q_order));
}

FormalSeries eichler_series(int m, int a, long q_order) {
  check_ma(m, a);
  const PeriodicChar chi(m, a);
  const long D = 4L * m;
  std::vector<FormalSeries::Term> t;
  for (long n = 0; n * n < D * q_order; ++n) {
    const int c = chi(n);
    if (c != 0) t.push_back({n * n, BigInt(static_cast<long>(m) * c)});
  }
  return FormalSeries::from_terms(std::move(t), D, BigRational(q_order));
}

HPComplex theta_eval(int m, int a, const HPComplex& tau) {
  check_ma(m, a);
  const PeriodicChar chi(m, a);
  return q_sum(m, tau, false, [&](long n) { return 2 * n * chi(n); });
}

HPComplex eichler_eval(int m, int a, const HPComplex& tau) {
  check_ma(m, a);
  const PeriodicChar chi(m, a);
  return q_sum(m, tau, true, [&](long n) { return static_cast<long>(m) * chi(n); });
}

HPComplex eichler_at_rational(int m, int a, long M, long N, Bits bits) {
  check_ma(m, a);
  require(N > 0, "eichler_at_rational requires N > 0");
  require(std::gcd(M, N) == 1, "eichler_at_rational requires gcd(M, N) = 1");
  const PeriodicChar chi(m, a);
  const long mN = static_cast<long>(m) * N;
  const long period = 4 * mN;  // e^{pi i k/(2mN)} depends on k mod 4mN
  const Bits work{bits.value + 16};
  HPComplex s(work);
  for (long n = 0; n <= mN; ++n) {
    const int c = chi(n);
    if (c == 0) continue;
    long k = ((n * n) % period) * (M % period) % period;
    if (k < 0) k += period;
    // m (1 - n/(mN)) = (mN - n)/N
    s += unit_root(k, 2 * mN, work) * Real(rat(c * (mN - n), N), work);
  }
  return s.with_precision(bits);
}

ModularMatrix::ModularMatrix(int m, Bits bits) : m_(m) {
  require(m >= 2, "modular matrix requires m >= 2");
  const Real scale = sqrt(Real(rat(2, m), bits));
  for (int a = 1; a < m; ++a) {
    for (int b = 1; b < m; ++b) {
      // sin(ab pi/m) with the argument reduced exactly
      v_.push_back(unit_root(static_cast<long>(a) * b, m, bits).imag() * scale);
    }
  }
}

Real ModularMatrix::involution_defect() const {
  const int d = dim();
  const Bits bits = v_.front().precision();
  Real worst(bits);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Real s(bits);
      for (int k = 1; k <= d; ++k) s += (*this)(i, k) * (*this)(k, j);
      if (i == j) s -= Real(1L, bits);
      s = abs(s);
      if (s > worst) worst = s;
    }
  }
  return worst;
}

Real ModularMatrix::symmetry_defect() const {
  const int d = dim();
  Real worst(v_.front().precision());
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Real s = abs((*this)(i, j) - (*this)(j, i));
      if (s > worst) worst = s;
    }
  }
  return worst;
}

ModularMatrix modular_matrix(int m, Bits bits) { return ModularMatrix(m, bits); }

std::vector<HPComplex> theta_vector(int m, const HPComplex& tau) {
  std::vector<HPComplex> v;
  for (int j = 1; j <= m - 1; ++j) v.push_back(theta_eval(m, m - 1 - j, tau));
  return v;
}

Real s_transform_check(int m, const HPComplex& tau) {
  require(tau.imag().sign() > 0, "tau must lie in the upper half plane");
  const Bits bits = tau.precision();
  const HPComplex i_unit(Real(0L, bits), Real(1L, bits));
  const HPComplex minus_inv = -(HPComplex(Real(1L, bits)) / tau);
  const std::vector<HPComplex> lhs = theta_vector(m, tau);
  const std::vector<HPComplex> rhs_in = theta_vector(m, minus_inv);
  const ModularMatrix M(m, bits);
  const HPComplex factor = pow(i_unit / tau, HPComplex(Real(rat(3, 2), bits)));
  Real worst(bits);
  for (int j = 1; j <= m - 1; ++j) {
    HPComplex acc(bits);
    for (int k = 1; k <= m - 1; ++k) acc += rhs_in[static_cast<std::size_t>(k - 1)] * M(j, k);
    Real r = abs(lhs[static_cast<std::size_t>(j - 1)] - factor * acc);
    if (r > worst) worst = r;
  }
  return worst;
}

TTransformReport t_transform_check(int m, const std::vector<HPComplex>& taus, long q_order) {
  require(m >= 2, "t_transform_check requires m >= 2");
  TTransformReport rep;
  rep.m = m;
  rep.exponents_ok = true;
  const Bits bits = taus.empty() ? kDefaultPrecision : taus.front().precision();
  rep.max_residual = Real(bits);
  for (int a = 1; a <= m - 1; ++a) {
    // Phi^{(m-1-a)} picks up e^{a^2 pi i/2m}: exponents are a^2/4m mod 1
    const FormalSeries s = theta_series(m, m - 1 - a, q_order);
    const BigRational base = rat(static_cast<long>(a) * a, 4L * m);
    for (const auto& t : s.terms()) {
      const BigRational d = rat(t.k, s.denom()) - base;
      if (d.get_den() != 1) rep.exponents_ok = false;
    }
    const HPComplex phase = unit_root(static_cast<long>(a) * a, 2L * m, bits);
    for (const auto& tau : taus) {
      const HPComplex one(Real(1L, tau.precision()));
      const HPComplex shifted = theta_eval(m, m - 1 - a, tau + one);
      const HPComplex base_val = theta_eval(m, m - 1 - a, tau);
      Real r = abs(shifted - phase * base_val);
      if (r > rep.max_residual) rep.max_residual = r;
    }
  }
  return rep;
}

EtaCase parse_eta_case(const std::string& s) {
  if (s == "m2") return EtaCase::m2;
  if (s == "m3") return EtaCase::m3;
  if (s == "m4") return EtaCase::m4;
  throw PreconditionError("eta case must be one of m2, m3, m4");
}

std::string to_string(EtaCase c) {
  switch (c) {
    case EtaCase::m2: return "m2";
    case EtaCase::m3: return "m3";
    case EtaCase::m4: return "m4";
  }
  return "unknown";
}

std::vector<IdentityReport> eta_identity_check(EtaCase c, long q_order) {
  require(q_order >= 1, "q_order must be >= 1");
  // a little headroom so products and quotients stay determined to q_order
  const BigRational work(q_order + 2);
  auto eta = [&](long num, long den) { return dedekind_eta(rat(num, den), work); };
  std::vector<IdentityReport> out;
  switch (c) {
    case EtaCase::m2: {
      out.push_back(compare_series("phi2_0 = 2 eta^3", theta_series(2, 0, q_order), power(eta(1, 1), 3).scaled(2), q_order));
      break;
    }
    case EtaCase::m3: {
      const FormalSeries e1 = eta(1, 1);
      const FormalSeries e2 = eta(2, 1);
      const FormalSeries e4 = eta(4, 1);
      const FormalSeries r0 = series_divide_checked(power(e1 * e4, 2), e2).scaled(4);
      out.push_back(compare_series("phi3_0 = 4 (eta(t) eta(4t))^2 / eta(2t)", theta_series(3, 0, q_order), r0, q_order));
      const FormalSeries r1 = series_divide_checked(power(e2, 5), power(e4, 2)).scaled(2);
      out.push_back(compare_series("phi3_1 = 2 eta(2t)^5 / eta(4t)^2", theta_series(3, 1, q_order), r1, q_order));
      // eta(t+1/2)^2 = e^{pi i/12} q^{1/12} prod (1 - (-q)^n)^2; the phase cancels the prefactor
      const BigRational w = work + 1;
      const FormalSeries prod = negate_q(dedekind_eta(BigRational(1), w).shifted(rat(-1, 24)).normalized());
      const FormalSeries alt = series_divide_checked(power(e2, 5), power(prod, 2).shifted(rat(1, 12))).scaled(4);
      out.push_back(compare_series("phi3_0 = 4 e^{pi i/12} eta(2t)^5 / eta(t+1/2)^2", theta_series(3, 0, q_order), alt, q_order));
      break;
    }
    case EtaCase::m4: {
      const FormalSeries e1 = eta(1, 1);
      const FormalSeries eh = eta(1, 2);
      const FormalSeries e2 = eta(2, 1);
      out.push_back(compare_series("phi4_1 = 4 eta(2t)^3", theta_series(4, 1, q_order), power(e2, 3).scaled(4), q_order));
      const FormalSeries x = series_divide_checked(power(e1, 3), eh * e2);
      const FormalSeries x3 = power(x, 3);
      const FormalSeries h3 = power(eh, 3);
      out.push_back(compare_series("phi4_0 = X^3 - eta(t/2)^3", theta_series(4, 0, q_order), x3 - h3, q_order));
      out.push_back(compare_series("phi4_2 = X^3 + eta(t/2)^3", theta_series(4, 2, q_order), x3 + h3, q_order));
      break;
    }
  }
  return out;
}

FormalSeries su2_character(int level, int lambda, long q_order) {
  require(level >= 0, "level must be >= 0");
  require(lambda >= 0 && lambda <= level, "character requires 0 <= lambda <= level");
  const BigRational work(q_order + 2);
  const FormalSeries phi = theta_series(level + 2, level - lambda, q_order + 2);
  const FormalSeries eta3 = power(dedekind_eta(BigRational(1), work), 3);
  const FormalSeries q = series_divide_checked(phi, eta3);
  std::vector<FormalSeries::Term> half;
  for (const auto& t : q.terms()) {
    if (!mpz_divisible_ui_p(t.c.get_mpz_t(), 2)) throw std::logic_error("character coefficient is not even");
    half.push_back({t.k, BigInt(t.c / 2)});
  }
  return FormalSeries::from_terms(std::move(half), q.denom(), q.order()).truncated(BigRational(q_order)).normalized();
}

ZagierReport zagier_identity_check(long q_order, int sign, long window) {
  require(q_order >= 1, "q_order must be >= 1");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  require(window >= 2, "window must be >= 2");
  ZagierReport rep;
  rep.q_order = q_order;
  rep.window = window;
  const auto L = static_cast<std::size_t>(q_order);
  // (-1; q^2)_{n+1} = prod_{k=0}^{n} (1 + q^{2k}) stops changing mod q^L once 2n >= L
  const long n_max = q_order / 2 + window + 2;
  rep.terms_used = n_max + 1;
  Poly p(L);
  p[0] = 2;
  Poly total(L);
  std::vector<Poly> averages;
  Poly prev_total;
  for (long n = 0; n <= n_max + 1; ++n) {
    if (n > 0) {
      const auto e = static_cast<std::size_t>(2 * n);
      for (std::size_t i = L; i-- > e;) p[i] += p[i - e];
    }
    const int s = (sign < 0 && n % 2 == 1) ? -1 : 1;
    for (std::size_t i = 0; i < L; ++i) {
      if (s > 0) total[i] += p[i];
      else total[i] -= p[i];
    }
    if (n > 0) {
      Poly avg(L);
      for (std::size_t i = 0; i < L; ++i) {
        BigInt t = prev_total[i] + total[i];
        if (!mpz_divisible_ui_p(t.get_mpz_t(), 2)) throw std::logic_error("averaged partial sum is not integral");
        avg[i] = t / 2;
      }
      averages.push_back(std::move(avg));
    }
    prev_total = total;
  }
  // the last `window` averages must agree coefficientwise
  const Poly& last = averages.back();
  rep.stabilized = true;
  for (std::size_t i = 0; i < L && rep.stabilized; ++i) {
    for (std::size_t w = 1; w < static_cast<std::size_t>(window); ++w) {
      if (averages[averages.size() - 1 - w][i] != last[i]) {
        rep.stabilized = false;
        rep.unstable_exponent = BigRational(static_cast<long>(i));
        break;
      }
    }
  }
  rep.averaged = FormalSeries::from_dense(last, BigRational(q_order)).scaled(3).shifted(rat(1, 12)).with_denom(12);
  if (!rep.stabilized) return rep;
  const IdentityReport cmp = compare_series("zagier", eichler_series(3, 1, q_order), rep.averaged, q_order);
  rep.matches = cmp.passed;
  rep.mismatch = cmp.mismatch;
  return rep;
}

RadialLimit eichler_radial_limit(int m, int a, long N, const Real& t0, int levels) {
  check_ma(m, a);
  require(N > 0, "N must be > 0");
  require(t0.sign() > 0, "t0 must be positive");
  require(levels >= 1 && levels <= 12, "levels must lie in 1..12");
  const Bits bits = t0.precision();
  const Real two_pi = Real::pi(bits) * 2L;
  RadialLimit out;
  const Real re = Real(rat(1, N), bits);
  for (int j = 0; j < levels; ++j) {
    const Real t = ldexp(t0, -j);
    out.t_values.push_back(t);
    out.samples.push_back(eichler_eval(m, a, HPComplex(re, t / two_pi)));
  }
  // Neville-style table on the halving grid: column k kills the t^k term
  std::vector<HPComplex> col = out.samples;
  for (int k = 1; k < levels; ++k) {
    const long p = 1L << k;
    for (std::size_t j = 0; j + 1 < col.size(); ++j) col[j] = (col[j + 1] * p - col[j]) / (p - 1);
    col.pop_back();
  }
  out.extrapolated = col.front();
  return out;
}

}  // namespace qlf
