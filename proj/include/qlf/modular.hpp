#pragma once

#include <string>
#include <vector>

#include "qlf/complex.hpp"
#include "qlf/identities.hpp"
#include "qlf/series.hpp"

namespace qlf {

/// Phi_m^{(a)} = sum_{n in Z} n chi(n) q^{n^2/4m} on the grid D = 4m.
FormalSeries theta_series(int m, int a, long q_order);
/// Phi~_m^{(a)} = m sum_{n>=0} chi(n) q^{n^2/4m}.
FormalSeries eichler_series(int m, int a, long q_order);

/// Numeric Phi_m^{(a)}(tau); stops after three consecutive contributing
/// terms fall below 2^{-(prec-32)}. Requires Im tau > 0.
HPComplex theta_eval(int m, int a, const HPComplex& tau);
HPComplex eichler_eval(int m, int a, const HPComplex& tau);

/// Phi~_m^{(a)}(M/N) = m sum_{n=0}^{mN} chi(n) (1 - n/(mN)) e^{n^2 M pi i/(2mN)}.
HPComplex eichler_at_rational(int m, int a, long M, long N, Bits bits);

/// (M_m)_{ab} = sqrt(2/m) sin(ab pi/m), 1 <= a,b <= m-1, row-major.
class ModularMatrix {
 public:
  ModularMatrix(int m, Bits bits);
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int dim() const { return m_ - 1; }
  /// 1-based entry.
  [[nodiscard]] const Real& operator()(int a, int b) const {
    return v_[static_cast<std::size_t>((a - 1) * dim() + (b - 1))];
  }
  /// max |(M M)_{ab} - delta_{ab}|.
  [[nodiscard]] Real involution_defect() const;
  /// max |M_{ab} - M_{ba}|.
  [[nodiscard]] Real symmetry_defect() const;

 private:
  int m_;
  std::vector<Real> v_;
};

ModularMatrix modular_matrix(int m, Bits bits);

/// The vector (Phi^{(m-2)}, ..., Phi^{(0)})(tau).
std::vector<HPComplex> theta_vector(int m, const HPComplex& tau);

/// max-norm of Phi(tau) - (i/tau)^{3/2} M Phi(-1/tau), principal branch.
Real s_transform_check(int m, const HPComplex& tau);

struct TTransformReport {
  int m = 0;
  bool exponents_ok = false;  // every exponent of Phi^{(m-1-a)} is a^2/4m mod 1
  Real max_residual;          // numeric check at the supplied tau values
};

TTransformReport t_transform_check(int m, const std::vector<HPComplex>& taus, long q_order = 200);

enum class EtaCase { m2, m3, m4 };
EtaCase parse_eta_case(const std::string& s);
std::string to_string(EtaCase c);

/// Coefficientwise checks of the eta-product forms of Phi_m^{(a)}.
std::vector<IdentityReport> eta_identity_check(EtaCase c, long q_order);

/// Phi_{k+2}^{(k-lambda)} / (2 eta^3), the affine su(2) level-k character.
FormalSeries su2_character(int level, int lambda, long q_order);

struct ZagierReport {
  bool stabilized = false;
  bool matches = false;
  long q_order = 0;
  long terms_used = 0;
  long window = 0;
  std::optional<BigRational> unstable_exponent;
  std::optional<Mismatch> mismatch;
  FormalSeries averaged;  // 3 q^{1/12} times the stabilized average
};

/// Averaged partial sums of sum_n sign^n (-1; q^2)_{n+1} compared with
/// Phi~_3^{(1)} / 3 q^{1/12}. sign = -1 is the identity, +1 a divergent control.
ZagierReport zagier_identity_check(long q_order, int sign = -1, long window = 8);

struct RadialLimit {
  HPComplex extrapolated;
  std::vector<HPComplex> samples;
  std::vector<Real> t_values;
};

/// Phi~_m^{(a)}(1/N + i t/2pi) at t = t0 2^{-j}, j < levels, Richardson-extrapolated
/// to t = 0 (errors are a power series in t).
RadialLimit eichler_radial_limit(int m, int a, long N, const Real& t0, int levels = 5);

}  // namespace qlf
