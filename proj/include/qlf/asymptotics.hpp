#pragma once

#include <vector>

#include "qlf/complex.hpp"
#include "qlf/invariants.hpp"

namespace qlf {

inline constexpr int kMaxTailOrder = 12;

struct AsymptoticExpansion {
  int m = 0;
  int a = 0;
  long N = 0;
  HPComplex leading_theta_part;     // the sqrt(N)-weighted k-sum
  std::vector<HPComplex> tail;      // tail[K] = sum_{k<=K} E_k/k! (pi i/2mN)^k
  HPComplex phase;                  // e^{-(m-1-a)^2 pi i/(2mN)}

  /// leading + tail[K]; approximates e^{(m-1-a)^2 pi i/(2mN)} Y_m^{(a)}.
  [[nodiscard]] HPComplex value(int K) const;
};

AsymptoticExpansion build_expansion(int m, int a, long N, int K_max, Bits bits = kDefaultPrecision);

/// The a = 0 expansion written with the phase distributed over both parts,
/// built without going through build_expansion. Approximates Y_m^{(0)}.
HPComplex corollary_expansion(int m, long N, int K, Bits bits = kDefaultPrecision);

/// |Phi~_m^{(a)}(1/N) - e^{(m-1-a)^2 pi i/(2mN)} Y_m^{(a)}(omega)|.
Real conjecture2_residual(int m, int a, const RootContext& ctx);

struct ErrorScanRow {
  long N = 0;
  HPComplex exact;
  HPComplex approx;
  Real abs_err;
};

struct ErrorScan {
  int m = 0;
  int a = 0;
  int K = 0;
  std::vector<ErrorScanRow> rows;
  double slope = 0;  // least-squares fit of log err against log N
};

ErrorScan conjecture1_error_scan(int m, int a, int K, const std::vector<long>& N_list,
                                 Bits bits = kDefaultPrecision, int threads = 1);

struct VolumeScanRow {
  long N = 0;
  Real value;  // (2 pi/N) log |<T(2,2m)>_N|
};

struct VolumeScan {
  int m = 0;
  std::vector<VolumeScanRow> rows;
  bool decreasing = false;  // |value| strictly decreasing along the list
};

VolumeScan volume_conjecture_check(int m, const std::vector<long>& N_list, Bits bits = kDefaultPrecision,
                                   int threads = 1);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qlf
