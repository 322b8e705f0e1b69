#include "qlf/asymptotics.hpp"

#include <cmath>
#include <future>

#include "qlf/characters.hpp"
#include "qlf/modular.hpp"
#include "qlf/numeric.hpp"

namespace qlf {

namespace {

void check_ma(int m, int a) {
  require(m >= 2, "asymptotics require m >= 2");
  require(a >= 0 && a <= m - 2, "asymptotics require 0 <= a <= m-2");
}

// Runs fn(i) for i < count on up to `threads` workers; results land by index.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t count, int threads, Fn fn) {
  std::vector<T> out(count);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// sqrt(N) e^{3 pi i/4} sqrt(2/m) sum_k (-1)^k (k-m) sin(k(a+1) pi/m) e^{-k^2 pi i N/2m}
HPComplex leading_part(int m, int a, long N, Bits bits) {
  HPComplex s(bits);
  const long two_m = 2L * m;
  for (int k = 1; k < m; ++k) {
    const Real sn = unit_root(static_cast<long>(k) * (a + 1), m, bits).imag();
    const long w = (k % 2 == 0 ? 1L : -1L) * (k - m);
    long e = -(static_cast<long>(k) * k % (2 * two_m)) * (N % (2 * two_m));
    s += unit_root(e, two_m, bits) * (sn * w);
  }
  const Real scale = sqrt(Real(N, bits)) * sqrt(Real(rat(2, m), bits));
  return s * unit_root(3, 4, bits) * scale;
}

// sum_{k<=K} E_k/k! x^k for x = pi i/(2mN), all partial sums
std::vector<HPComplex> tail_sums(int m, int a, long N, int K, Bits bits) {
  const EulerNumberTable E = euler_numbers_gf(m, a, K);
  const HPComplex x(Real(0L, bits), Real::pi(bits) / (2L * m * N));
  std::vector<HPComplex> out;
  HPComplex pw(Real(1L, bits));
  HPComplex acc(bits);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) pw = pw * x / static_cast<long>(k);
    acc += pw * Real(E.values[static_cast<std::size_t>(k)], bits);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

HPComplex AsymptoticExpansion::value(int K) const {
  require(K >= 0 && K < static_cast<int>(tail.size()), "K exceeds the built tail");
  return leading_theta_part + tail[static_cast<std::size_t>(K)];
}

AsymptoticExpansion build_expansion(int m, int a, long N, int K_max, Bits bits) {
  check_ma(m, a);
  require(N >= 1, "N must be >= 1");
  require(K_max >= 0 && K_max <= kMaxTailOrder, "K_max must lie in 0..12");
  AsymptoticExpansion e;
  e.m = m;
  e.a = a;
  e.N = N;
  // guard bits: E_k/k! grows quickly and the tail sum cancels
  const Bits work{bits.value + 32};
  e.leading_theta_part = leading_part(m, a, N, work).with_precision(bits);
  for (const auto& t : tail_sums(m, a, N, K_max, work)) e.tail.push_back(t.with_precision(bits));
  const long r = m - 1 - a;
  e.phase = unit_root(-r * r, 2L * m * N, bits);
  return e;
}

HPComplex corollary_expansion(int m, long N, int K, Bits out_bits) {
  require(m >= 2, "corollary expansion requires m >= 2");
  require(N >= 1, "N must be >= 1");
  require(K >= 0 && K <= kMaxTailOrder, "K must lie in 0..12");
  const Bits bits{out_bits.value + 32};
  const Real pi = Real::pi(bits);
  const HPComplex i_unit(Real(0L, bits), Real(1L, bits));
  const HPComplex ph = exp(i_unit * (pi * Real(rat(-(m - 1) * (m - 1), 2L * m * N), bits)));
  HPComplex lead(bits);
  for (int k = 1; k < m; ++k) {
    const Real sn = sin(pi * Real(rat(k, m), bits));
    const HPComplex osc = exp(i_unit * (pi * Real(rat(-static_cast<long>(k) * k * N, 2L * m), bits)));
    lead += osc * (sn * ((k % 2 == 0 ? 1L : -1L) * (k - m)));
  }
  lead = lead * exp(i_unit * (pi * Real(rat(3, 4), bits))) * sqrt(Real(N, bits)) * sqrt(Real(rat(2, m), bits)) * ph;
  // E_k^{(m;0)} through the Bernoulli route, independent of the table above
  HPComplex tail(bits);
  const HPComplex x = i_unit * (pi / (2L * m * N));
  for (int k = 0; k <= K; ++k) {
    tail += pow(x, HPComplex(Real(static_cast<long>(k), bits))) *
            Real(euler_number_bernoulli(m, 0, k) / BigRational(factorial(static_cast<unsigned long>(k))), bits);
  }
  return (lead + ph * tail).with_precision(out_bits);
}

Real conjecture2_residual(int m, int a, const RootContext& ctx) {
  check_ma(m, a);
  const long N = ctx.N();
  const Bits wb = ctx.work_bits();
  const long r = m - 1 - a;
  const HPComplex lhs = eichler_at_rational(m, a, 1, N, wb);
  const HPComplex rhs = unit_root(r * r, 2L * m * N, wb) * y_series(m, a, ctx);
  return abs(lhs - rhs).with_precision(ctx.bits());
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0 && y[i] > 0, "slope fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ErrorScan conjecture1_error_scan(int m, int a, int K, const std::vector<long>& N_list, Bits bits, int threads) {
  check_ma(m, a);
  require(K >= 0 && K <= kMaxTailOrder, "K must lie in 0..12");
  require(!N_list.empty(), "N list must not be empty");
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    require(N_list[i] >= 1, "N must be >= 1");
    require(i == 0 || N_list[i] > N_list[i - 1], "N list must be strictly ascending");
  }
  ErrorScan scan;
  scan.m = m;
  scan.a = a;
  scan.K = K;
  scan.rows = map_indices<ErrorScanRow>(N_list.size(), threads, [&](std::size_t i) {
    const long N = N_list[i];
    const RootContext ctx(N, bits);
    const long r = m - 1 - a;
    ErrorScanRow row;
    row.N = N;
    row.exact = (unit_root(r * r, 2L * m * N, ctx.work_bits()) * y_series(m, a, ctx)).with_precision(bits);
    row.approx = build_expansion(m, a, N, K, bits).value(K);
    row.abs_err = abs(row.exact - row.approx);
    return row;
  });
  std::vector<double> xs, ys;
  for (const auto& row : scan.rows) {
    xs.push_back(static_cast<double>(row.N));
    ys.push_back(row.abs_err.to_double());
  }
  scan.slope = scan.rows.size() >= 2 ? loglog_slope(xs, ys) : 0.0;
  return scan;
}

VolumeScan volume_conjecture_check(int m, const std::vector<long>& N_list, Bits bits, int threads) {
  require(m >= 1, "volume check requires m >= 1");
  require(!N_list.empty(), "N list must not be empty");
  for (long N : N_list) require(N >= 1, "N must be >= 1");
  VolumeScan scan;
  scan.m = m;
  scan.rows = map_indices<VolumeScanRow>(N_list.size(), threads, [&](std::size_t i) {
    const long N = N_list[i];
    const RootContext ctx(N, bits);
    const HPComplex v = m == 1 ? kashaev_nested(1, ctx).value : kashaev_theta(m, ctx).value;
    VolumeScanRow row;
    row.N = N;
    row.value = (log(abs(v)) * Real::pi(ctx.work_bits()) * 2L / N).with_precision(bits);
    return row;
  });
  scan.decreasing = true;
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    if (!(abs(scan.rows[i].value) < abs(scan.rows[i - 1].value))) scan.decreasing = false;
  }
  return scan;
}

}  // namespace qlf
