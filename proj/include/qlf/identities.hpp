#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlf/series.hpp"

namespace qlf {

struct KSeriesSpec {
  int m = 2;
  int a = 0;
  long q_order = 100;
  long x_order = 40;
};

void validate(const KSeriesSpec& spec);

/// Where two sides of an identity first disagree.
struct Mismatch {
  std::string location;  // x-degree or multidegree
  BigRational q_exponent;
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  std::string name;
  bool passed = false;
  long coefficients_checked = 0;
  std::optional<Mismatch> mismatch;
};

/// K_m^{(a)}(x) from the nested q-binomial sum, truncated at (q_order, x_order).
BiSeries k_series(const KSeriesSpec& spec);
/// sum_{n>=0} chi(n) q^{(n^2-r^2)/4m} x^{(n-r)/2}, r = m-1-a.
BiSeries k_rhs(const KSeriesSpec& spec);

/// Adds `delta` to one coefficient of the left side before comparing.
struct Perturbation {
  long x_degree = 0;
  long q_exponent = 0;
  BigInt delta = 1;
};

IdentityReport verify_main_identity(const KSeriesSpec& spec, const std::optional<Perturbation>& perturb = std::nullopt);
/// K(x) = 1 - q^{a+1} x^{a+1} + x^m q^{2m-1-a} K(q^2 x) on k_series.
IdentityReport verify_difference_equation(const KSeriesSpec& spec);

/// Multivariate K_m^{(a)}(x_1, ..., x_{m-1}); key = (c_1, ..., c_{m-1}).
/// An absent key has no terms below the order.
using MultiIndex = std::vector<int>;
using MultiSeries = std::map<MultiIndex, FormalSeries>;

/// Coefficients of K_m^{(a)}(x_1..x_{m-1}) for every c_i <= cap, each
/// known below `order`.
MultiSeries k_multi(int m, int a, int cap, long order);

/// Checks the q-binomial based recurrences (and the collapse x_i = x back
/// to k_series) on the multivariate expansion. Recurrences that need a >= 1
/// are skipped for a = 0.
std::vector<IdentityReport> verify_multivariate_recurrences(int m, int a, long q_order, int cap = 12);

/// Phi_m^{(a)} from the weighted resummation 4 q^{r^2/4m} sum (c_1+..+c_{m-1} + r/2) (...).
FormalSeries phi_weighted_series(int m, int a, long q_order);

/// m q^{r^2/4m} K_m^{(a)}(1).
FormalSeries k_at_one_scaled(int m, int a, long q_order);

}  // namespace qlf
