#pragma once

#include <string>
#include <vector>

#include "qlf/real.hpp"

namespace qlf {

enum class EulerRoute { generating_function, bernoulli };

std::string to_string(EulerRoute r);

/// E_k^{(m;a)} for k = 0..k_max.
struct EulerNumberTable {
  int m = 0;
  int a = 0;
  EulerRoute route = EulerRoute::generating_function;
  std::vector<BigRational> values;
};

/// Expands m sh((a+1)z)/sh(mz) in w = z^2 over the rationals and reads off
/// E_k = (2k)! [w^k].
EulerNumberTable euler_numbers_gf(int m, int a, int k_max = 20);

/// -m (2m)^{2k}/(2k+1) (B_{2k+1}((m-1-a)/2m) - B_{2k+1}((m+1+a)/2m)).
BigRational euler_number_bernoulli(int m, int a, int k);
EulerNumberTable euler_numbers_bernoulli(int m, int a, int k_max = 20);

/// Checks that (u^{m-1-a} - u^{m+1+a}) / (1 - u^{2m}), i.e. sh((a+1)z)/sh(mz)
/// in u = e^{-z}, has coefficients chi(n) for n < order.
bool chi_generating_check(int m, int a, int order);

}  // namespace qlf
