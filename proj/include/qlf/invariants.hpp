#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qlf/complex.hpp"
#include "qlf/real.hpp"

namespace qlf {

class RootContext;

/// sum_j c_j x^j in Z[x]/(x^{2N} - 1); x stands for zeta = e^{i pi/N}.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(long two_n) : c_(static_cast<std::size_t>(two_n)) {}
  static GroupRingElement monomial(long two_n, long e, const BigInt& c = 1);

  [[nodiscard]] long size() const { return static_cast<long>(c_.size()); }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement& operator*=(const BigInt& s);
  /// Multiply by x^e.
  [[nodiscard]] GroupRingElement rotated(long e) const;
  /// Adds s * x^e * o.
  void add_rotated(const GroupRingElement& o, long e, const BigInt& s = 1);

  /// Substitute x -> zeta from the context table (working precision).
  [[nodiscard]] HPComplex evaluate(const RootContext& ctx) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.c_ == b.c_; }

 private:
  std::vector<BigInt> c_;
};

/// Powers of zeta = e^{i pi/N} and omega-binomials for one N.
///
/// Values are held at a working precision above the requested one; the
/// gap absorbs cancellation in sums whose terms (q-binomials at roots of
/// unity) can be exponentially large in N.
class RootContext {
 public:
  RootContext(long N, Bits bits, bool exact_backend = false);

  [[nodiscard]] long N() const { return N_; }
  [[nodiscard]] Bits bits() const { return bits_; }
  [[nodiscard]] Bits work_bits() const { return work_; }
  [[nodiscard]] bool exact_enabled() const { return exact_; }

  /// zeta^j, any integer j.
  [[nodiscard]] const HPComplex& zeta(long j) const;
  /// [n, k] at q = omega = zeta^2, from the Pascal recurrence; 0 <= k <= n <= N.
  [[nodiscard]] const HPComplex& binom(long n, long k) const;
  [[nodiscard]] const GroupRingElement& binom_exact(long n, long k) const;
  /// [n, k]_omega zeta^{2k^2} (quad) or [n, k]_omega zeta^{2k(k+1)} (lin).
  [[nodiscard]] const HPComplex& weight(long n, long k, bool linear) const;

  /// max | |zeta^j| - 1 | over the table.
  [[nodiscard]] Real unit_norm_defect() const;

 private:
  [[nodiscard]] std::size_t tri(long n, long k) const {
    return static_cast<std::size_t>(n * (n + 1) / 2 + k);
  }

  // O(N^3) to build, so only on first use; thread-safe
  struct Tables {
    std::vector<GroupRingElement> binom_exact;
    std::vector<HPComplex> binom;
    std::vector<HPComplex> w_quad;
    std::vector<HPComplex> w_lin;
  };
  const Tables& tables() const;

  long N_;
  Bits bits_;
  Bits work_;
  bool exact_;
  std::vector<HPComplex> zeta_;
  mutable std::unique_ptr<std::once_flag> once_ = std::make_unique<std::once_flag>();
  mutable std::unique_ptr<const Tables> tables_;
};

enum class InvariantMethod { nested, theta, jones_limit };
std::string to_string(InvariantMethod m);

struct InvariantResult {
  int m = 0;
  long N = 0;
  InvariantMethod method = InvariantMethod::nested;
  HPComplex value;
  std::optional<GroupRingElement> exact_value;
  std::optional<Real> cross_method;   // residual against another method
  std::optional<Real> cross_backend;  // |complex - evaluate(exact)|
};

/// e^{-m(N^2-1)h/2} sum_{eps=+-1} sum_{j<N} eps e^{m h j^2 + (m+eps) h j + h eps/2}.
HPComplex colored_jones_ratio(int m, long N, const HPComplex& h);
/// The same quantity through the periodic character chi_{2m}^{(0)}.
HPComplex colored_jones_ratio_chi(int m, long N, const HPComplex& h);

enum class NestedStrategy {
  levels,  // partial sums level by level, O(m N^2)
  leaves,  // enumerate every index chain with hoisted prefix products
};

struct NestedOptions {
  NestedStrategy strategy = NestedStrategy::levels;
  int threads = 1;
  bool exact = false;  // also run the group-ring backend (needs ctx.exact_enabled())
};

/// N * Y_m^{(0)}(omega); m = 1 gives N.
InvariantResult kashaev_nested(int m, const RootContext& ctx, const NestedOptions& opt = {});
/// O(N) theta-sum expression.
InvariantResult kashaev_theta(int m, const RootContext& ctx);
/// Limit of the colored Jones ratio at h -> 2 pi i/N (L'Hopital on both terms).
InvariantResult kashaev_jones_limit(int m, const RootContext& ctx);

/// Y_m^{(a)}(omega) at working precision.
HPComplex y_series(int m, int a, const RootContext& ctx, const NestedOptions& opt = {});
/// Same sum over the group ring.
GroupRingElement y_series_exact(int m, int a, const RootContext& ctx);

}  // namespace qlf
