#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qlf/real.hpp"

namespace qlf {

/// Truncated power series in q^{1/D} with exact integer coefficients.
///
/// A term (k, c) stands for c q^{k/D}. Every coefficient with exponent below
/// order() is known (absent means zero); nothing at or above it is.
class FormalSeries {
 public:
  struct Term {
    std::int64_t k;
    BigInt c;
  };

  static constexpr long kDefaultOrder = 100;

  FormalSeries() : FormalSeries(1, BigRational(kDefaultOrder)) {}
  FormalSeries(std::int64_t denom, BigRational order);
  /// c q^{k/D}, truncated at order.
  static FormalSeries monomial(const BigInt& c, std::int64_t k, std::int64_t denom, BigRational order);
  /// Build from unsorted (k, c) pairs; merges duplicates and drops zeros.
  static FormalSeries from_terms(std::vector<Term> terms, std::int64_t denom, BigRational order);
  /// Dense integer-exponent polynomial sum_i coeffs[i] q^i.
  static FormalSeries from_dense(const std::vector<BigInt>& coeffs, BigRational order);

  [[nodiscard]] std::int64_t denom() const { return denom_; }
  [[nodiscard]] const BigRational& order() const { return order_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Coefficient of q^e; e must lie on the grid (else 0) and below order.
  [[nodiscard]] BigInt coeff(const BigRational& e) const;
  /// Smallest exponent with nonzero coefficient, or order() if none.
  [[nodiscard]] BigRational valuation() const;
  [[nodiscard]] BigInt leading_coefficient() const;

  [[nodiscard]] FormalSeries with_denom(std::int64_t denom) const;
  /// Smallest grid that holds every stored exponent.
  [[nodiscard]] FormalSeries normalized() const;
  [[nodiscard]] FormalSeries truncated(const BigRational& order) const;
  /// Multiply by q^e (exact; order moves with it).
  [[nodiscard]] FormalSeries shifted(const BigRational& e) const;
  /// q -> q^s for rational s > 0.
  [[nodiscard]] FormalSeries substituted(const BigRational& s) const;
  [[nodiscard]] FormalSeries scaled(const BigInt& c) const;

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator-(const FormalSeries& a) { return a.scaled(-1); }
  /// Product; the result order is min(oA + vB, oB + vA), which is exactly
  /// the range where the product is determined.
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }

  /// Rows "exponent_numerator,denom,coefficient" with a header line.
  [[nodiscard]] std::string to_csv() const;
  /// Array of [k, D, "c"] triples.
  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_string(int max_terms = 12) const;

 private:
  std::int64_t denom_;
  BigRational order_;
  std::vector<Term> terms_;  // sorted by k, no zero c, all k/D < order
};

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_scale(const FormalSeries& a, const BigInt& c);

/// A / B. The leading coefficient of B must be +1 or -1. The quotient is
/// returned to the order where it is determined by the inputs.
FormalSeries series_divide(const FormalSeries& a, const FormalSeries& b);

/// A / B, then confirms quotient * B == A up to the common order.
/// Throws if the check fails (which indicates a truncation bug).
FormalSeries series_divide_checked(const FormalSeries& a, const FormalSeries& b);

/// First exponent below min(order) where a and b differ.
std::optional<BigRational> first_mismatch(const FormalSeries& a, const FormalSeries& b);

/// Series in x with FormalSeries coefficients, x-degrees 0 <= j < x_order.
class BiSeries {
 public:
  BiSeries() = default;
  BiSeries(long x_order, std::int64_t denom, BigRational q_order);

  [[nodiscard]] long x_order() const { return x_order_; }
  [[nodiscard]] std::int64_t denom() const { return denom_; }
  [[nodiscard]] const BigRational& q_order() const { return q_order_; }
  [[nodiscard]] const std::map<long, FormalSeries>& coefficients() const { return coeffs_; }

  /// Coefficient series of x^j (zero series if absent).
  [[nodiscard]] FormalSeries coefficient(long j) const;
  /// Adds c q^{k/denom} x^j (ignored when out of range).
  void add_term(long j, std::int64_t k, const BigInt& c);
  void set_coefficient(long j, FormalSeries s);

  /// x -> q^e x.
  [[nodiscard]] BiSeries x_substituted(const BigRational& e) const;
  /// Multiply by c q^e x^j.
  [[nodiscard]] BiSeries monomial_times(const BigInt& c, const BigRational& e, long j) const;
  /// Set x = 1 (sum of all coefficient series).
  [[nodiscard]] FormalSeries at_x_one() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string to_csv() const;

 private:
  long x_order_ = 0;
  std::int64_t denom_ = 1;
  BigRational q_order_{0};
  std::map<long, FormalSeries> coeffs_;
};

/// First (x-degree, q-exponent) where a and b differ.
std::optional<std::pair<long, BigRational>> first_mismatch(const BiSeries& a, const BiSeries& b);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace qlf
