#include "qlf/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qlf/numeric.hpp"

namespace qlf {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

namespace {

std::int64_t to_i64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("series exponent out of range");
  return z.get_si();
}

// Exclusive exponent-numerator bound: k/D < order  <=>  k < limit.
std::int64_t k_limit(const BigRational& order, std::int64_t denom) {
  const BigRational t = order * BigRational(BigInt(denom));
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return to_i64(c);
}

// Exponent e as a numerator on grid D; nullopt when e is off-grid.
std::optional<std::int64_t> on_grid(const BigRational& e, std::int64_t denom) {
  const BigRational t = e * BigRational(BigInt(denom));
  if (t.get_den() != 1) return std::nullopt;
  return to_i64(t.get_num());
}

std::int64_t grid_for(const BigRational& e) { return to_i64(e.get_den()); }

}  // namespace

FormalSeries::FormalSeries(std::int64_t denom, BigRational order) : denom_(denom), order_(std::move(order)) {
  require(denom_ > 0, "series denominator must be positive");
  order_.canonicalize();
}

FormalSeries FormalSeries::monomial(const BigInt& c, std::int64_t k, std::int64_t denom, BigRational order) {
  FormalSeries s(denom, std::move(order));
  if (c != 0 && k < k_limit(s.order_, denom)) s.terms_.push_back({k, c});
  return s;
}

FormalSeries FormalSeries::from_terms(std::vector<Term> terms, std::int64_t denom, BigRational order) {
  FormalSeries s(denom, std::move(order));
  const std::int64_t lim = k_limit(s.order_, denom);
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
  for (auto& t : terms) {
    if (t.k >= lim) break;
    if (!s.terms_.empty() && s.terms_.back().k == t.k) {
      s.terms_.back().c += t.c;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(s.terms_, [](const Term& t) { return t.c == 0; });
  return s;
}

FormalSeries FormalSeries::from_dense(const std::vector<BigInt>& coeffs, BigRational order) {
  FormalSeries s(1, std::move(order));
  const std::int64_t lim = k_limit(s.order_, 1);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<std::int64_t>(i) < lim; ++i) {
    if (coeffs[i] != 0) s.terms_.push_back({static_cast<std::int64_t>(i), coeffs[i]});
  }
  return s;
}

BigInt FormalSeries::coeff(const BigRational& e) const {
  require(e < order_, "coefficient requested at or beyond the truncation order");
  const auto k = on_grid(e, denom_);
  if (!k) return 0;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), *k, [](const Term& t, std::int64_t v) { return t.k < v; });
  if (it != terms_.end() && it->k == *k) return it->c;
  return 0;
}

BigRational FormalSeries::valuation() const {
  if (terms_.empty()) return order_;
  return rat(BigInt(terms_.front().k), BigInt(denom_));
}

BigInt FormalSeries::leading_coefficient() const { return terms_.empty() ? BigInt(0) : terms_.front().c; }

FormalSeries FormalSeries::with_denom(std::int64_t denom) const {
  require(denom > 0 && denom % denom_ == 0, "with_denom: new denominator must be a multiple");
  FormalSeries s(denom, order_);
  const std::int64_t f = denom / denom_;
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.push_back({t.k * f, t.c});
  return s;
}

FormalSeries FormalSeries::normalized() const {
  std::int64_t g = denom_;
  for (const auto& t : terms_) g = std::gcd(g, t.k);
  // keep the order representable on the grid the caller sees
  FormalSeries s(denom_ / g, order_);
  for (const auto& t : terms_) s.terms_.push_back({t.k / g, t.c});
  return s;
}

FormalSeries FormalSeries::truncated(const BigRational& order) const {
  FormalSeries s(denom_, std::min(order, order_));
  const std::int64_t lim = k_limit(s.order_, denom_);
  for (const auto& t : terms_) {
    if (t.k >= lim) break;
    s.terms_.push_back(t);
  }
  return s;
}

FormalSeries FormalSeries::shifted(const BigRational& e) const {
  const std::int64_t d = lcm64(denom_, grid_for(e));
  FormalSeries s = with_denom(d);
  const std::int64_t dk = *on_grid(e, d);
  for (auto& t : s.terms_) t.k += dk;
  s.order_ = order_ + e;
  return s;
}

FormalSeries FormalSeries::substituted(const BigRational& sc) const {
  require(sc > 0, "substitution exponent must be positive");
  const std::int64_t num = to_i64(sc.get_num());
  const std::int64_t den = to_i64(sc.get_den());
  FormalSeries s(denom_ * den, order_ * sc);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.push_back({t.k * num, t.c});
  return s;
}

FormalSeries FormalSeries::scaled(const BigInt& c) const {
  FormalSeries s(denom_, order_);
  if (c == 0) return s;
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.push_back({t.k, t.c * c});
  return s;
}

namespace {

FormalSeries combine(const FormalSeries& a, const FormalSeries& b, int sign) {
  const std::int64_t d = lcm64(a.denom(), b.denom());
  const FormalSeries x = a.denom() == d ? a : a.with_denom(d);
  const FormalSeries y = b.denom() == d ? b : b.with_denom(d);
  const BigRational order = std::min(a.order(), b.order());
  const std::int64_t lim = k_limit(order, d);
  std::vector<FormalSeries::Term> out;
  out.reserve(x.terms().size() + y.terms().size());
  auto i = x.terms().begin();
  auto j = y.terms().begin();
  while (i != x.terms().end() || j != y.terms().end()) {
    if (j == y.terms().end() || (i != x.terms().end() && i->k < j->k)) {
      out.push_back(*i++);
    } else if (i == x.terms().end() || j->k < i->k) {
      out.push_back({j->k, sign > 0 ? j->c : BigInt(-j->c)});
      ++j;
    } else {
      out.push_back({i->k, sign > 0 ? BigInt(i->c + j->c) : BigInt(i->c - j->c)});
      ++i;
      ++j;
    }
    if (out.back().k >= lim) {
      out.pop_back();
      break;
    }
  }
  return FormalSeries::from_terms(std::move(out), d, order);
}

}  // namespace

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) { return *this = combine(*this, o, 1); }

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) { return *this = combine(*this, o, -1); }

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  const std::int64_t d = lcm64(a.denom(), b.denom());
  const BigRational order = std::min(BigRational(a.order() + b.valuation()), BigRational(b.order() + a.valuation()));
  FormalSeries out(d, order);
  if (a.is_zero() || b.is_zero()) return out;
  const FormalSeries x = a.denom() == d ? a : a.with_denom(d);
  const FormalSeries y = b.denom() == d ? b : b.with_denom(d);
  const std::int64_t lim = k_limit(order, d);
  const std::int64_t base = x.terms().front().k + y.terms().front().k;
  if (base >= lim) return out;
  std::vector<BigInt> acc(static_cast<std::size_t>(lim - base));
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      const std::int64_t k = s.k + t.k;
      if (k >= lim) break;
      mpz_addmul(acc[static_cast<std::size_t>(k - base)].get_mpz_t(), s.c.get_mpz_t(), t.c.get_mpz_t());
    }
  }
  std::vector<FormalSeries::Term> terms;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) terms.push_back({base + static_cast<std::int64_t>(i), std::move(acc[i])});
  }
  return FormalSeries::from_terms(std::move(terms), d, order);
}

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) { return a + b; }
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) { return a * b; }
FormalSeries series_scale(const FormalSeries& a, const BigInt& c) { return a.scaled(c); }

FormalSeries series_divide(const FormalSeries& a, const FormalSeries& b) {
  require(!b.is_zero(), "series division by a zero series");
  const BigInt lead = b.leading_coefficient();
  require(lead == 1 || lead == -1, "series division requires leading coefficient +1 or -1");
  const std::int64_t d = lcm64(a.denom(), b.denom());
  const FormalSeries x = a.with_denom(d);
  const FormalSeries y = b.with_denom(d);
  const BigRational vb = b.valuation();
  const BigRational va = a.is_zero() ? a.order() : a.valuation();
  // A q^{-vb} known below oA - vb, (B q^{-vb})^{-1} known below oB - vb.
  const BigRational order = std::min(BigRational(a.order() - vb), BigRational(b.order() - vb + (va - vb)));
  FormalSeries out(d, order);
  if (a.is_zero()) return out;
  const std::int64_t kb = y.terms().front().k;
  const std::int64_t start = x.terms().front().k - kb;
  const std::int64_t lim = k_limit(order, d);
  if (start >= lim) return out;
  const std::size_t n = static_cast<std::size_t>(lim - start);
  // dense remainder indexed by k - (start + kb)
  std::vector<BigInt> rem(n);
  for (const auto& t : x.terms()) {
    const std::int64_t i = t.k - kb - start;
    if (i >= 0 && static_cast<std::size_t>(i) < n) rem[static_cast<std::size_t>(i)] = t.c;
  }
  std::vector<FormalSeries::Term> q;
  for (std::size_t i = 0; i < n; ++i) {
    if (rem[i] == 0) continue;
    BigInt c = lead == 1 ? rem[i] : BigInt(-rem[i]);
    for (const auto& t : y.terms()) {
      const std::size_t j = i + static_cast<std::size_t>(t.k - kb);
      if (j >= n) break;
      mpz_submul(rem[j].get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
    }
    q.push_back({start + static_cast<std::int64_t>(i), std::move(c)});
  }
  return FormalSeries::from_terms(std::move(q), d, order);
}

FormalSeries series_divide_checked(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries q = series_divide(a, b);
  if (first_mismatch(q * b, a)) throw std::logic_error("series division remainder check failed");
  return q;
}

std::optional<BigRational> first_mismatch(const FormalSeries& a, const FormalSeries& b) {
  const FormalSeries diff = (a - b);
  if (diff.is_zero()) return std::nullopt;
  return diff.valuation();
}

std::string FormalSeries::to_csv() const {
  std::ostringstream os;
  os << "exponent_numerator,denom,coefficient\n";
  for (const auto& t : terms_) os << t.k << ',' << denom_ << ',' << t.c.get_str() << '\n';
  return os.str();
}

nlohmann::json FormalSeries::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_) arr.push_back({t.k, denom_, t.c.get_str()});
  return arr;
}

std::string FormalSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int n = 0;
  for (const auto& t : terms_) {
    if (n++ == max_terms) {
      os << " + ...";
      break;
    }
    if (n > 1) os << (t.c < 0 ? " - " : " + ");
    else if (t.c < 0) os << "-";
    const BigInt c = abs(t.c);
    const BigRational e = rat(BigInt(t.k), BigInt(denom_));
    if (c != 1 || e == 0) os << c.get_str();
    if (e != 0) os << "q^" << (e.get_den() == 1 ? e.get_num().get_str() : "(" + e.get_str() + ")");
  }
  if (n == 0) os << "0";
  os << " + O(q^" << order_.get_str() << ")";
  return os.str();
}

BiSeries::BiSeries(long x_order, std::int64_t denom, BigRational q_order)
    : x_order_(x_order), denom_(denom), q_order_(std::move(q_order)) {}

FormalSeries BiSeries::coefficient(long j) const {
  auto it = coeffs_.find(j);
  if (it != coeffs_.end()) return it->second;
  return FormalSeries(denom_, q_order_);
}

void BiSeries::add_term(long j, std::int64_t k, const BigInt& c) {
  if (j < 0 || j >= x_order_) return;
  auto mono = FormalSeries::monomial(c, k, denom_, q_order_);
  auto it = coeffs_.find(j);
  if (it == coeffs_.end()) {
    if (!mono.is_zero()) coeffs_.emplace(j, std::move(mono));
  } else {
    it->second += mono;
  }
}

void BiSeries::set_coefficient(long j, FormalSeries s) {
  if (j < 0 || j >= x_order_) return;
  require(s.denom() == denom_ || denom_ % s.denom() == 0, "BiSeries coefficient grid mismatch");
  s = s.with_denom(denom_).truncated(q_order_);
  coeffs_.insert_or_assign(j, std::move(s));
}

BiSeries BiSeries::x_substituted(const BigRational& e) const {
  std::int64_t d = lcm64(denom_, to_i64(e.get_den()));
  BigRational order = q_order_;
  if (e < 0 && x_order_ > 0) order = q_order_ + e * BigRational(BigInt(x_order_ - 1));
  BiSeries out(x_order_, d, order);
  for (const auto& [j, s] : coeffs_) {
    FormalSeries t = s.shifted(e * BigRational(BigInt(j))).with_denom(d).truncated(order);
    if (!t.is_zero()) out.coeffs_.emplace(j, std::move(t));
  }
  return out;
}

BiSeries BiSeries::monomial_times(const BigInt& c, const BigRational& e, long j) const {
  const std::int64_t d = lcm64(denom_, to_i64(e.get_den()));
  BigRational order = q_order_ + e;
  BiSeries out(x_order_, d, order);
  for (const auto& [i, s] : coeffs_) {
    if (i + j < 0 || i + j >= x_order_) continue;
    FormalSeries t = s.shifted(e).with_denom(d).scaled(c);
    if (!t.is_zero()) out.coeffs_.emplace(i + j, std::move(t));
  }
  return out;
}

FormalSeries BiSeries::at_x_one() const {
  FormalSeries s(denom_, q_order_);
  for (const auto& [j, c] : coeffs_) s += c;
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  const std::int64_t d = lcm64(denom_, o.denom_);
  const BigRational order = std::min(q_order_, o.q_order_);
  const long xo = std::min(x_order_, o.x_order_);
  BiSeries out(xo, d, order);
  for (const auto& [j, s] : coeffs_) {
    if (j < xo) out.coeffs_.emplace(j, s.with_denom(d).truncated(order));
  }
  for (const auto& [j, s] : o.coeffs_) {
    if (j >= xo) continue;
    auto it = out.coeffs_.find(j);
    if (it == out.coeffs_.end()) out.coeffs_.emplace(j, s.with_denom(d).truncated(order));
    else it->second += s;
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this = std::move(out);
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  BiSeries neg = o;
  for (auto& [j, s] : neg.coeffs_) s = -s;
  return *this += neg;
}

nlohmann::json BiSeries::to_json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [j, s] : coeffs_) obj[std::to_string(j)] = s.to_json();
  return obj;
}

std::string BiSeries::to_csv() const {
  std::ostringstream os;
  os << "x_degree,exponent_numerator,denom,coefficient\n";
  for (const auto& [j, s] : coeffs_) {
    for (const auto& t : s.terms()) os << j << ',' << t.k << ',' << s.denom() << ',' << t.c.get_str() << '\n';
  }
  return os.str();
}

std::optional<std::pair<long, BigRational>> first_mismatch(const BiSeries& a, const BiSeries& b) {
  const long xo = std::min(a.x_order(), b.x_order());
  for (long j = 0; j < xo; ++j) {
    if (auto e = first_mismatch(a.coefficient(j), b.coefficient(j))) return std::make_pair(j, *e);
  }
  return std::nullopt;
}

}  // namespace qlf
