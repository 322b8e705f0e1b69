#include "qlf/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qlf/numeric.hpp"
#include "qlf/qbinomial.hpp"

namespace qlf {

void validate(const KSeriesSpec& spec) {
  require(spec.m >= 2, "K-series requires m >= 2");
  require(spec.a >= 0 && spec.a <= spec.m - 2, "K-series requires 0 <= a <= m-2");
  require(spec.q_order >= 0, "q_order must be >= 0");
  require(spec.x_order >= 1, "x_order must be >= 1");
}

namespace {

// Adds b * q^shift into a (truncated to a.size()).
void add_shifted(Poly& a, const Poly& b, long shift, int sign) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    const long k = static_cast<long>(i) + shift;
    if (k >= static_cast<long>(a.size())) break;
    if (b[i] == 0) continue;
    if (sign > 0) a[static_cast<std::size_t>(k)] += b[i];
    else a[static_cast<std::size_t>(k)] -= b[i];
  }
}

struct KWalker {
  int m;
  int a;
  long q_order;
  long x_order;
  std::vector<Poly> acc;  // by x-degree

  [[nodiscard]] int shift(int i) const { return (i >= 1 && i == a) ? 1 : 0; }
  [[nodiscard]] bool linear(int i) const { return i >= a + 1; }

  // prefix already includes every factor for levels > i
  void walk(int i, long n, long degree, long min_exp, const Poly& prefix) {
    auto& table = QBinomialTable::global();
    for (long c = 0; c <= n; ++c) {
      const long e_min = min_exp + c * c;
      const long deg = degree + c;
      if (e_min >= q_order || deg >= x_order) break;
      const long e_shift = c * c + (linear(i) ? c : 0);
      Poly next = poly_mul(prefix, table.get(n, c), static_cast<std::size_t>(std::max<long>(q_order - e_shift, 0)));
      if (next.empty()) continue;
      if (i == 1) {
        add_shifted(acc[static_cast<std::size_t>(deg)], next, e_shift, 1);
      } else {
        Poly shifted(static_cast<std::size_t>(q_order));
        add_shifted(shifted, next, e_shift, 1);
        walk(i - 1, c + shift(i - 1), deg, e_min, shifted);
      }
    }
  }

  void run() {
    acc.assign(static_cast<std::size_t>(x_order), Poly(static_cast<std::size_t>(q_order)));
    for (long t = 0;; ++t) {
      const long e = t * (t + 1) / 2;
      if (e >= q_order || t >= x_order) break;
      const int sign = t % 2 == 0 ? 1 : -1;
      if (m == 2) {
        acc[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] += sign;
        continue;
      }
      Poly top(static_cast<std::size_t>(q_order));
      top[static_cast<std::size_t>(e)] = sign;
      walk(m - 2, t + shift(m - 2), t, e, top);
    }
  }
};

std::string multi_to_string(const MultiIndex& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace

BiSeries k_series(const KSeriesSpec& spec) {
  validate(spec);
  BiSeries out(spec.x_order, 1, BigRational(spec.q_order));
  if (spec.q_order == 0) return out;
  KWalker w{spec.m, spec.a, spec.q_order, spec.x_order, {}};
  w.run();
  for (long j = 0; j < spec.x_order; ++j) {
    FormalSeries s = FormalSeries::from_dense(w.acc[static_cast<std::size_t>(j)], BigRational(spec.q_order));
    if (!s.is_zero()) out.set_coefficient(j, std::move(s));
  }
  return out;
}

BiSeries k_rhs(const KSeriesSpec& spec) {
  validate(spec);
  const PeriodicChar chi(spec.m, spec.a);
  const long r = spec.m - 1 - spec.a;
  const long four_m = 4L * spec.m;
  BiSeries out(spec.x_order, 1, BigRational(spec.q_order));
  for (long n = 0; n < r + 2 * spec.x_order; ++n) {
    const int c = chi(n);
    if (c == 0) continue;
    if ((n - r) % 2 != 0 || (n * n - r * r) % four_m != 0) {
      throw std::logic_error("k_rhs: non-integral exponent at n = " + std::to_string(n));
    }
    const long j = (n - r) / 2;
    const long e = (n * n - r * r) / four_m;
    if (e >= spec.q_order) break;
    out.add_term(j, e, c);
  }
  return out;
}

namespace {

IdentityReport compare(std::string name, const BiSeries& lhs, const BiSeries& rhs) {
  IdentityReport rep;
  rep.name = std::move(name);
  const long xo = std::min(lhs.x_order(), rhs.x_order());
  const BigRational qo = std::min(lhs.q_order(), rhs.q_order());
  rep.coefficients_checked = xo * static_cast<long>(qo.get_d() + 0.5);
  if (auto mm = first_mismatch(lhs, rhs)) {
    const auto& [j, e] = *mm;
    rep.mismatch = Mismatch{"x^" + std::to_string(j), e, lhs.coefficient(j).coeff(e), rhs.coefficient(j).coeff(e)};
    rep.passed = false;
  } else {
    rep.passed = true;
  }
  return rep;
}

}  // namespace

IdentityReport verify_main_identity(const KSeriesSpec& spec, const std::optional<Perturbation>& perturb) {
  BiSeries lhs = k_series(spec);
  const BiSeries rhs = k_rhs(spec);
  if (perturb) lhs.add_term(perturb->x_degree, perturb->q_exponent, perturb->delta);
  return compare("main_identity", lhs, rhs);
}

IdentityReport verify_difference_equation(const KSeriesSpec& spec) {
  const BiSeries k = k_series(spec);
  const BigRational qo(spec.q_order);
  BiSeries rhs(spec.x_order, 1, qo);
  rhs.add_term(0, 0, 1);
  rhs.add_term(spec.a + 1, spec.a + 1, -1);
  rhs += k.x_substituted(BigRational(2)).monomial_times(1, BigRational(2 * spec.m - 1 - spec.a), spec.m);
  return compare("difference_equation", k, rhs);
}

// ---------------------------------------------------------------------------
// Multivariate

MultiSeries k_multi(int m, int a, int cap, long order) {
  require(m >= 2 && a >= 0 && a <= m - 2, "k_multi requires m >= 2, 0 <= a <= m-2");
  require(cap >= 0, "degree cap must be >= 0");
  auto& table = QBinomialTable::global();
  const int nv = m - 1;
  MultiSeries out;
  MultiIndex c(static_cast<std::size_t>(nv), 0);
  // odometer over the box [0, cap]^{m-1}
  while (true) {
    bool nonzero = true;
    long e = static_cast<long>(c[static_cast<std::size_t>(nv - 1)]) * (c[static_cast<std::size_t>(nv - 1)] + 1) / 2;
    for (int i = 1; i <= m - 2 && nonzero; ++i) {
      const long ci = c[static_cast<std::size_t>(i - 1)];
      const long up = c[static_cast<std::size_t>(i)] + (i == a ? 1 : 0);
      if (ci > up) nonzero = false;
      e += ci * ci + (i >= a + 1 ? ci : 0);
    }
    if (nonzero && e < order) {
      Poly p{1};
      for (int i = 1; i <= m - 2; ++i) {
        const long ci = c[static_cast<std::size_t>(i - 1)];
        const long up = c[static_cast<std::size_t>(i)] + (i == a ? 1 : 0);
        p = poly_mul(p, table.get(up, ci), static_cast<std::size_t>(order - e));
      }
      FormalSeries s = FormalSeries::from_dense(p, BigRational(order - e)).shifted(BigRational(e));
      if (c[static_cast<std::size_t>(nv - 1)] % 2 != 0) s = -s;
      if (!s.is_zero()) out.emplace(c, std::move(s));
    }
    int k = 0;
    while (k < nv && c[static_cast<std::size_t>(k)] == cap) c[static_cast<std::size_t>(k++)] = 0;
    if (k == nv) break;
    ++c[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {

// One term  sign * q^{q_power} * x^{x_shift} * K^{(a)}(q^{e_1} x_1, ..., q^{e_{m-1}} x_{m-1}).
struct KTerm {
  int sign = 1;
  long q_power = 0;
  MultiIndex x_shift;
  int a = 0;
  std::vector<int> subst;
  bool constant_one = false;  // the term is just `sign`
};

class MultiEngine {
 public:
  MultiEngine(int m, long q_order, int cap) : m_(m), q_order_(q_order), cap_(cap) {}

  MultiSeries evaluate(const std::vector<KTerm>& terms) {
    MultiSeries out;
    for (const auto& t : terms) {
      if (t.constant_one) {
        MultiIndex zero(static_cast<std::size_t>(m_ - 1), 0);
        FormalSeries one = FormalSeries::monomial(t.sign, 0, 1, BigRational(q_order_));
        add(out, zero, one);
        continue;
      }
      for (const auto& [c, s] : base(t.a)) {
        MultiIndex d = c;
        bool inside = true;
        long shift = t.q_power;
        for (std::size_t i = 0; i < d.size(); ++i) {
          d[i] += t.x_shift[i];
          if (d[i] > cap_) inside = false;
          shift += static_cast<long>(t.subst[i]) * c[i];
        }
        if (!inside) continue;
        FormalSeries v = s.shifted(BigRational(shift));
        if (t.sign < 0) v = -v;
        add(out, d, v);
      }
    }
    return out;
  }

  [[nodiscard]] int m() const { return m_; }

 private:
  // margin covers the largest downward shift any recurrence applies
  const MultiSeries& base(int a) {
    auto it = cache_.find(a);
    if (it == cache_.end()) {
      const long margin = static_cast<long>(m_ - 1) * cap_ + 2L * m_;
      it = cache_.emplace(a, k_multi(m_, a, cap_, q_order_ + margin)).first;
    }
    return it->second;
  }

  static void add(MultiSeries& out, const MultiIndex& c, const FormalSeries& v) {
    auto it = out.find(c);
    if (it == out.end()) out.emplace(c, v);
    else it->second += v;
  }

  int m_;
  long q_order_;
  int cap_;
  std::map<int, MultiSeries> cache_;
};

IdentityReport compare_multi(std::string name, const MultiSeries& lhs, const MultiSeries& rhs, long q_order) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.passed = true;
  const BigRational qo(q_order);
  std::vector<MultiIndex> keys;
  for (const auto& [c, s] : lhs) keys.push_back(c);
  for (const auto& [c, s] : rhs) keys.push_back(c);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& c : keys) {
    auto l = lhs.find(c);
    auto r = rhs.find(c);
    FormalSeries ls = l != lhs.end() ? l->second.truncated(qo) : FormalSeries(1, qo);
    FormalSeries rs = r != rhs.end() ? r->second.truncated(qo) : FormalSeries(1, qo);
    if (ls.order() < qo || rs.order() < qo) {
      throw std::logic_error("multivariate coefficient not determined to the requested order");
    }
    ++rep.coefficients_checked;
    if (auto e = first_mismatch(ls, rs)) {
      rep.passed = false;
      rep.mismatch = Mismatch{multi_to_string(c), *e, ls.coeff(*e), rs.coeff(*e)};
      return rep;
    }
  }
  return rep;
}

KTerm k_term(int m, int a, int sign, long q_power, const std::vector<int>& subst, const MultiIndex& x_shift) {
  KTerm t;
  t.sign = sign;
  t.q_power = q_power;
  t.a = a;
  t.subst = subst;
  t.x_shift = x_shift;
  if (t.x_shift.empty()) t.x_shift.assign(static_cast<std::size_t>(m - 1), 0);
  return t;
}

KTerm one_term(int sign) {
  KTerm t;
  t.sign = sign;
  t.constant_one = true;
  return t;
}

// subst vector with value v_lo on variables 1..lo_end, v_mid on lo_end+1..mid_end, v_hi afterwards
std::vector<int> piecewise(int nv, int lo_end, int v_lo, int mid_end, int v_mid, int v_hi) {
  std::vector<int> s(static_cast<std::size_t>(nv));
  for (int i = 1; i <= nv; ++i) s[static_cast<std::size_t>(i - 1)] = i <= lo_end ? v_lo : (i <= mid_end ? v_mid : v_hi);
  return s;
}

// x_lo * ... * x_hi (1-based, inclusive; empty when lo > hi)
MultiIndex x_range(int nv, int lo, int hi) {
  MultiIndex d(static_cast<std::size_t>(nv), 0);
  for (int i = std::max(lo, 1); i <= std::min(hi, nv); ++i) d[static_cast<std::size_t>(i - 1)] = 1;
  return d;
}

}  // namespace

std::vector<IdentityReport> verify_multivariate_recurrences(int m, int a, long q_order, int cap) {
  require(m >= 3 && m <= 5, "multivariate recurrences are checked for m in {3,4,5}");
  require(a >= 0 && a <= m - 2, "multivariate recurrences require 0 <= a <= m-2");
  require(q_order >= 1, "q_order must be >= 1");
  MultiEngine eng(m, q_order, cap);
  const int nv = m - 1;
  const std::vector<int> ident(static_cast<std::size_t>(nv), 0);
  std::vector<IdentityReport> out;

  auto check = [&](const std::string& name, const std::vector<KTerm>& lhs, const std::vector<KTerm>& rhs) {
    out.push_back(compare_multi(name, eng.evaluate(lhs), eng.evaluate(rhs), q_order));
  };

  const KTerm k_a = k_term(m, a, 1, 0, ident, {});
  if (a >= 1) {
    // [c_{a+1}+1, c_a] = q^{c_a}[c_{a+1}, c_a] + [c_{a+1}, c_a - 1]
    check("maru_1", {k_a},
          {k_term(m, 0, 1, 0, piecewise(nv, a - 1, -1, nv, 0, 0), {}),
           k_term(m, a - 1, 1, 1, piecewise(nv, a - 1, 0, a, 1, 0), x_range(nv, a, a))});
    // [c_{a+1}+1, c_a] = [c_{a+1}, c_a] + q^{c_{a+1}+1-c_a}[c_{a+1}, c_a - 1]
    check("maru_2", {k_a},
          {k_term(m, 0, 1, 0, piecewise(nv, a, -1, nv, 0, 0), {}),
           k_term(m, a - 1, 1, 1, piecewise(nv, a, 0, a + 1, 1, 0), x_range(nv, a, a))});
  }
  check("maru_3", {k_term(m, 0, 1, 0, ident, {})},
        {one_term(1), k_term(m, m - 2, -1, 1, std::vector<int>(static_cast<std::size_t>(nv), 1), x_range(nv, nv, nv))});

  {
    std::vector<KTerm> rhs;
    for (int j = 0; j <= a; ++j) {
      rhs.push_back(k_term(m, 0, 1, j, piecewise(nv, a - j - 1, -1, a - j, 0, 1), x_range(nv, a - j + 1, a)));
    }
    check("a_and_0_1", {k_term(m, a, 1, 0, piecewise(nv, a, 0, a, 0, 1), {})}, rhs);
  }
  {
    std::vector<KTerm> rhs;
    for (int j = 0; j <= a; ++j) {
      rhs.push_back(k_term(m, 0, 1, j, piecewise(nv, a - j, -1, a - j + 1, 0, 1), x_range(nv, a - j + 1, a)));
    }
    check("a_and_0_2", {k_term(m, a, 1, 0, piecewise(nv, a + 1, 0, a + 1, 0, 1), {})}, rhs);
  }
  {
    std::vector<KTerm> lhs;
    for (int j = 0; j <= m - 2; ++j) {
      lhs.push_back(k_term(m, 0, 1, j, piecewise(nv, m - 2 - j, -1, m - 1 - j, 0, 1), x_range(nv, m - j, nv)));
    }
    check("comp_1", lhs,
          {one_term(1), k_term(m, 0, -1, m - 1, std::vector<int>(static_cast<std::size_t>(nv), 1), x_range(nv, 1, nv))});
  }
  {
    // multiplied through by x_{m-1}
    std::vector<KTerm> lhs;
    for (int j = 0; j <= m - 2; ++j) {
      MultiIndex d = x_range(nv, m - 1 - j, m - 2);
      d[static_cast<std::size_t>(nv - 1)] += 1;
      lhs.push_back(k_term(m, 0, 1, j, piecewise(nv, m - 2 - j, -1, m - 1 - j, 0, 1), d));
    }
    check("comp_2", lhs, {one_term(1), k_term(m, 0, -1, 0, std::vector<int>(static_cast<std::size_t>(nv), -1), {})});
  }

  // collapse x_i = x back to the one-variable series
  {
    const MultiSeries multi = eng.evaluate({k_a});
    KSeriesSpec spec{m, a, q_order, cap + 1};
    const BiSeries single = k_series(spec);
    BiSeries collapsed(cap + 1, 1, BigRational(q_order));
    for (const auto& [c, s] : multi) {
      long deg = 0;
      for (int v : c) deg += v;
      if (deg > cap) continue;
      FormalSeries cur = collapsed.coefficient(deg);
      collapsed.set_coefficient(deg, cur + s.truncated(BigRational(q_order)));
    }
    out.push_back(compare("collapse", collapsed, single));
  }
  return out;
}

// ---------------------------------------------------------------------------

FormalSeries phi_weighted_series(int m, int a, long q_order) {
  // each unit of x-degree costs at least one power of q, so x_order = q_order + 1 is complete
  const KSeriesSpec spec{m, a, q_order, q_order + 1};
  const BiSeries k = k_series(spec);
  const long r = m - 1 - a;
  FormalSeries sum(1, BigRational(q_order));
  for (const auto& [j, s] : k.coefficients()) sum += s.scaled(2 * (2 * j + r));
  return sum.shifted(rat(r * r, 4L * m)).with_denom(4L * m).truncated(BigRational(q_order));
}

FormalSeries k_at_one_scaled(int m, int a, long q_order) {
  const KSeriesSpec spec{m, a, q_order, q_order + 1};
  const long r = m - 1 - a;
  return k_series(spec).at_x_one().scaled(m).shifted(rat(r * r, 4L * m)).with_denom(4L * m).truncated(BigRational(q_order));
}

}  // namespace qlf
