#include "qlf/invariants.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "qlf/numeric.hpp"

namespace qlf {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Splits [0, count) into contiguous blocks and runs fn(begin, end) on each.
void parallel_blocks(long count, int threads, const std::function<void(long, long)>& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads <= 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const long step = (count + threads - 1) / threads;
  for (long b = 0; b < count; b += step) pool.emplace_back(fn, b, std::min(count, b + step));
  for (auto& t : pool) t.join();
}

// Pairwise (balanced tree) sum, so the rounding pattern depends only on
// the number of parts, not on how they were produced.
HPComplex tree_sum(std::vector<HPComplex> parts, Bits bits) {
  if (parts.empty()) return HPComplex(bits);
  while (parts.size() > 1) {
    std::vector<HPComplex> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

void check_ma(int m, int a) {
  require(m >= 2, "y_series requires m >= 2");
  require(a >= 0 && a <= m - 2, "y_series requires 0 <= a <= m-2");
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupRingElement

GroupRingElement GroupRingElement::monomial(long two_n, long e, const BigInt& c) {
  GroupRingElement g(two_n);
  g.c_[static_cast<std::size_t>(mod(e, two_n))] = c;
  return g;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (c_.empty()) c_.resize(o.c_.size());
  require(c_.size() == o.c_.size(), "group ring size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  if (c_.empty()) c_.resize(o.c_.size());
  require(c_.size() == o.c_.size(), "group ring size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require(a.c_.size() == b.c_.size(), "group ring size mismatch");
  const std::size_t n = a.c_.size();
  GroupRingElement out(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(out.c_[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return out;
}

GroupRingElement& GroupRingElement::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

GroupRingElement GroupRingElement::rotated(long e) const {
  const long n = size();
  GroupRingElement out(n);
  for (long i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(mod(i + e, n))] = c_[static_cast<std::size_t>(i)];
  return out;
}

void GroupRingElement::add_rotated(const GroupRingElement& o, long e, const BigInt& s) {
  if (c_.empty()) c_.resize(o.c_.size());
  const long n = size();
  for (long i = 0; i < n; ++i) {
    const auto& v = o.c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    mpz_addmul(c_[static_cast<std::size_t>(mod(i + e, n))].get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  }
}

HPComplex GroupRingElement::evaluate(const RootContext& ctx) const {
  require(size() == 2 * ctx.N(), "group ring element does not match the context");
  HPComplex s(ctx.work_bits());
  for (long j = 0; j < size(); ++j) {
    const auto& v = c_[static_cast<std::size_t>(j)];
    if (v == 0) continue;
    s += ctx.zeta(j) * Real(v, ctx.work_bits());
  }
  return s;
}

// ---------------------------------------------------------------------------
// RootContext

RootContext::RootContext(long N, Bits bits, bool exact_backend)
    : N_(N), bits_(bits), work_{bits.value + 64 + 2 * N}, exact_(exact_backend) {
  require(N >= 1, "N must be >= 1");
  require(bits.value >= 16, "precision must be at least 16 bits");
  const long two_n = 2 * N;
  zeta_.reserve(static_cast<std::size_t>(two_n));
  for (long j = 0; j < two_n; ++j) zeta_.push_back(unit_root(j, N, work_));

}

const RootContext::Tables& RootContext::tables() const {
  std::call_once(*once_, [this] {
    auto t = std::make_unique<Tables>();
    const long N = N_;
    const long two_n = 2 * N;
    // [n,k] at omega by the Pascal rule in Z[x]/(x^{2N}-1), omega = x^2
    const std::size_t count = static_cast<std::size_t>((N + 1) * (N + 2) / 2);
    t->binom_exact.resize(count);
    for (long n = 0; n <= N; ++n) {
      t->binom_exact[tri(n, 0)] = GroupRingElement::monomial(two_n, 0);
      t->binom_exact[tri(n, n)] = GroupRingElement::monomial(two_n, 0);
      for (long k = 1; k < n; ++k) {
        GroupRingElement g = t->binom_exact[tri(n - 1, k - 1)];
        g.add_rotated(t->binom_exact[tri(n - 1, k)], 2 * k);
        t->binom_exact[tri(n, k)] = std::move(g);
      }
    }
    t->binom.reserve(count);
    t->w_quad.reserve(count);
    t->w_lin.reserve(count);
    for (long n = 0; n <= N; ++n) {
      for (long k = 0; k <= n; ++k) {
        t->binom.push_back(t->binom_exact[tri(n, k)].evaluate(*this));
        t->w_quad.push_back(t->binom.back() * zeta(2 * k * k));
        t->w_lin.push_back(t->binom.back() * zeta(2 * k * (k + 1)));
      }
    }
    if (!exact_) {
      t->binom_exact.clear();
      t->binom_exact.shrink_to_fit();
    }
    tables_ = std::move(t);
  });
  return *tables_;
}

const HPComplex& RootContext::zeta(long j) const { return zeta_[static_cast<std::size_t>(mod(j, 2 * N_))]; }

const HPComplex& RootContext::binom(long n, long k) const {
  require(0 <= k && k <= n && n <= N_, "binomial index outside the context table");
  return tables().binom[tri(n, k)];
}

const GroupRingElement& RootContext::binom_exact(long n, long k) const {
  require(exact_, "exact backend not enabled for this context");
  require(0 <= k && k <= n && n <= N_, "binomial index outside the context table");
  return tables().binom_exact[tri(n, k)];
}

const HPComplex& RootContext::weight(long n, long k, bool linear) const {
  require(0 <= k && k <= n && n <= N_, "binomial index outside the context table");
  const Tables& t = tables();
  return linear ? t.w_lin[tri(n, k)] : t.w_quad[tri(n, k)];
}

Real RootContext::unit_norm_defect() const {
  Real worst(work_);
  const Real one(1L, work_);
  for (const auto& z : zeta_) {
    Real d = abs(abs(z) - one);
    if (d > worst) worst = d;
  }
  return worst;
}

std::string to_string(InvariantMethod m) {
  switch (m) {
    case InvariantMethod::nested: return "nested";
    case InvariantMethod::theta: return "theta";
    case InvariantMethod::jones_limit: return "jones_limit";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Colored Jones

HPComplex colored_jones_ratio(int m, long N, const HPComplex& h) {
  require(m >= 1 && N >= 1, "colored_jones_ratio requires m >= 1, N >= 1");
  const Bits bits = h.precision();
  HPComplex s(bits);
  for (int eps : {1, -1}) {
    for (long j = 0; j < N; ++j) {
      // exponent in units of h, doubled to stay integral
      const long e2 = 2L * m * j * j + 2L * (m + eps) * j + eps;
      HPComplex t = exp(h * Real(rat(e2, 2), bits));
      if (eps > 0) s += t;
      else s -= t;
    }
  }
  const BigRational pre = rat(-static_cast<long>(m) * (N * N - 1), 2L);
  return s * exp(h * Real(pre, bits));
}

HPComplex colored_jones_ratio_chi(int m, long N, const HPComplex& h) {
  require(m >= 1 && N >= 1, "colored_jones_ratio requires m >= 1, N >= 1");
  const Bits bits = h.precision();
  if (m == 1) {
    // chi_2^{(0)} is not defined; fall back to the direct form
    return colored_jones_ratio(m, N, h);
  }
  const PeriodicChar chi(m, 0);
  HPComplex s(bits);
  for (long k = 0; k <= 2L * m * N; ++k) {
    const int c = chi(k);
    if (c == 0) continue;
    HPComplex t = exp(h * Real(rat(k * k, 4L * m), bits));
    if (c > 0) s += t;
    else s -= t;
  }
  const BigRational pre = rat(-static_cast<long>(m) * (N * N - 1), 2L) - rat(static_cast<long>(m) * m + 1, 4L * m);
  return -(s * exp(h * Real(pre, bits)));
}

// ---------------------------------------------------------------------------
// Y-series and Kashaev's invariant

namespace {

struct LevelPlan {
  int m;
  int a;
  // level i (1..m-2): binomial [c_{i+1} + shift(i), c_i], linear term if i >= a+1
  [[nodiscard]] int shift(int i) const { return (i >= 1 && i == a) ? 1 : 0; }
  [[nodiscard]] bool linear(int i) const { return i >= a + 1; }
};

HPComplex y_levels(const LevelPlan& p, const RootContext& ctx, int threads) {
  const long N = ctx.N();
  const Bits wb = ctx.work_bits();
  std::vector<HPComplex> prev(static_cast<std::size_t>(N + 2), HPComplex(Real(1L, wb)));
  for (int i = 1; i <= p.m - 2; ++i) {
    std::vector<HPComplex> cur(static_cast<std::size_t>(N + 2), HPComplex(wb));
    const int sh = p.shift(i - 1);
    const bool lin = p.linear(i);
    parallel_blocks(N + 1, threads, [&](long b, long e) {
      for (long n = b; n < e; ++n) {
        HPComplex acc(wb);
        for (long k = 0; k <= n; ++k) acc.add_product(ctx.weight(n, k, lin), prev[static_cast<std::size_t>(k + sh)]);
        cur[static_cast<std::size_t>(n)] = std::move(acc);
      }
    });
    prev = std::move(cur);
  }
  const int sh = p.m >= 3 ? p.shift(p.m - 2) : 0;
  std::vector<HPComplex> parts;
  parts.reserve(static_cast<std::size_t>(N));
  for (long c = 0; c < N; ++c) {
    parts.push_back(ctx.zeta(N * c + c * (c + 1)) * prev[static_cast<std::size_t>(c + sh)]);
  }
  return tree_sum(std::move(parts), wb);
}

// Depth-first over c_{m-2} >= ... >= c_1 with the running product hoisted.
void leaves_dfs(const LevelPlan& p, const RootContext& ctx, int i, long n, const HPComplex& prefix, HPComplex& acc) {
  const bool lin = p.linear(i);
  for (long k = 0; k <= n; ++k) {
    HPComplex next = prefix * ctx.weight(n, k, lin);
    if (i == 1) acc += next;
    else leaves_dfs(p, ctx, i - 1, k + p.shift(i - 1), next, acc);
  }
}

HPComplex y_leaves(const LevelPlan& p, const RootContext& ctx, int threads) {
  const long N = ctx.N();
  const Bits wb = ctx.work_bits();
  std::vector<HPComplex> parts(static_cast<std::size_t>(N), HPComplex(wb));
  parallel_blocks(N, threads, [&](long b, long e) {
    for (long c = b; c < e; ++c) {
      const HPComplex& top = ctx.zeta(N * c + c * (c + 1));
      if (p.m == 2) {
        parts[static_cast<std::size_t>(c)] = top;
        continue;
      }
      HPComplex acc(wb);
      leaves_dfs(p, ctx, p.m - 2, c + p.shift(p.m - 2), top, acc);
      parts[static_cast<std::size_t>(c)] = std::move(acc);
    }
  });
  return tree_sum(std::move(parts), wb);
}

}  // namespace

HPComplex y_series(int m, int a, const RootContext& ctx, const NestedOptions& opt) {
  check_ma(m, a);
  const LevelPlan p{m, a};
  return opt.strategy == NestedStrategy::levels ? y_levels(p, ctx, opt.threads) : y_leaves(p, ctx, opt.threads);
}

GroupRingElement y_series_exact(int m, int a, const RootContext& ctx) {
  check_ma(m, a);
  require(ctx.exact_enabled(), "exact backend not enabled for this context");
  const LevelPlan p{m, a};
  const long N = ctx.N();
  const long two_n = 2 * N;
  std::vector<GroupRingElement> prev(static_cast<std::size_t>(N + 2), GroupRingElement::monomial(two_n, 0));
  for (int i = 1; i <= m - 2; ++i) {
    std::vector<GroupRingElement> cur(static_cast<std::size_t>(N + 2), GroupRingElement(two_n));
    const int sh = p.shift(i - 1);
    const bool lin = p.linear(i);
    for (long n = 0; n <= N; ++n) {
      GroupRingElement acc(two_n);
      for (long k = 0; k <= n; ++k) {
        const long e = 2 * k * k + (lin ? 2 * k : 0);
        acc += (ctx.binom_exact(n, k) * prev[static_cast<std::size_t>(k + sh)]).rotated(e);
      }
      cur[static_cast<std::size_t>(n)] = std::move(acc);
    }
    prev = std::move(cur);
  }
  const int sh = m >= 3 ? p.shift(m - 2) : 0;
  GroupRingElement out(two_n);
  for (long c = 0; c < N; ++c) out.add_rotated(prev[static_cast<std::size_t>(c + sh)], N * c + c * (c + 1));
  return out;
}

InvariantResult kashaev_nested(int m, const RootContext& ctx, const NestedOptions& opt) {
  require(m >= 1, "kashaev_nested requires m >= 1");
  InvariantResult r;
  r.m = m;
  r.N = ctx.N();
  r.method = InvariantMethod::nested;
  const Bits wb = ctx.work_bits();
  if (m == 1) {
    r.value = HPComplex(Real(ctx.N(), wb));
    if (opt.exact) r.exact_value = GroupRingElement::monomial(2 * ctx.N(), 0, ctx.N());
  } else {
    r.value = y_series(m, 0, ctx, opt) * ctx.N();
    if (opt.exact) {
      GroupRingElement g = y_series_exact(m, 0, ctx);
      g *= BigInt(ctx.N());
      r.exact_value = std::move(g);
    }
  }
  if (r.exact_value) r.cross_backend = abs(r.value - r.exact_value->evaluate(ctx));
  return r;
}

InvariantResult kashaev_theta(int m, const RootContext& ctx) {
  require(m >= 2, "kashaev_theta requires m >= 2");
  const long N = ctx.N();
  const Bits wb = ctx.work_bits();
  const PeriodicChar chi(m, 0);
  const long den = 2L * m * N;
  HPComplex s(wb);
  for (long k = 0; k <= den; ++k) {
    const int c = chi(k);
    if (c == 0) continue;
    HPComplex t = unit_root(mod(k * k, 2 * den), den, wb) * (k * k);
    if (c > 0) s += t;
    else s -= t;
  }
  HPComplex pre = unit_root(-static_cast<long>(m - 1) * (m - 1), den, wb);
  InvariantResult r;
  r.m = m;
  r.N = N;
  r.method = InvariantMethod::theta;
  r.value = -(pre * s) / (2 * den);
  return r;
}

InvariantResult kashaev_jones_limit(int m, const RootContext& ctx) {
  require(m >= 1, "kashaev_jones_limit requires m >= 1");
  const long N = ctx.N();
  const Bits wb = ctx.work_bits();
  // d/dh of sum eps e^{h g} at h = 2 pi i/N is sum eps g zeta^{2g};
  // 2g = -m(N^2-1) + 2 m j^2 + 2 (m+eps) j + eps is an integer
  HPComplex s(wb);
  for (int eps : {1, -1}) {
    for (long j = 0; j < N; ++j) {
      const long g2 = -static_cast<long>(m) * (N * N - 1) + 2L * m * j * j + 2L * (m + eps) * j + eps;
      HPComplex t = ctx.zeta(g2) * (eps * g2);
      s += t;
    }
  }
  // framing normalization (-1)^{mN} zeta^{-(m-1)}, and 1/(2N) from g2 = 2g
  HPComplex v = s * ctx.zeta(-(m - 1)) / (2 * N);
  if ((static_cast<long>(m) * N) % 2 != 0) v = -v;
  InvariantResult r;
  r.m = m;
  r.N = N;
  r.method = InvariantMethod::jones_limit;
  r.value = std::move(v);
  return r;
}

}  // namespace qlf
