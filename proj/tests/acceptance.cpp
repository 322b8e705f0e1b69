// One PASS/FAIL line per acceptance criterion, with wall time and budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qlf/asymptotics.hpp"
#include "qlf/characters.hpp"
#include "qlf/identities.hpp"
#include "qlf/invariants.hpp"
#include "qlf/modular.hpp"
#include "qlf/numeric.hpp"

using namespace qlf;

namespace {

const Bits B{256};

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

Real bound(long e) { return pow2(e, Bits{64}); }

void hopf(Outcome& o) {
  for (long N = 1; N <= 64; ++N) {
    const RootContext ctx(N, B, true);
    NestedOptions opt;
    opt.exact = true;
    const InvariantResult r = kashaev_nested(1, ctx, opt);
    if (!(r.value.real() == Real(N, B)) || !r.value.imag().is_zero()) o.fail("complex value differs at N=" + std::to_string(N));
    if (!r.exact_value || !(*r.exact_value == GroupRingElement::monomial(2 * N, 0, N))) {
      o.fail("exact value differs at N=" + std::to_string(N));
    }
  }
  o.note << "N=1..64";
}

void method_equivalence(Outcome& o) {
  double worst = -1e9;
  for (int m = 2; m <= 5; ++m) {
    for (long N = 1; N <= 30; ++N) {
      const RootContext ctx(N, B);
      const Real d = abs(kashaev_nested(m, ctx).value - kashaev_theta(m, ctx).value);
      worst = std::max(worst, d.log2_abs());
      if (!(d < bound(-232))) o.fail("m=" + std::to_string(m) + " N=" + std::to_string(N));
    }
  }
  o.note << "max log2 residual " << worst;
}

void main_identity(Outcome& o) {
  long checked = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      const IdentityReport r = verify_main_identity({m, a, 100, 40});
      checked += r.coefficients_checked;
      if (!r.passed) o.fail("m=" + std::to_string(m) + " a=" + std::to_string(a));
    }
  }
  const IdentityReport neg = verify_main_identity({4, 1, 100, 40}, Perturbation{7, 31, 1});
  if (neg.passed || !neg.mismatch || neg.mismatch->q_exponent != BigRational(31)) o.fail("perturbation not detected");
  o.note << checked << " coefficients, control detected";
}

void euler(Outcome& o) {
  for (int m = 2; m <= 6; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      if (euler_numbers_gf(m, a, 20).values != euler_numbers_bernoulli(m, a, 20).values) {
        o.fail("routes differ at m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
    }
  }
  struct Row {
    int m, a;
    std::vector<BigRational> v;
  };
  const std::vector<Row> table = {
      {2, 0, {1, -1, 5, -61}},          {3, 0, {1, rat(-8, 3), 32, -896}}, {3, 1, {2, rat(-10, 3), 34, -910}},
      {4, 0, {1, -5, 109, -5465}},      {4, 1, {2, -8, 160, -7808}},       {4, 2, {3, -7, 119, -5587}},
  };
  int n = 0;
  for (const auto& r : table) {
    const auto got = euler_numbers_gf(r.m, r.a, 3).values;
    for (std::size_t k = 0; k < r.v.size(); ++k, ++n) {
      if (got[k] != r.v[k]) o.fail("table value m=" + std::to_string(r.m) + " a=" + std::to_string(r.a));
    }
  }
  o.note << "k<=20 routes equal, " << n << " tabulated values";
}

void conjecture2(Outcome& o) {
  double w0 = -1e9, w = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int a = 0; a <= m - 2; ++a) {
      for (long N = 1; N <= 15; ++N) {
        const RootContext ctx(N, B);
        const Real r = conjecture2_residual(m, a, ctx);
        if (a == 0) {
          w0 = std::max(w0, r.log2_abs());
          if (!(r < bound(-232))) o.fail("a=0 bound at m=" + std::to_string(m) + " N=" + std::to_string(N));
        } else {
          w = std::max(w, r.to_double());
          if (!(r < Real(1e-12, B))) o.fail("1e-12 bound at m=" + std::to_string(m) + " N=" + std::to_string(N));
        }
      }
    }
  }
  o.note << "a=0 max log2 " << w0 << ", a>0 max " << w;
}

void eta(Outcome& o) {
  int n = 0;
  for (auto c : {EtaCase::m2, EtaCase::m3, EtaCase::m4}) {
    for (const auto& r : eta_identity_check(c, 60)) {
      ++n;
      if (!r.passed) o.fail(r.name);
    }
  }
  o.note << n << " identities to q^60";
}

void modular(Outcome& o) {
  const std::vector<HPComplex> taus = {HPComplex(Real(0L, B), Real(1L, B)),
                                       HPComplex(Real("0.3", B), Real("1.2", B)),
                                       HPComplex(Real(0L, B), Real(2L, B))};
  double ws = -1e9, wm = -1e9;
  for (int m = 2; m <= 4; ++m) {
    const TTransformReport t = t_transform_check(m, taus);
    if (!t.exponents_ok) o.fail("T exponents m=" + std::to_string(m));
    for (const auto& tau : taus) {
      const Real s = s_transform_check(m, tau);
      ws = std::max(ws, s.log2_abs());
      if (!(s < bound(-208))) o.fail("S residual m=" + std::to_string(m));
    }
  }
  for (int m = 2; m <= 12; ++m) {
    const Real d = ModularMatrix(m, B).involution_defect();
    wm = std::max(wm, d.log2_abs());
    if (!(d < bound(-240))) o.fail("M^2 m=" + std::to_string(m));
  }
  o.note << "S max log2 " << ws << ", M^2-I max log2 " << wm;
}

void slopes(Outcome& o) {
  struct Case {
    int m, a, K;
  };
  std::vector<Case> cases;
  for (int K = 0; K <= 3; ++K) cases.push_back({2, 0, K});
  for (int K = 0; K <= 2; ++K) cases.push_back({3, 0, K});
  for (int K = 0; K <= 2; ++K) cases.push_back({3, 1, K});
  for (const auto& c : cases) {
    const ErrorScan s = conjecture1_error_scan(c.m, c.a, c.K, {8, 16, 32, 64}, B);
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%d,%d,%d):%.2f ", c.m, c.a, c.K, s.slope);
    o.note << buf;
    if (std::fabs(s.slope + (c.K + 1)) > 0.5) o.fail(std::string("slope ") + buf + "| ");
  }
}

void zagier(Outcome& o) {
  const ZagierReport z = zagier_identity_check(50);
  if (!z.stabilized) o.fail("did not stabilize");
  if (!z.matches) o.fail("mismatch");
  const ZagierReport c = zagier_identity_check(50, 1);
  if (c.stabilized) o.fail("control stabilized");
  o.note << "q^50, " << z.terms_used << " partial sums, control diverges";
}

void backends(Outcome& o) {
  double w = -1e9;
  for (int m = 1; m <= 3; ++m) {
    for (long N = 1; N <= 12; ++N) {
      const RootContext ctx(N, B, true);
      NestedOptions opt;
      opt.exact = true;
      const InvariantResult r = kashaev_nested(m, ctx, opt);
      if (!r.cross_backend) {
        o.fail("no exact value");
        continue;
      }
      w = std::max(w, r.cross_backend->log2_abs());
      if (!(*r.cross_backend < bound(-224))) o.fail("m=" + std::to_string(m) + " N=" + std::to_string(N));
    }
  }
  o.note << "max log2 residual " << w;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "hopf value", 1, hopf},
      {2, "nested equals theta", 60, method_equivalence},
      {3, "main q-series identity", 120, main_identity},
      {4, "generalized Euler numbers", 5, euler},
      {5, "Eichler integral at 1/N vs omega-series", 60, conjecture2},
      {6, "eta-product identities", 10, eta},
      {7, "modular S/T transforms", 10, modular},
      {8, "asymptotic decay order", 120, slopes},
      {9, "Zagier averaged sum", 5, zagier},
      {10, "exact vs complex backend", 30, backends},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.fail("over time budget");
    std::printf("%s %2d %-42s %8.3fs (budget %5.0fs)  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                c.budget_s, o.note.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
