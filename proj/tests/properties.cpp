#include "properties.hpp"


namespace qseries::testing {

namespace mp = boost::multiprecision;

void PropertyOutcome::record(const Real& err, const Real& tol, const std::string& where) {
  ++cases;
  if (err > worst) worst = err;
  if (!(err <= tol)) {
    if (failures == 0) firstFailure = where + " err=" + to_decimal(err, 6);
    ++failures;
  }
}

Real rel_diff(const Real& x, const Real& y) {
  Real scale = std::max(mp::abs(x), mp::abs(y));
  if (scale == 0) return Real(0);
  return mp::abs(x - y) / scale;
}

namespace {

std::string at(std::initializer_list<std::pair<const char*, Real>> values) {
  std::string s;
  for (const auto& [k, v] : values) s += std::string(s.empty() ? "" : " ") + k + "=" + to_decimal(v, 8);
  return s;
}

Real pick_sign(Rng& rng, Real v) { return rng.coin() ? v : Real(-v); }

}  // namespace

PropertyOutcome pochhammer_recurrence(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-30");
  for (int i = 0; i < cases; ++i) {
    Real a = rng.uniform_decimal(-2, 1);
    Real q = rng.uniform_decimal(0.05, 0.9);
    std::int64_t n = rng.uniform_int(-20, 20);
    Real lhs = pochhammer_n(a, q, n + 1, ctx).value;
    Real rhs = pochhammer_n(a, q, n, ctx).value * (1 - a * mp::pow(q, n));
    out.record(rel_diff(lhs, rhs), tol, at({{"a", a}, {"q", q}, {"n", Real(n)}}));
  }
  return out;
}

PropertyOutcome pochhammer_gluing(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-30");
  for (int i = 0; i < cases; ++i) {
    Real a = rng.uniform_decimal(-2, 1);
    Real q = rng.uniform_decimal(0.05, 0.9);
    std::int64_t n = rng.uniform_int(-20, 20);
    Real lhs = pochhammer_n(a, q, n, ctx).value * pochhammer_inf(a * mp::pow(q, n), q, ctx).value;
    Real rhs = pochhammer_inf(a, q, ctx).value;
    out.record(rel_diff(lhs, rhs), tol,
               at({{"a", a}, {"q", q}, {"n", Real(n)}}));
  }
  return out;
}

PropertyOutcome q_binomial(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-30");
  for (int i = 0; i < cases; ++i) {
    Real a = rng.uniform_decimal(-2, 2);
    Real z = rng.uniform_decimal(-0.95, 0.95);
    Real q = rng.uniform_decimal(0.05, 0.9);
    const Real upper[] = {a};
    Real lhs = phi(upper, {}, q, z, ctx).value * pochhammer_inf(z, q, ctx).value;
    Real rhs = pochhammer_inf(a * z, q, ctx).value;
    out.record(rel_diff(lhs, rhs), tol, at({{"a", a}, {"z", z}, {"q", q}}));
  }
  return out;
}

WindowSum bilateral_window(const Real& a, const Real& b, const Real& q, const Real& z, int N) {
  Real sum = 1;
  Real absSum = 1;
  Real t = 1;
  for (int n = 0; n < N; ++n) {
    t *= (1 - a * mp::pow(q, n)) / (1 - b * mp::pow(q, n)) * z;
    sum += t;
    absSum += mp::abs(t);
  }
  t = 1;
  for (int m = 1; m <= N; ++m) {
    // (a)_{-m} = (a)_{-m+1} / (1 - a q^{-m})
    Real qm = mp::pow(q, -m);
    t *= (1 - b * qm) / ((1 - a * qm) * z);
    sum += t;
    absSum += mp::abs(t);
  }
  return {sum, absSum};
}

PropertyOutcome bilateral_split(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-25");
  for (int i = 0; i < cases; ++i) {
    // Both halves decay at least like 0.7^n, so the +-400 window is far past 1e-25.
    Real q = rng.uniform_decimal(0.05, 0.9);
    Real a = pick_sign(rng, rng.uniform_decimal(0.2, 2));
    Real z = pick_sign(rng, rng.uniform_decimal(0.2, 0.7));
    Real b = pick_sign(rng, Real(rng.uniform_decimal(0.05, 0.7) * mp::abs(a * z) * Real("0.99")));
    const Real upper[] = {a};
    const Real lower[] = {b};
    Real split = psi_bilateral(upper, lower, q, z, ctx).value;
    WindowSum direct = bilateral_window(a, b, q, z, 400);
    // Signed terms can cancel to a sum far below their size, so the error is
    // measured against the sum of |terms|.
    out.record(mp::abs(split - direct.sum) / direct.absSum, tol, at({{"a", a}, {"b", b}, {"q", q}, {"z", z}}));
  }
  return out;
}

PropertyOutcome gamma_q_functional(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-25");
  for (int i = 0; i < cases; ++i) {
    Real x = rng.uniform_decimal(0.1, 5);
    Real q = rng.uniform_decimal(0.1, 0.9);
    Real lhs = gamma_q(x + 1, q, ctx).value;
    Real rhs = (1 - qpow(q, x, ctx)) / (1 - q) * gamma_q(x, q, ctx).value;
    out.record(rel_diff(lhs, rhs), tol, at({{"x", x}, {"q", q}}));
  }
  return out;
}

PropertyOutcome gamma_q_classical_limit(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  PropertyOutcome out;
  const Real tol("1e-6");
  const char* xs[] = {"0.5", "1.5", "2.5"};
  for (const char* xs_ : xs) {
    Real x(xs_);
    Real exact = classical_gamma(x, ctx);
    Real g[3];
    const char* qs[] = {"0.9", "0.99", "0.999"};
    for (int k = 0; k < 3; ++k) g[k] = gamma_q(x, Real(qs[k]), ctx).value;
    // Monotone approach.
    Real d0 = mp::abs(g[0] - exact), d1 = mp::abs(g[1] - exact), d2 = mp::abs(g[2] - exact);
    out.record(d0 > d1 && d1 > d2 ? Real(0) : Real(1), Real(0), "monotone x=" + std::string(xs_));
    // Richardson in h = 1 - q with h shrinking by 10 each step.
    Real r01 = (10 * g[1] - g[0]) / 9;
    Real r12 = (10 * g[2] - g[1]) / 9;
    Real r = (100 * r12 - r01) / 99;
    out.record(rel_diff(r, exact), tol, "richardson x=" + std::string(xs_));
  }
  return out;
}

PropertyOutcome jackson_linearity(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real rounding = mp::pow(Real(10), -(ctx.working_digits() - 5));
  for (int i = 0; i < cases; ++i) {
    Real q = rng.uniform_decimal(0.1, 0.9);
    Real s = rng.uniform_decimal(0, 3);
    Real c = rng.uniform_decimal(0.1, 2);
    Real alpha = rng.uniform_decimal(-3, 3);
    Real beta = rng.uniform_decimal(-3, 3);
    Real a = rng.uniform_decimal(0.5, 2);
    Real lower = mp::pow(q, 60);
    QIntegrand f{[s](const Real& t) { return Real(mp::pow(t, s)); }, lower, {}, {}, {}};
    QIntegrand g{[c](const Real& t) { return Real(1 / (1 + c * t)); }, lower, {}, {}, {}};
    QIntegrand h{[&](const Real& t) { return Real(alpha * f.f(t) + beta * g.f(t)); }, lower, {}, {}, {}};
    SeriesValue H = jackson_integral_finite(h, a, q, ctx);
    SeriesValue F = jackson_integral_finite(f, a, q, ctx);
    SeriesValue G = jackson_integral_finite(g, a, q, ctx);
    Real scale = mp::abs(alpha * F.value) + mp::abs(beta * G.value);
    // The sums may stop at different grid points; each stop is covered by
    // its own tail estimate.
    Real tol = (H.errEstimate + mp::abs(alpha) * F.errEstimate + mp::abs(beta) * G.errEstimate) / scale +
               rounding;
    out.record(mp::abs(H.value - (alpha * F.value + beta * G.value)) / scale, tol,
               at({{"q", q}, {"s", s}, {"c", c}}));
  }
  return out;
}

PropertyOutcome gamma_reflection(int cases, std::uint64_t seed, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Rng rng(seed);
  PropertyOutcome out;
  const Real tol("1e-30");
  for (int i = 0; i < cases; ++i) {
    Real x = rng.uniform_decimal(0.0001, 0.9999);
    Real v = classical_gamma(x, ctx) * classical_gamma(1 - x, ctx) * mp::sin(pi() * x) / pi();
    out.record(mp::abs(v - 1), tol, at({{"x", x}}));
  }
  return out;
}

Real lemniscate_quadrature(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  // x = sin(t) turns the integral into (1/2) int_0^pi (1 + sin^2 t)^{-1/2} dt,
  // a smooth periodic integrand for which the trapezoidal rule converges
  // geometrically (about 1.5 digits per node).
  constexpr int kNodes = 256;
  const Real h = pi() / kNodes;
  Real sum = 0;
  for (int k = 0; k < kNodes; ++k) {
    Real s = mp::sin(h * k);
    sum += 1 / mp::sqrt(1 + s * s);
  }
  return sum * h / 2;
}

}  // namespace qseries::testing
