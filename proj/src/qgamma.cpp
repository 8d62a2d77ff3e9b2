#include "qseries/qgamma.hpp"

#include <array>
#include <deque>

namespace qseries {

namespace mp = boost::multiprecision;

SeriesValue gamma_q(const Real& x, const Real& q, const PrecisionCtx& ctx) {
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::Domain, "Gamma_q needs 0 < q < 1");
  if (!(x > 0)) throw Error(ErrorKind::Domain, "Gamma_q needs x > 0, got " + to_decimal(x, 17));
  PrecisionScope scope(ctx);
  SeriesValue ratio = pochhammer_inf(q, q, ctx) / pochhammer_inf(qpow(q, x, ctx), q, ctx);
  return mp::pow(1 - q, 1 - x) * ratio;
}

namespace {

// Sums term(k), k = 0, 1, ... until the support is exhausted (nullopt) or the
// tail bound meets the tolerance. With `bound` the tail is rigorous; otherwise
// the largest of the last four observed ratios stands in for it.
SeriesValue sum_grid(const std::function<std::optional<Real>(std::int64_t)>& term,
                     const std::function<Real(std::int64_t)>& bound, const PrecisionCtx& ctx) {
  constexpr std::size_t kWindow = 4;
  constexpr int kWarmup = 8;
  constexpr int kMaxGrowth = 64;
  const Real tol(ctx.tailRelTol);
  Real sum = 0;
  Real weighted = 0;
  Real previous = 0;
  std::deque<Real> ratios;
  int growthRun = 0;

  auto done = [&](const Real& tail, std::int64_t terms, bool rigorous) {
    SeriesValue out;
    out.value = sum;
    out.errEstimate = tail + epsilon() * Real(8) * weighted;
    out.termsUsed = terms;
    out.certified = rigorous && out.errEstimate <= tol * mp::abs(sum);
    return out;
  };

  for (std::int64_t k = 0; k < ctx.maxTerms; ++k) {
    std::optional<Real> t = term(k);
    if (!t) return done(Real(0), k, true);
    sum += *t;
    weighted += Real(k + 1) * mp::abs(*t);

    if (bound) {
      Real rho = bound(k);
      if (rho >= 0 && rho < 1 && mp::abs(*t) * rho / (1 - rho) <= tol * mp::abs(sum))
        return done(mp::abs(*t) * rho / (1 - rho), k + 1, true);
      continue;
    }
    if (*t == 0) continue;
    if (previous != 0) {
      ratios.push_back(mp::abs(*t / previous));
      if (ratios.size() > kWindow) ratios.pop_front();
    }
    previous = *t;
    if (ratios.size() < kWindow) continue;
    Real rho = *std::max_element(ratios.begin(), ratios.end());
    if (rho < 1) {
      growthRun = 0;
      Real tail = mp::abs(*t) * rho / (1 - rho);
      if (k >= kWarmup && tail <= tol * mp::abs(sum)) return done(tail, k + 1, false);
    } else if (k >= kWarmup && ++growthRun >= kMaxGrowth) {
      throw Error(ErrorKind::NonConvergence, "Jackson sum terms stopped decaying");
    }
  }
  throw Error(ErrorKind::CapExceeded,
              "Jackson sum needs more than maxTerms=" + std::to_string(ctx.maxTerms) + " terms");
}

bool in_support(const QIntegrand& f, const Real& x) {
  return x > f.lower && (!f.upper || x <= *f.upper);
}

}  // namespace

SeriesValue jackson_integral_finite(const QIntegrand& f, const Real& a, const Real& q,
                                    const PrecisionCtx& ctx) {
  if (!(a > 0)) throw Error(ErrorKind::Domain, "Jackson integral needs a > 0");
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::Domain, "Jackson integral needs 0 < q < 1");
  ctx.validate();
  PrecisionScope scope(ctx);
  Real x = a;
  Real weight = 1;
  std::int64_t at = 0;
  auto term = [&](std::int64_t k) -> std::optional<Real> {
    // The grid is walked once, in order.
    while (at < k) {
      x *= q;
      weight *= q;
      ++at;
    }
    if (x <= f.lower) return std::nullopt;
    if (!in_support(f, x)) return Real(0);
    return f.f(x) * weight;
  };
  SeriesValue s = sum_grid(term, f.ratioBound, ctx);
  return (a * (1 - q)) * s;
}

SeriesValue jackson_integral_infinite(const QIntegrand& f, const Real& q, const PrecisionCtx& ctx) {
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::Domain, "Jackson integral needs 0 < q < 1");
  ctx.validate();
  PrecisionScope scope(ctx);
  SeriesValue positive = jackson_integral_finite(f, Real(1), q, ctx);

  Real x = 1;
  std::int64_t at = 0;
  auto term = [&](std::int64_t k) -> std::optional<Real> {
    while (at <= k) {  // k = 0 is grid point q^-1
      x /= q;
      ++at;
    }
    if (f.upper && x > *f.upper) return std::nullopt;
    if (!in_support(f, x)) return Real(0);
    return f.f(x) * x;
  };
  std::function<Real(std::int64_t)> bound;
  if (f.reverseRatioBound) bound = [&](std::int64_t k) { return f.reverseRatioBound(k + 1); };
  SeriesValue negative = (1 - q) * sum_grid(term, bound, ctx);
  return positive + negative;
}

namespace qgamma_sides {

namespace {

SeriesValue phi21(const Real& a1, const Real& a2, const Real& b1, const Real& q, const Real& z,
                  const PrecisionCtx& ctx) {
  const std::array<Real, 2> upper{a1, a2};
  const std::array<Real, 1> lower{b1};
  return phi(upper, lower, q, z, ctx);
}

}  // namespace

SeriesValue gamma_quotient(const Real& a, const Real& b, const Real& z, const Real& q,
                           const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return gamma_q(x, q, ctx); };
  return (G(b) * G(1 - a) * G(z) * G(b - a - z)) / (G(b - a) * G(a + z) * G(1 - a - z));
}

SeriesValue theorem51_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                          const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return gamma_q(x, q, ctx); };
  auto P = [&](const Real& e) { return qpow(q, e, ctx); };
  const Real c = mp::pow(1 - q, a + 1 - b);
  SeriesValue first = c * ((G(b) * G(z)) / (G(b - a) * G(a + z)) *
                           phi21(P(a + 1 + z - b), P(a), P(a + z), q, P(b - a), ctx));
  SeriesValue second = (G(1 - a) * G(b - a - z)) / (G(1 - b) * G(b + 1 - a - z)) *
                       phi21(P(b - a), P(b - z - a), P(b + 1 - a - z), q, P(1 - b), ctx);
  return exact(-c) + first + second;
}

SeriesValue eq58_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                     const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return gamma_q(x, q, ctx); };
  auto P = [&](const Real& e) { return qpow(q, e, ctx); };
  const Real c = mp::pow(1 - q, a + 1 - b);
  // The typeset "(z)_n" in the first sum is (q^z;q)_n.
  SeriesValue first = (G(b) * G(z)) / (G(a) * G(z + 1)) *
                      phi21(P(b - a), P(z), P(1 + z), q, P(a), ctx);
  SeriesValue second = c * ((G(1 - a) * G(b - a - z)) / (G(1 - a - z) * G(b - a)) *
                            phi21(P(1 - z), P(1 - b), P(1 - a - z), q, P(b - a), ctx));
  return exact(-c) + first + second;
}

QIntegrand theorem53_f(const Real& a, const Real& b, const Real& z, const Real& q,
                       const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real e1 = qpow(q, 1 - a - z, ctx);
  const Real e2 = qpow(q, 1 - z, ctx);
  const Real e3 = qpow(q, 1 - b, ctx);
  const Real power = b - a - 1;
  const Real decay = qpow(q, b - a, ctx);
  QIntegrand f;
  f.f = [=](const Real& x) {
    SeriesValue v = (pochhammer_inf(x * q, q, ctx) * pochhammer_inf(x * e1, q, ctx)) /
                    (pochhammer_inf(x * e2, q, ctx) * pochhammer_inf(x * e3, q, ctx));
    return v.value * mp::pow(x, power);
  };
  // t(n+1)/t(n) = q^{b-a} (1-q^{n+1-z})(1-q^{n+1-b}) / ((1-q^{n+1})(1-q^{n+1-a-z})).
  f.ratioBound = [=](std::int64_t n) {
    const Real qn1 = mp::pow(q, n + 1);
    return decay / ((1 - qn1) * (1 - qn1 * e1 / q));
  };
  return f;
}

QIntegrand theorem53_g(const Real& a, const Real& b, const Real& z, const Real& q,
                       const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real e1 = qpow(q, a + z, ctx);
  const Real e2 = qpow(q, a + 1 + z - b, ctx);
  const Real e3 = qpow(q, a, ctx);
  const Real power = b - a - 1;
  const Real decay = qpow(q, b - a, ctx);
  QIntegrand g;
  g.f = [=](const Real& x) {
    SeriesValue v = (pochhammer_inf(x * q, q, ctx) * pochhammer_inf(x * e1, q, ctx)) /
                    (pochhammer_inf(x * e2, q, ctx) * pochhammer_inf(x * e3, q, ctx));
    return v.value * mp::pow(x, power);
  };
  // t(n+1)/t(n) = q^{b-a} (1-q^{n+a+1+z-b})(1-q^{n+a}) / ((1-q^{n+1})(1-q^{n+a+z})).
  g.ratioBound = [=](std::int64_t n) {
    const Real qn = mp::pow(q, n);
    return decay / ((1 - qn * q) * (1 - qn * e1));
  };
  return g;
}

SeriesValue theorem53_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                          const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return gamma_q(x, q, ctx); };
  const Real c = mp::pow(1 - q, a + 1 - b);
  SeriesValue jf = jackson_integral_finite(theorem53_f(a, b, z, q, ctx), Real(1), q, ctx);
  SeriesValue jg = jackson_integral_finite(theorem53_g(a, b, z, q, ctx), Real(1), q, ctx);
  SeriesValue first = (G(1 - a) * G(b - a - z)) / (G(b - a) * G(1 - z) * G(1 - b)) * jf;
  SeriesValue second = (G(b) * G(z)) / (G(b - a) * G(a + 1 + z - b) * G(a)) * jg;
  return exact(-c) + first + second;
}

}  // namespace qgamma_sides

namespace {

using constraint::less;

Real A(const QPoint& p) { return p.at("a"); }
Real B(const QPoint& p) { return p.at("b"); }
Real Z(const QPoint& p) { return p.at("z"); }
Real zero(const QPoint&) { return Real(0); }
Real one(const QPoint&) { return Real(1); }

std::vector<Constraint> wedge() {
  return {
      less("0 < z", zero, Z),
      less("z < b-a", Z, [](const QPoint& p) { return B(p) - A(p); }),
      less("b-a < 1", [](const QPoint& p) { return B(p) - A(p); }, one),
      less("a+z < 1", [](const QPoint& p) { return A(p) + Z(p); }, one),
  };
}

Constraint nome() {
  return less("0 < q < 1", zero, [](const QPoint& p) { return std::min(p.q(), 1 - p.q()); });
}

QPoint sample_wedge(Rng& rng, double aLo, double aHi, bool withQ) {
  Real a = rng.uniform_decimal(aLo, aHi);
  Real d = rng.uniform_decimal(0.1, 0.95);
  Real z = rng.uniform_decimal(0.05, static_cast<double>(d) - 0.05);
  QPoint p({{"a", a}, {"b", a + d}, {"z", z}});
  if (withQ) p.set("q", rng.uniform_decimal(0.1, 0.7));
  return p;
}

using QSide = SeriesValue (*)(const Real&, const Real&, const Real&, const Real&,
                              const PrecisionCtx&);

Evaluator abzq(QSide f) {
  return [f](const QPoint& p, const PrecisionCtx& ctx) { return f(A(p), B(p), Z(p), p.q(), ctx); };
}

}  // namespace

std::vector<IdentityEntry> register_qgamma_identities() {
  using namespace qgamma_sides;
  const std::vector<std::string> names{"a", "b", "z", "q"};
  auto withExtra = [](std::vector<Constraint> extra) {
    auto base = wedge();
    base.insert(base.begin(), nome());
    for (auto& c : extra) base.push_back(std::move(c));
    return Domain(std::move(base));
  };

  std::vector<IdentityEntry> out;
  out.push_back({"thm-5.1", "Theorem 5.1, Eq (5.4)", names,
                 withExtra({less("b < 1", B, one), less("b > 0", zero, B),
                            less("a+z > 0", zero, [](const QPoint& p) { return A(p) + Z(p); })}),
                 abzq(gamma_quotient), abzq(theorem51_rhs),
                 [](Rng& rng) { return sample_wedge(rng, -0.3, 0.45, true); }});
  out.push_back({"eq-5.8", "Eq (5.8), q-form of Theorem 5.2", names,
                 withExtra({less("a > 0", zero, A)}), abzq(gamma_quotient), abzq(eq58_rhs),
                 [](Rng& rng) { return sample_wedge(rng, 0.1, 0.6, true); }});
  out.push_back({"thm-5.3", "Theorem 5.3, Eq (5.10)", names,
                 withExtra({less("a > 0", zero, A), less("b < 1", B, one)}),
                 abzq(gamma_quotient), abzq(theorem53_rhs),
                 [](Rng& rng) { return sample_wedge(rng, 0.05, 0.45, true); }});
  return out;
}

namespace detail {
QPoint sample_wedge_point(Rng& rng) { return sample_wedge(rng, 0.05, 0.45, false); }
std::vector<Constraint> wedge_constraints() { return wedge(); }
}  // namespace detail

}  // namespace qseries
