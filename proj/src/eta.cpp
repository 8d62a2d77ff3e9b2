#include "qseries/eta.hpp"

#include <array>

namespace qseries {

namespace mp = boost::multiprecision;

SeriesValue eta_nome(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real prefactor = qpow(q, Real(1) / 24, ctx);
  return prefactor * pochhammer_inf(q, q, ctx);
}

SeriesValue eta_quotient(const std::vector<EtaFactor>& scales, const Real& q,
                         const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue numerator = exact(Real(1));
  SeriesValue denominator = exact(Real(1));
  for (const auto& f : scales) {
    if (f.multiplier < 1) throw Error(ErrorKind::Domain, "eta multipliers must be >= 1");
    SeriesValue e = eta_nome(mp::pow(q, f.multiplier), ctx);
    SeriesValue& target = f.exponent >= 0 ? numerator : denominator;
    for (int k = 0; k < std::abs(f.exponent); ++k) target = target * e;
  }
  return numerator / denominator;
}

namespace eta_rhs {

namespace {

SeriesValue phi21(const Real& a1, const Real& a2, const Real& b1, const Real& q, const Real& z,
                  const PrecisionCtx& ctx) {
  const std::array<Real, 2> upper{a1, a2};
  const std::array<Real, 1> lower{b1};
  return phi(upper, lower, q, z, ctx);
}

}  // namespace

SeriesValue eq42(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real Q = q * q;
  // sum (q^3;q^2)_n / (q^4;q^2)_n q^n as a 2phi1 over base q^2.
  SeriesValue series = phi21(Q * q, Q, Q * Q, Q, q, ctx);
  SeriesValue products = pochhammer_inf(q, Q, ctx) / pochhammer_inf(Q, Q, ctx);
  const Real c = qpow(q, Real(7) / 8, ctx) / (1 + q);
  return exact(qpow(q, Real(-1) / 8, ctx)) + (-c) * (products * series);
}

SeriesValue eq43(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real Q = q * q;
  const Real q43 = qpow(q, Real(4) / 3, ctx);
  const Real c = 2 * (1 + q) * q43 / ((1 + Q) * (1 + Q * Q));
  // sum (1-q^{2n+2})/(1-q^{2n+1}) (-q^2)^n = (1+q) 2phi1(q^4, q; q^3; q^2, -q^2).
  SeriesValue alternating = (1 + q) * phi21(Q * Q, q, Q * q, Q, -Q, ctx);
  SeriesValue products = (pochhammer_inf(Q * Q, Q, ctx) * pochhammer_inf(-1 / q, Q, ctx)) /
                         (pochhammer_inf(Real(-1), Q, ctx) * pochhammer_inf(Q * q, Q, ctx));
  SeriesValue last = products * phi21(q, -1 / (Q * Q), -1 / q, Q, Q * Q, ctx);
  return exact(c) + (-2 * q43 / (1 - q)) * alternating + (-c) * last;
}

SeriesValue eq44(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real Q = q * q * q;
  const Real q2 = q * q;
  const Real q4 = q2 * q2;
  const Real q6 = Q * Q;
  const Real c = qpow(q, Real(4) / 3, ctx) * (1 + q + q2) / ((1 + q2) * (1 + q4 * q));
  auto p = [&](const Real& x) { return pochhammer_inf(x, Q, ctx); };
  SeriesValue first = (p(q6) * p(-1 / q)) / (p(-q) * p(q4)) *
                      phi21(q, -1 / (q4 * q), -1 / q, Q, q6, ctx);
  SeriesValue second = (p(q6) * p(-q4)) / (p(-q4 * q4) * p(q2)) *
                       phi21(1 / q, -q2, -q4, Q, q6, ctx);
  return c * (exact(Real(-1)) + first) + c * second;
}

}  // namespace eta_rhs

std::vector<IdentityEntry> register_eta_identities() {
  auto domain = [] {
    return Domain({constraint::less("q > 0.01", [](const QPoint&) { return Real("0.01"); },
                                    [](const QPoint& p) { return p.q(); }),
                   constraint::less("q < 0.8", [](const QPoint& p) { return p.q(); },
                                    [](const QPoint&) { return Real("0.8"); })});
  };
  auto sampler = [](Rng& rng) { return QPoint({{"q", rng.uniform_decimal(0.06, 0.6)}}); };
  auto lhs = [](std::vector<EtaFactor> scales) -> Evaluator {
    return [scales](const QPoint& p, const PrecisionCtx& ctx) {
      return eta_quotient(scales, p.q(), ctx);
    };
  };
  auto rhs = [](SeriesValue (*f)(const Real&, const PrecisionCtx&)) -> Evaluator {
    return [f](const QPoint& p, const PrecisionCtx& ctx) { return f(p.q(), ctx); };
  };

  std::vector<IdentityEntry> out;
  out.push_back({"eq-4.2", "Eq (4.2), eta(tau)/eta^2(2tau)", {"q"}, domain(),
                 lhs({{1, 1}, {2, -2}}), rhs(eta_rhs::eq42), sampler});
  out.push_back({"eq-4.3", "Eq (4.3), eta^10(2tau)/(eta^4(tau) eta^2(4tau))", {"q"}, domain(),
                 lhs({{2, 10}, {1, -4}, {4, -2}}), rhs(eta_rhs::eq43), sampler});
  out.push_back({"eq-4.4", "Eq (4.4), eta^3(3tau)/eta(tau)", {"q"}, domain(),
                 lhs({{3, 3}, {1, -1}}), rhs(eta_rhs::eq44), sampler});
  return out;
}

}  // namespace qseries
