#include "qseries/identities.hpp"

#include <array>

namespace qseries {

namespace mp = boost::multiprecision;

namespace ramanujan {

namespace {

SeriesValue pinf(const Real& x, const Real& q, const PrecisionCtx& ctx) {
  return pochhammer_inf(x, q, ctx);
}

SeriesValue phi21(const Real& a1, const Real& a2, const Real& b1, const Real& q, const Real& z,
                  const PrecisionCtx& ctx) {
  const std::array<Real, 2> upper{a1, a2};
  const std::array<Real, 1> lower{b1};
  return phi(upper, lower, q, z, ctx);
}

const SeriesValue kMinusOne{Real(-1), Real(0), 0, true};

}  // namespace

SeriesValue bilateral(const Real& a, const Real& b, const Real& q, const Real& z,
                      const PrecisionCtx& ctx) {
  const std::array<Real, 1> upper{a};
  const std::array<Real, 1> lower{b};
  return psi_bilateral(upper, lower, q, z, ctx);
}

SeriesValue product_side(const Real& a, const Real& b, const Real& q, const Real& z,
                         const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue num = pinf(az, q, ctx) * pinf(q / az, q, ctx) * pinf(q, q, ctx) * pinf(b / a, q, ctx);
  SeriesValue den = pinf(z, q, ctx) * pinf(b / az, q, ctx) * pinf(b, q, ctx) * pinf(q / a, q, ctx);
  return num / den;
}

SeriesValue heine_series(const Real& a, const Real& b, const Real& c, const Real& q,
                         const Real& z, const PrecisionCtx& ctx) {
  return phi21(a, b, c, q, z, ctx);
}

SeriesValue heine_first(const Real& a, const Real& b, const Real& c, const Real& q,
                        const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue pre = (pinf(b, q, ctx) * pinf(a * z, q, ctx)) / (pinf(c, q, ctx) * pinf(z, q, ctx));
  return pre * phi21(c / b, z, a * z, q, b, ctx);
}

SeriesValue heine_second(const Real& a, const Real& b, const Real& c, const Real& q,
                         const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue pre =
      (pinf(c / b, q, ctx) * pinf(b * z, q, ctx)) / (pinf(c, q, ctx) * pinf(z, q, ctx));
  return pre * phi21(a * b * z / c, b, b * z, q, c / b, ctx);
}

SeriesValue nonnegative_half(const Real& a, const Real& b, const Real& q, const Real& z,
                             const PrecisionCtx& ctx) {
  return phi21(a, q, b, q, z, ctx);
}

SeriesValue reflected_half(const Real& a, const Real& b, const Real& q, const Real& z,
                           const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return phi21(q / b, q, q / a, q, b / (a * z), ctx);
}

SeriesValue nonnegative_half_via_second(const Real& a, const Real& b, const Real& q,
                                        const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue pre =
      (pinf(b / a, q, ctx) * pinf(a * z, q, ctx)) / (pinf(b, q, ctx) * pinf(z, q, ctx));
  return pre * phi21(a, a * q * z / b, a * z, q, b / a, ctx);
}

SeriesValue reflected_half_via_first(const Real& a, const Real& b, const Real& q, const Real& z,
                                     const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue pre = (pinf(q / b, q, ctx) * pinf(b * q / az, q, ctx)) /
                    (pinf(q / a, q, ctx) * pinf(b / az, q, ctx));
  return pre * phi21(b / a, b / az, b * q / az, q, q / b, ctx);
}

SeriesValue nonnegative_half_via_first(const Real& a, const Real& b, const Real& q,
                                       const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue pre =
      (pinf(a, q, ctx) * pinf(q * z, q, ctx)) / (pinf(b, q, ctx) * pinf(z, q, ctx));
  return pre * phi21(b / a, z, q * z, q, a, ctx);
}

SeriesValue reflected_half_via_second(const Real& a, const Real& b, const Real& q,
                                      const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue pre = (pinf(b / a, q, ctx) * pinf(q / az, q, ctx)) /
                    (pinf(q / a, q, ctx) * pinf(b / az, q, ctx));
  return pre * phi21(q / z, q / b, q / az, q, b / a, ctx);
}

// The theorem right-hand sides are transcribed term by term rather than
// assembled from the half transforms above, so the two routes can be compared.

SeriesValue theorem21_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue first = (pinf(b / a, q, ctx) * pinf(az, q, ctx)) / (pinf(b, q, ctx) * pinf(z, q, ctx)) *
                      phi21(a, a * q * z / b, az, q, b / a, ctx);
  SeriesValue second = (pinf(q / b, q, ctx) * pinf(b * q / az, q, ctx)) /
                       (pinf(q / a, q, ctx) * pinf(b / az, q, ctx)) *
                       phi21(b / a, b / az, b * q / az, q, q / b, ctx);
  return kMinusOne + first + second;
}

SeriesValue theorem22_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue first = (pinf(a, q, ctx) * pinf(q * z, q, ctx)) / (pinf(b, q, ctx) * pinf(z, q, ctx)) *
                      phi21(b / a, z, q * z, q, a, ctx);
  SeriesValue second = (pinf(b / a, q, ctx) * pinf(q / az, q, ctx)) /
                       (pinf(q / a, q, ctx) * pinf(b / az, q, ctx)) *
                       phi21(q / z, q / b, q / az, q, b / a, ctx);
  return kMinusOne + first + second;
}

SeriesValue theorem23_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real az = a * z;
  SeriesValue first = (pinf(b / a, q, ctx) * pinf(az, q, ctx)) / (pinf(b, q, ctx) * pinf(z, q, ctx)) *
                      phi21(a * q * z / b, a, az, q, b / a, ctx);
  SeriesValue second = (pinf(b / a, q, ctx) * pinf(q / az, q, ctx)) /
                       (pinf(q / a, q, ctx) * pinf(b / az, q, ctx)) *
                       phi21(q / z, q / b, q / az, q, b / a, ctx);
  return kMinusOne + first + second;
}

SeriesValue special31_lhs(const Real& q, const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real absZ = mp::abs(z);
  DominatedSeries up{
      [&](std::int64_t n) { return mp::pow(z, n) / (1 + mp::pow(q, n - 1)); },
      [&](std::int64_t n) { return absZ * (1 + mp::pow(q, n - 1)); }, 0};
  // n = -m: z^{-m} / (1 + q^{-m-1}); successive ratios are at most (q + q^{m+2}) / |z|.
  DominatedSeries down{
      [&](std::int64_t m) { return mp::pow(z, -m) / (1 + mp::pow(q, -m - 1)); },
      [&](std::int64_t m) { return (q + mp::pow(q, m + 2)) / absZ; }, 1};
  return sum_dominated(up, ctx) + sum_dominated(down, ctx);
}

SeriesValue special31_rhs(const Real& q, const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real w = q / (1 + q);
  SeriesValue pre = (pinf(q, q, ctx) * pinf(-z / q, q, ctx)) / (pinf(Real(-1), q, ctx) * pinf(z, q, ctx));
  SeriesValue middle = w * (pre * phi21(z, -1 / q, -z / q, q, q, ctx));
  const Real absZ = mp::abs(z);
  DominatedSeries last{
      [&](std::int64_t n) { return mp::pow(-q, n) / (1 - mp::pow(q, n + 1) / z); },
      [&](std::int64_t n) {
        Real d = 1 - mp::pow(q, n + 2) / absZ;
        return d > 0 ? q * (1 + mp::pow(q, n + 1) / absZ) / d : Real(2);
      },
      0};
  return exact(-w) + middle + q * sum_dominated(last, ctx);
}

SeriesValue special32_lhs(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return bilateral(-q, -q * q * q, q, q, ctx);
}

SeriesValue special32_rhs(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Real v = (1 + q * q) * (1 + q) / (q * (1 - q));
  return {v, 4 * epsilon() * mp::abs(v), 0, true};
}

SeriesValue special32_typeset_sum(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto term = [&](std::int64_t n) {
    return mp::pow(q, n) / ((1 + mp::pow(q, n + 1)) * (1 + mp::pow(q, n + 2)));
  };
  DominatedSeries up{term, [&](std::int64_t n) { return q * (1 + mp::pow(q, n + 1)); }, 0};
  DominatedSeries down{[&](std::int64_t m) { return term(-m); },
                       [&](std::int64_t m) { return q + mp::pow(q, m - 1); }, 1};
  return sum_dominated(up, ctx) + sum_dominated(down, ctx);
}

SeriesValue special33_lhs(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real q2 = q * q;
  const Real c = 2 * (1 + 1 / q2) * (1 + q2);
  auto term = [&](std::int64_t n) {
    return c * mp::pow(q, n) /
           ((1 + mp::pow(q, 2 * n - 2)) * (1 + mp::pow(q, 2 * n)) * (1 + mp::pow(q, 2 * n + 2)));
  };
  DominatedSeries up{term, [&](std::int64_t n) { return q * (1 + mp::pow(q, 2 * n - 2)); }, 0};
  DominatedSeries down{[&](std::int64_t m) { return term(-m); },
                       [&](std::int64_t m) { return mp::pow(q, 5) + mp::pow(q, 2 * m + 3); }, 1};
  return sum_dominated(up, ctx) + sum_dominated(down, ctx);
}

SeriesValue special33_rhs(const Real& q, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  const Real Q = q * q;
  auto p = [&](const Real& x) { return pinf(x, Q, ctx); };
  const Real q3 = Q * q;
  const Real q6 = q3 * q3;
  SeriesValue first = (p(q6) * p(-1 / q)) / (p(-Q * Q) * p(q)) *
                      phi21(1 / q3, -1 / Q, -1 / q, Q, q6, ctx);
  SeriesValue second = (p(q6) * p(-q3)) / (p(-Q * Q) * p(q3 * Q)) *
                       phi21(q, -1 / Q, -q3, Q, q6, ctx);
  return kMinusOne + first + second;
}

}  // namespace ramanujan

namespace {

using constraint::less;
using constraint::nonzero;
using constraint::not_pole;

Real A(const QPoint& p) { return p.at("a"); }
Real B(const QPoint& p) { return p.at("b"); }
Real C(const QPoint& p) { return p.at("c"); }
Real Z(const QPoint& p) { return p.at("z"); }
Real Q(const QPoint& p) { return p.q(); }
Real abs_of(const Real& x) { return mp::abs(x); }

Constraint nome_in_unit() {
  return less("0 < q < 1", [](const QPoint&) { return Real(0); },
              [](const QPoint& p) { return std::min(Q(p), 1 - Q(p)); });
}

// |b/a| < |z| < 1, plus nonzero a, b and the pole exclusions shared by every
// entry built on the 1psi1 summand.
std::vector<Constraint> annulus() {
  return {
      nome_in_unit(),
      nonzero("a != 0", A),
      nonzero("b != 0", B),
      less("|b/a| < |z|", [](const QPoint& p) { return abs_of(B(p) / A(p)); },
           [](const QPoint& p) { return abs_of(Z(p)); }),
      less("|z| < 1", [](const QPoint& p) { return abs_of(Z(p)); },
           [](const QPoint&) { return Real(1); }),
      not_pole("b != q^-m", B),
      not_pole("q/a != q^-m", [](const QPoint& p) { return Q(p) / A(p); }),
  };
}

std::vector<Constraint> with(std::vector<Constraint> base, std::vector<Constraint> extra) {
  for (auto& c : extra) base.push_back(std::move(c));
  return base;
}

// Exponents for the +-q^e sign-coverage pattern.
Real signed_power(Rng& rng, const Real& q) {
  static const std::array<std::pair<int, int>, 8> kExp{
      {{-1, 1}, {-1, 2}, {1, 2}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 3}}};
  const auto [num, den] = kExp[static_cast<std::size_t>(rng.uniform_int(0, kExp.size() - 1))];
  Real v = mp::pow(q, Real(num) / Real(den));
  return rng.coin() ? -v : v;
}

Real signed_uniform(Rng& rng, double lo, double hi) {
  Real v = rng.uniform_decimal(lo, hi);
  return rng.coin() ? -v : v;
}

// (a, b, z, q) with |b/a| < |z| < 1; a and b follow the +-q^e pattern about
// half of the time.
QPoint sample_annulus(Rng& rng) {
  const Real q = rng.uniform_decimal(0.05, 0.85);
  const bool pattern = rng.coin();
  Real a = pattern ? signed_power(rng, q) : signed_uniform(rng, 0.1, 2.5);
  Real b = pattern ? signed_power(rng, q) : signed_uniform(rng, 0.02, 2.0);
  const double ratio = static_cast<double>(abs_of(b / a));
  Real z = ratio + 0.05 <= 0.95 ? signed_uniform(rng, ratio + 0.05, 0.95) : Real(2);
  return QPoint({{"a", a}, {"b", b}, {"z", z}, {"q", q}});
}

QPoint sample_heine(Rng& rng) {
  const Real q = rng.uniform_decimal(0.05, 0.85);
  Real a = signed_uniform(rng, 0.05, 2.0);
  Real b = signed_uniform(rng, 0.1, 0.95);
  Real c = signed_uniform(rng, 0.0, static_cast<double>(abs_of(b)) - 0.05);
  Real z = signed_uniform(rng, 0.05, 0.95);
  return QPoint({{"a", a}, {"b", b}, {"c", c}, {"z", z}, {"q", q}});
}

std::vector<Constraint> heine_common() {
  return {
      nome_in_unit(),
      less("|z| < 1", [](const QPoint& p) { return abs_of(Z(p)); },
           [](const QPoint&) { return Real(1); }),
      nonzero("b != 0", B),
      nonzero("c != 0", C),
      not_pole("c != q^-m", C),
  };
}

Evaluator abzq(SeriesValue (*f)(const Real&, const Real&, const Real&, const Real&,
                                const PrecisionCtx&)) {
  return [f](const QPoint& p, const PrecisionCtx& ctx) { return f(A(p), B(p), Q(p), Z(p), ctx); };
}

Evaluator abczq(SeriesValue (*f)(const Real&, const Real&, const Real&, const Real&, const Real&,
                                 const PrecisionCtx&)) {
  return [f](const QPoint& p, const PrecisionCtx& ctx) {
    return f(A(p), B(p), C(p), Q(p), Z(p), ctx);
  };
}

}  // namespace

std::vector<IdentityEntry> register_builtin() {
  using namespace ramanujan;
  const std::vector<std::string> abzqNames{"a", "b", "z", "q"};
  const std::vector<std::string> heineNames{"a", "b", "c", "z", "q"};
  auto q_over_az = [](const QPoint& p) { return Q(p) / (A(p) * Z(p)); };
  auto az = [](const QPoint& p) { return A(p) * Z(p); };
  auto q_below_b = less("|q| < |b|", Q, [](const QPoint& p) { return abs_of(B(p)); });
  auto a_in_disc = less("|a| < 1", [](const QPoint& p) { return abs_of(A(p)); },
                        [](const QPoint&) { return Real(1); });

  std::vector<IdentityEntry> out;
  out.push_back({"eq-1.1", "Eq (1.1), Ramanujan's 1psi1 summation", abzqNames, Domain(annulus()),
                 abzq(bilateral), abzq(product_side), sample_annulus});

  out.push_back({"eq-2.1", "Eq (2.1), Heine's transformation (first form)", heineNames,
                 Domain(with(heine_common(),
                             {less("|b| < 1", [](const QPoint& p) { return abs_of(B(p)); },
                                   [](const QPoint&) { return Real(1); }),
                              not_pole("az != q^-m", az)})),
                 abczq(heine_series), abczq(heine_first), sample_heine});
  out.push_back({"eq-2.2", "Eq (2.2), Heine's transformation (second form)", heineNames,
                 Domain(with(heine_common(),
                             {less("|c/b| < 1", [](const QPoint& p) { return abs_of(C(p) / B(p)); },
                                   [](const QPoint&) { return Real(1); }),
                              not_pole("bz != q^-m", [](const QPoint& p) { return B(p) * Z(p); })})),
                 abczq(heine_series), abczq(heine_second), sample_heine});

  out.push_back({"eq-2.5", "Eq (2.5), Eq (2.2) at a=q, b=a, c=b", abzqNames,
                 Domain(with(annulus(), {not_pole("az != q^-m", az)})), abzq(nonnegative_half),
                 abzq(nonnegative_half_via_second), sample_annulus});
  out.push_back({"eq-2.6", "Eq (2.6), Eq (2.1) at a=q, b=q/b, c=q/a, z=b/az", abzqNames,
                 Domain(with(annulus(), {q_below_b})), abzq(reflected_half),
                 abzq(reflected_half_via_first), sample_annulus});
  out.push_back({"eq-2.8", "Eq (2.8), Eq (2.1) at a=q, b=a, c=b", abzqNames,
                 Domain(with(annulus(), {a_in_disc})), abzq(nonnegative_half),
                 abzq(nonnegative_half_via_first), sample_annulus});
  out.push_back({"eq-2.9", "Eq (2.9), Eq (2.2) at a=q, b=q/b, c=q/a, z=b/az", abzqNames,
                 Domain(with(annulus(), {not_pole("q/az != q^-m", q_over_az)})),
                 abzq(reflected_half), abzq(reflected_half_via_second), sample_annulus});

  out.push_back({"thm-2.1", "Theorem 2.1, Eq (2.3)", abzqNames,
                 Domain(with(annulus(), {q_below_b, not_pole("az != q^-m", az)})),
                 abzq(bilateral), abzq(theorem21_rhs), sample_annulus});
  out.push_back({"thm-2.2", "Theorem 2.2, Eq (2.7)", abzqNames,
                 Domain(with(annulus(), {a_in_disc, not_pole("q/az != q^-m", q_over_az)})),
                 abzq(bilateral), abzq(theorem22_rhs), sample_annulus});
  out.push_back({"thm-2.3", "Theorem 2.3, Eq (2.10)", abzqNames,
                 Domain(with(annulus(), {not_pole("az != q^-m", az),
                                         not_pole("q/az != q^-m", q_over_az)})),
                 abzq(bilateral), abzq(theorem23_rhs), sample_annulus});

  out.push_back(
      {"eq-3.1", "Eq (3.1), Eq (2.3) at a=-1/q, b=-1", {"z", "q"},
       Domain({nome_in_unit(),
               less("|q| < |z|", Q, [](const QPoint& p) { return abs_of(Z(p)); }),
               less("|z| < 1", [](const QPoint& p) { return abs_of(Z(p)); },
                    [](const QPoint&) { return Real(1); })}),
       [](const QPoint& p, const PrecisionCtx& ctx) { return special31_lhs(Q(p), Z(p), ctx); },
       [](const QPoint& p, const PrecisionCtx& ctx) { return special31_rhs(Q(p), Z(p), ctx); },
       [](Rng& rng) {
         Real q = rng.uniform_decimal(0.05, 0.6);
         Real z = rng.uniform_decimal(static_cast<double>(q) + 0.05, 0.95);
         return QPoint({{"z", z}, {"q", q}});
       }});
  out.push_back(
      {"eq-3.2", "Eq (3.2), Eq (2.7) at b=-q^3, a=-q, z=q", {"q"}, Domain({nome_in_unit()}),
       [](const QPoint& p, const PrecisionCtx& ctx) { return special32_lhs(Q(p), ctx); },
       [](const QPoint& p, const PrecisionCtx& ctx) { return special32_rhs(Q(p), ctx); },
       [](Rng& rng) { return QPoint({{"q", rng.uniform_decimal(0.05, 0.6)}}); }});
  out.push_back(
      {"eq-3.3", "Eq (3.3), Eq (2.10) at b=-q^2, a=-1/q, z=q^(1/2), then q -> q^2", {"q"},
       Domain({nome_in_unit()}),
       [](const QPoint& p, const PrecisionCtx& ctx) { return special33_lhs(Q(p), ctx); },
       [](const QPoint& p, const PrecisionCtx& ctx) { return special33_rhs(Q(p), ctx); },
       [](Rng& rng) { return QPoint({{"q", rng.uniform_decimal(0.05, 0.8)}}); }});
  return out;
}

}  // namespace qseries
