#include <cmath>
#include <map>
#include <mutex>

#include "qseries/accelerate.hpp"
#include "qseries/qgamma.hpp"

namespace qseries {

namespace mp = boost::multiprecision;

namespace {

struct SpougeTable {
  int a = 0;
  int digits = 0;
  std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for k = 1 .. a-1
};

// Relative error of Spouge's sum is below a^{-1/2} (2 pi)^{-(a+1/2)}; the
// coefficients alternate and grow like (2 pi)^a, so they need about twice the
// target digits.
SpougeTable make_table(int digits) {
  SpougeTable t;
  t.a = static_cast<int>(std::ceil((digits + 5) * std::log(10.0) / std::log(2 * M_PI)));
  t.digits = 2 * digits + 15;
  PrecisionScope scope(t.digits);
  t.c.resize(t.a);
  t.c[0] = mp::sqrt(2 * pi());
  Real factorial = 1;  // (k-1)!
  for (int k = 1; k < t.a; ++k) {
    if (k > 1) factorial *= k - 1;
    Real ak = Real(t.a - k);
    Real v = mp::pow(ak, Real(k) - Real(1) / 2) * mp::exp(ak) / factorial;
    t.c[k] = (k % 2 == 1) ? v : Real(-v);
  }
  return t;
}

const SpougeTable& table_for(int digits) {
  static std::mutex mutex;
  static std::map<int, SpougeTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(digits);
  if (it == cache.end()) it = cache.emplace(digits, make_table(digits)).first;
  return it->second;
}

// Gamma(x) for x >= 1.
Real spouge(const Real& x, int digits) {
  const SpougeTable& t = table_for(digits);
  Real result;
  {
    PrecisionScope scope(t.digits);
    Real z = Real(x, t.digits) - 1;
    Real sum = t.c[0];
    for (int k = 1; k < t.a; ++k) sum += t.c[k] / (z + k);
    Real base = z + t.a;
    result = mp::pow(base, z + Real(1) / 2) * mp::exp(-base) * sum;
  }
  return Real(result, digits);
}

SeriesValue oracle(const Real& v) {
  SeriesValue s;
  s.value = v;
  s.errEstimate = mp::abs(v) * epsilon() * 16;
  s.certified = true;
  return s;
}

}  // namespace

Real classical_gamma(const Real& x, const PrecisionCtx& ctx) {
  ctx.validate();
  const int digits = ctx.working_digits();
  PrecisionScope scope(digits);
  if (x <= 0 && x == mp::floor(x))
    throw Error(ErrorKind::Pole, "Gamma has a pole at " + to_decimal(x, 17));
  if (x < 0) {
    Real s = mp::sin(pi() * x);
    return pi() / (s * spouge(1 - x, digits));
  }
  if (x < 1) return spouge(x + 1, digits) / x;
  return spouge(x, digits);
}

namespace qgamma_sides {

Real classical_quotient(const Real& a, const Real& b, const Real& z, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return classical_gamma(x, ctx); };
  return G(b) * G(1 - a) * G(z) * G(b - a - z) / (G(b - a) * G(a + z) * G(1 - a - z));
}

Real beta(const Real& x, const Real& y, const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  return classical_gamma(x, ctx) * classical_gamma(y, ctx) / classical_gamma(x + y, ctx);
}

std::vector<Real> rising_over_shifted_terms(const Real& c, const Real& y, std::size_t count) {
  std::vector<Real> out;
  out.reserve(count);
  Real ratio = 1;  // (c)_n / n!
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(ratio / (y + n));
    ratio *= (c + n) / (n + 1);
  }
  return out;
}

std::vector<Real> beta_product_terms(const Real& x, const Real& y, std::size_t count) {
  std::vector<Real> out;
  out.reserve(count);
  Real ratio = 1;  // prod_{k=1}^n (k - x) / n!
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(ratio / (y + n));
    ratio *= (Real(n + 1) - x) / (n + 1);
  }
  return out;
}

std::vector<Real> lemniscate_terms(std::size_t count) {
  std::vector<Real> out;
  out.reserve(count);
  Real ratio = 1;  // (1/2)_n / n!
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(ratio / (4 * n + 1));
    ratio *= (Real(n) + Real(1) / 2) / (n + 1);
  }
  return out;
}

Real lemniscate_constant(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  Real g = classical_gamma(Real(3) / 4, ctx);
  return mp::pow(pi(), Real(3) / 2) / (2 * mp::sqrt(Real(2)) * g * g);
}

SeriesValue eq59_substituted_series(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto terms = rising_over_shifted_terms(Real(3) / 4, Real(1) / 2, kClassicalTerms);
  return accelerate(terms);
}

Real eq59_substituted_closed(const PrecisionCtx& ctx) {
  PrecisionScope scope(ctx);
  auto G = [&](const Real& x) { return classical_gamma(x, ctx); };
  return G(Real(1) / 4) * G(Real(1) / 2) / G(Real(3) / 4);
}

}  // namespace qgamma_sides

namespace {

using constraint::less;

Real zero(const QPoint&) { return Real(0); }
Real one(const QPoint&) { return Real(1); }
std::function<Real(const QPoint&)> param(const char* name) {
  return [name](const QPoint& p) { return p.at(name); };
}

SeriesValue levin(const std::vector<Real>& terms) {
  SeriesValue s = accelerate(terms);
  s.termsUsed = static_cast<std::int64_t>(terms.size());
  return s;
}

}  // namespace

std::vector<IdentityEntry> classical_limit_identities() {
  using namespace qgamma_sides;
  constexpr double kTol = 1e-10;
  const auto a = param("a");
  const auto b = param("b");
  const auto z = param("z");
  const auto x = param("x");
  const auto y = param("y");

  std::vector<IdentityEntry> out;

  out.push_back({"eq-5.5", "Eq (5.5), corollary of Theorem 5.1", {"b", "z"},
                 Domain({less("0 < z", zero, z), less("z < b", z, b), less("b < 1", b, one)}),
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real& b = p.at("b");
                   const Real& z = p.at("z");
                   auto G = [&](const Real& v) { return classical_gamma(v, ctx); };
                   return oracle(G(1 - b) * G(b + 1 - z) / G(1 - z));
                 },
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real& b = p.at("b");
                   const Real y = b - p.at("z");
                   auto terms = rising_over_shifted_terms(b, y, kClassicalTerms);
                   for (auto& t : terms) t *= y;
                   return levin(terms);
                 },
                 [](Rng& rng) {
                   Real b = rng.uniform_decimal(0.15, 0.95);
                   Real z = rng.uniform_decimal(0.05, static_cast<double>(b) - 0.05);
                   return QPoint({{"b", b}, {"z", z}});
                 },
                 kTol});

  out.push_back({"eq-5.6", "Eq (5.6), beta function series", {"x", "y"},
                 Domain({less("0 < x", zero, x), less("x < 1", x, one), less("0 < y", zero, y),
                         less("y < 1", y, one)}),
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   return oracle(beta(p.at("x"), p.at("y"), ctx));
                 },
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   return levin(beta_product_terms(p.at("x"), p.at("y"), kClassicalTerms));
                 },
                 [](Rng& rng) {
                   return QPoint({{"x", rng.uniform_decimal(0.05, 0.95)},
                                  {"y", rng.uniform_decimal(0.05, 0.95)}});
                 },
                 kTol});

  auto wedgeWith = [](std::vector<Constraint> extra) {
    auto c = detail::wedge_constraints();
    for (auto& e : extra) c.push_back(std::move(e));
    return Domain(std::move(c));
  };

  out.push_back({"eq-5.7", "Theorem 5.2, Eq (5.7)", {"a", "b", "z"},
                 wedgeWith({less("a > 0", zero, a)}),
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real& a = p.at("a");
                   const Real& b = p.at("b");
                   const Real& z = p.at("z");
                   auto G = [&](const Real& v) { return classical_gamma(v, ctx); };
                   return oracle(G(a) * G(z) * G(1 - a) * G(b - a - z) /
                                 (G(a + z) * G(b - a) * G(1 - a - z)));
                 },
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real c = p.at("b") - p.at("a");
                   return levin(rising_over_shifted_terms(c, p.at("z"), kClassicalTerms));
                 },
                 detail::sample_wedge_point, kTol});

  out.push_back({"eq-5.9", "Eq (5.9), lemniscate-type constant", {}, Domain(),
                 [](const QPoint&, const PrecisionCtx& ctx) {
                   return oracle(lemniscate_constant(ctx));
                 },
                 [](const QPoint&, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   return levin(lemniscate_terms(kClassicalTerms));
                 },
                 [](Rng&) { return QPoint(); }, kTol});

  out.push_back({"eq-5.12", "Eq (5.12), corollary of Theorem 5.3", {"a", "b", "z"},
                 wedgeWith({less("a > 0", zero, a), less("b < 1", b, one)}),
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real& a = p.at("a");
                   const Real& b = p.at("b");
                   const Real& z = p.at("z");
                   auto G = [&](const Real& v) { return classical_gamma(v, ctx); };
                   return oracle(G(b) * G(1 - a) * G(z) * G(b - a - z) /
                                 (G(a + z) * G(1 - a - z)));
                 },
                 [](const QPoint& p, const PrecisionCtx& ctx) {
                   PrecisionScope scope(ctx);
                   const Real& a = p.at("a");
                   const Real& b = p.at("b");
                   const Real& z = p.at("z");
                   auto G = [&](const Real& v) { return classical_gamma(v, ctx); };
                   Real bracket = G(1 - a) * G(b - a - z) / (G(1 - z) * G(1 - b)) +
                                  G(b) * G(z) / (G(a) * G(a + 1 + z - b));
                   return oracle(bracket * beta(b - a, a - b + 1, ctx));
                 },
                 detail::sample_wedge_point, kTol});
  return out;
}

}  // namespace qseries
