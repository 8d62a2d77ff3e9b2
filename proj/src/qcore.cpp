#include "qseries/qcore.hpp"

#include <algorithm>

namespace qseries {

namespace mp = boost::multiprecision;

namespace {

void require_nome(const Real& q) {
  if (!(q > 0 && q < 1))
    throw Error(ErrorKind::Domain, "nome q must satisfy 0 < q < 1, got " + to_decimal(q, 17));
}

SeriesValue finish(const Real& value, const Real& tail, const Real& rounding,
                   std::int64_t terms, bool rigorous, const PrecisionCtx& ctx) {
  SeriesValue out;
  out.value = value;
  out.errEstimate = tail + rounding;
  out.termsUsed = terms;
  out.certified = rigorous && out.errEstimate <= Real(ctx.tailRelTol) * mp::abs(value);
  return out;
}

}  // namespace

SeriesValue operator+(const SeriesValue& x, const SeriesValue& y) {
  return {x.value + y.value, x.errEstimate + y.errEstimate, x.termsUsed + y.termsUsed,
          x.certified && y.certified};
}

SeriesValue operator*(const SeriesValue& x, const SeriesValue& y) {
  Real err = mp::abs(x.value) * y.errEstimate + mp::abs(y.value) * x.errEstimate +
             x.errEstimate * y.errEstimate;
  return {x.value * y.value, err, x.termsUsed + y.termsUsed, x.certified && y.certified};
}

SeriesValue operator/(const SeriesValue& x, const SeriesValue& y) {
  if (y.value == 0) throw Error(ErrorKind::Pole, "division by a vanishing series value");
  Real ay = mp::abs(y.value);
  Real margin = ay - y.errEstimate;
  Real err;
  bool ok = x.certified && y.certified;
  if (margin > 0) {
    err = (mp::abs(x.value) * y.errEstimate + ay * x.errEstimate) / (ay * margin);
  } else {
    err = mp::abs(x.value / y.value);
    ok = false;
  }
  return {x.value / y.value, err, x.termsUsed + y.termsUsed, ok};
}

SeriesValue operator*(const Real& c, const SeriesValue& x) {
  return {c * x.value, mp::abs(c) * x.errEstimate, x.termsUsed, x.certified};
}

SeriesValue exact(const Real& v) { return {v, Real(0), 0, true}; }

const Real& QPoint::at(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw Error(ErrorKind::Domain, "point has no parameter '" + name + "'");
  return it->second;
}

void QPoint::validate() const {
  for (const auto& [name, v] : params_) {
    if (!mp::isfinite(v)) throw Error(ErrorKind::Domain, "parameter '" + name + "' is not finite");
  }
  if (has("q")) require_nome(q());
}

Real qpow(const Real& q, const Real& e, const PrecisionCtx& ctx) {
  require_nome(q);
  if (!mp::isfinite(e)) throw Error(ErrorKind::Domain, "exponent must be finite");
  PrecisionScope scope(ctx);
  return mp::pow(q, e);
}

SeriesValue pochhammer_inf(const Real& a, const Real& q, const PrecisionCtx& ctx) {
  ctx.validate();
  require_nome(q);
  PrecisionScope scope(ctx);
  const Real tol(ctx.tailRelTol);
  const Real absA = mp::abs(a);
  Real product = 1;
  Real qk = 1;
  for (std::int64_t k = 0; k < ctx.maxTerms; ++k) {
    Real factor = 1 - a * qk;
    if (factor == 0) return {Real(0), Real(0), k + 1, true};
    product *= factor;
    qk *= q;
    // Remaining factors k+1, k+2, ...: |log tail| <= |a| q^{k+1} / ((1-q)(1-|a| q^{k+1})).
    Real x = absA * qk;
    if (x < Real(0.5)) {
      Real logBound = x / ((1 - q) * (1 - x));
      Real rel = mp::expm1(logBound);
      if (rel <= tol) {
        Real rounding = 2 * epsilon() * Real(k + 2) * mp::abs(product);
        return finish(product, mp::abs(product) * rel, rounding, k + 1, true, ctx);
      }
    }
  }
  throw Error(ErrorKind::CapExceeded,
              "(a;q)_inf needs more than maxTerms=" + std::to_string(ctx.maxTerms) + " factors");
}

SeriesValue pochhammer_n(const Real& a, const Real& q, std::int64_t n, const PrecisionCtx& ctx) {
  ctx.validate();
  require_nome(q);
  PrecisionScope scope(ctx);
  const std::int64_t count = n >= 0 ? n : -n;
  if (count > ctx.maxTerms)
    throw Error(ErrorKind::CapExceeded, "|n| exceeds maxTerms in (a;q)_n");
  Real product = 1;
  Real qk = 1;
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      product *= 1 - a * qk;
      qk *= q;
    }
  } else {
    for (std::int64_t k = 1; k <= count; ++k) {
      qk *= q;
      Real factor = 1 - a / qk;
      if (factor == 0)
        throw Error(ErrorKind::Pole, "(a;q)_n has a pole: factor 1 - a q^-" + std::to_string(k) +
                                         " vanishes");
      product *= factor;
    }
    product = 1 / product;
  }
  Real rounding = 2 * epsilon() * Real(count + 1) * mp::abs(product);
  return finish(product, Real(0), rounding, count, true, ctx);
}

namespace detail {

bool terminates(std::span<const Real> upper, const Real& q) {
  for (const Real& u : upper) {
    Real qk = 1;
    // u q^k == 1 needs |u q^k| >= 1, which bounds k.
    while (mp::abs(u * qk) >= 1) {
      if (1 - u * qk == 0) return true;
      qk *= q;
    }
  }
  return false;
}

SeriesValue hyper_sum(std::span<const Real> upper, std::span<const Real> lower, const Real& q,
                      const Real& z, std::int64_t first, const PrecisionCtx& ctx) {
  ctx.validate();
  require_nome(q);
  PrecisionScope scope(ctx);
  const Real tol(ctx.tailRelTol);
  const Real absZ = mp::abs(z);
  const auto factors = static_cast<std::int64_t>(upper.size() + lower.size() + 2);

  Real term = 1;
  Real sum = 0;
  Real weighted = 0;  // sum (n+1)|t_n|, drives the rounding allowance
  Real maxAbsSum = 0;
  Real qn = 1;
  std::int64_t summed = 0;
  Real tail = 0;
  bool done = false;

  for (std::int64_t n = 0; !done; ++n) {
    if (n >= ctx.maxTerms)
      throw Error(ErrorKind::CapExceeded,
                  "series needs more than maxTerms=" + std::to_string(ctx.maxTerms) + " terms");
    if (n >= first) {
      sum += term;
      weighted += Real(n + 1) * mp::abs(term);
      maxAbsSum = std::max(maxAbsSum, mp::abs(sum));
      ++summed;
    }

    Real num = 1;
    bool vanishing = false;
    for (const Real& u : upper) {
      Real f = 1 - u * qn;
      if (f == 0) vanishing = true;
      num *= f;
    }
    if (vanishing || z == 0) {
      // Every later term is exactly zero.
      tail = 0;
      break;
    }
    Real den = 1;
    for (const Real& l : lower) {
      Real f = 1 - l * qn;
      if (f == 0)
        throw Error(ErrorKind::Pole, "denominator factor 1 - b q^" + std::to_string(n) +
                                         " vanishes before the series terminates");
      den *= f;
    }

    Real rho = absZ;
    bool bounded = true;
    for (const Real& u : upper) rho *= 1 + mp::abs(u) * qn;
    for (const Real& l : lower) {
      Real d = 1 - mp::abs(l) * qn;
      if (d <= 0) {
        bounded = false;
        break;
      }
      rho /= d;
    }
    if (n >= first && bounded && rho < 1) {
      tail = mp::abs(term) * rho / (1 - rho);
      if (tail <= tol * mp::abs(sum)) done = true;
    }
    term = term * z * num / den;
    qn *= q;
  }

  Real rounding = epsilon() * (Real(factors) * weighted + Real(summed) * maxAbsSum);
  return finish(sum, tail, rounding, summed, true, ctx);
}

}  // namespace detail

SeriesValue phi(std::span<const Real> upper, std::span<const Real> lower, const Real& q,
                const Real& z, const PrecisionCtx& ctx) {
  require_nome(q);
  if (!(mp::abs(z) < 1))
    throw Error(ErrorKind::Divergence, "phi requires |z| < 1, got z = " + to_decimal(z, 17));
  std::vector<Real> den(lower.begin(), lower.end());
  den.push_back(q);
  return detail::hyper_sum(upper, den, q, z, 0, ctx);
}

SeriesValue psi_bilateral(std::span<const Real> upper, std::span<const Real> lower,
                          const Real& q, const Real& z, const PrecisionCtx& ctx) {
  require_nome(q);
  if (upper.size() != lower.size())
    throw Error(ErrorKind::Domain, "bilateral series needs as many upper as lower parameters");
  if (z == 0) throw Error(ErrorKind::Domain, "bilateral series needs z != 0");
  PrecisionScope scope(ctx);

  Real ratio = 1;  // prod b / prod a
  std::vector<Real> negUpper, negLower;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] == 0 || lower[i] == 0)
      throw Error(ErrorKind::Domain, "bilateral parameters must be nonzero");
    ratio *= lower[i] / upper[i];
    negUpper.push_back(q / lower[i]);
    negLower.push_back(q / upper[i]);
  }

  if (!(mp::abs(z) < 1) && !detail::terminates(upper, q))
    throw Error(ErrorKind::Divergence, "bilateral series requires |z| < 1");
  Real w = ratio / z;
  if (!(mp::abs(w) < 1) && !detail::terminates(negUpper, q))
    throw Error(ErrorKind::Divergence,
                "bilateral series requires |b_1...b_r / (a_1...a_r)| < |z|");

  SeriesValue positive = detail::hyper_sum(upper, lower, q, z, 0, ctx);
  SeriesValue negative = detail::hyper_sum(negUpper, negLower, q, w, 1, ctx);
  SeriesValue total = positive + negative;
  total.certified = total.certified &&
                    total.errEstimate <= Real(ctx.tailRelTol) * mp::abs(total.value);
  return total;
}

SeriesValue sum_dominated(const DominatedSeries& series, const PrecisionCtx& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  const Real tol(ctx.tailRelTol);
  Real sum = 0;
  Real weighted = 0;
  Real maxAbsSum = 0;
  for (std::int64_t k = 0; k < ctx.maxTerms; ++k) {
    const std::int64_t n = series.first + k;
    Real t = series.term(n);
    sum += t;
    weighted += mp::abs(t);
    maxAbsSum = std::max(maxAbsSum, mp::abs(sum));
    Real rho = series.ratioBound(n);
    if (rho >= 0 && rho < 1) {
      Real tail = mp::abs(t) * rho / (1 - rho);
      if (tail <= tol * mp::abs(sum)) {
        Real rounding = epsilon() * (Real(8) * weighted + Real(k + 1) * maxAbsSum);
        return finish(sum, tail, rounding, k + 1, true, ctx);
      }
    }
  }
  throw Error(ErrorKind::CapExceeded,
              "series needs more than maxTerms=" + std::to_string(ctx.maxTerms) + " terms");
}

}  // namespace qseries
