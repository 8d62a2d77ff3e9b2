#include "qseries/identity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qseries/eta.hpp"
#include "qseries/identities.hpp"
#include "qseries/qgamma.hpp"

namespace qseries {

namespace mp = boost::multiprecision;

std::optional<std::string> Domain::violation(const QPoint& p, double margin) const {
  const Real m(margin);
  for (const auto& c : constraints_) {
    Real s = c.slack(p);
    if (!(s > 0) || (margin > 0 && s < m)) return c.text;
  }
  return std::nullopt;
}

void Registry::add(IdentityEntry entry) {
  if (find(entry.id)) throw std::invalid_argument("duplicate identity id: " + entry.id);
  entries_.push_back(std::move(entry));
}

void Registry::add_all(std::vector<IdentityEntry> entries) {
  for (auto& e : entries) add(std::move(e));
}

const IdentityEntry* Registry::find(const std::string& id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const IdentityEntry& e) { return e.id == id; });
  return it == entries_.end() ? nullptr : &*it;
}

const IdentityEntry& Registry::at(const std::string& id) const {
  if (const auto* e = find(id)) return *e;
  throw Error(ErrorKind::UnknownId, "unknown identity id '" + id + "'");
}

const Registry& full_registry() {
  static const Registry registry = [] {
    Registry r;
    r.add_all(register_builtin());
    r.add_all(register_eta_identities());
    r.add_all(register_qgamma_identities());
    r.add_all(classical_limit_identities());
    return r;
  }();
  return registry;
}

double default_tolerance(int digits) { return std::pow(10.0, -(digits - 15)); }

namespace {

SeriesValue run_side(const Evaluator& side, const char* name, const QPoint& p,
                     const PrecisionCtx& ctx) {
  try {
    return side(p, ctx);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

IdentityResult eval_identity(const Registry& registry, const std::string& id, const QPoint& input,
                             const Real& tol, const PrecisionCtx& ctx) {
  const IdentityEntry& entry = registry.at(id);
  ctx.validate();

  auto attempt = [&](const PrecisionCtx& c) {
    PrecisionScope scope(c);
    // Values made at a lower precision would otherwise limit the arithmetic.
    QPoint point;
    for (const auto& [name, value] : input.params()) point.set(name, Real(value, c.working_digits()));
    point.validate();
    for (const auto& name : entry.params) {
      if (!point.has(name))
        throw Error(ErrorKind::DomainViolation, id + ": missing parameter '" + name + "'");
    }
    if (auto v = entry.domain.violation(point))
      throw Error(ErrorKind::DomainViolation, id + ": constraint " + *v + " violated");

    SeriesValue lhs = run_side(entry.lhs, "lhs", point, c);
    SeriesValue rhs = run_side(entry.rhs, "rhs", point, c);

    IdentityResult r;
    r.point = point;
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.absErr = mp::abs(lhs.value - rhs.value);
    Real floor = mp::pow(Real(10), -c.digits);
    r.relErr = r.absErr / std::max({mp::abs(lhs.value), mp::abs(rhs.value), floor});
    r.pass = r.relErr <= std::max(tol, Real(entry.minTolerance));
    r.termsUsed = lhs.termsUsed + rhs.termsUsed;
    return r;
  };

  IdentityResult r = attempt(ctx);
  if (r.pass) return r;
  // A sum that cancels far below its terms loses digits to rounding and to
  // a truncation rule scaled to the partial sums; one retry with more guard
  // digits and a tighter tail separates that from a real mismatch.
  PrecisionCtx wider = ctx;
  wider.guardDigits += kRetryGuardDigits;
  wider.tailRelTol *= std::pow(10.0, -kRetryGuardDigits);
  return attempt(wider);
}

IdentityResult eval_identity(const std::string& id, const QPoint& point, const Real& tol,
                             const PrecisionCtx& ctx) {
  return eval_identity(full_registry(), id, point, tol, ctx);
}

std::vector<QPoint> sample_domain(const Registry& registry, const std::string& id, int count,
                                  std::uint64_t seed) {
  const IdentityEntry& entry = registry.at(id);
  if (count < 1) throw Error(ErrorKind::Config, "sample count must be >= 1");
  Rng rng(seed ^ fnv1a(id));
  std::vector<QPoint> points;
  int draws = 0;
  while (static_cast<int>(points.size()) < count) {
    if (draws++ >= kMaxSamplingDraws)
      throw Error(ErrorKind::SamplingFailure,
                  id + ": no in-domain point found in " + std::to_string(kMaxSamplingDraws) +
                      " draws");
    QPoint p = entry.sampler(rng);
    if (!entry.domain.violation(p, kSamplingMargin)) {
      points.push_back(std::move(p));
      draws = 0;
    }
  }
  return points;
}

std::vector<QPoint> sample_domain(const std::string& id, int count, std::uint64_t seed) {
  return sample_domain(full_registry(), id, count, seed);
}

namespace constraint {

Constraint less(std::string text, std::function<Real(const QPoint&)> lo,
                std::function<Real(const QPoint&)> hi) {
  return {std::move(text), [lo = std::move(lo), hi = std::move(hi)](const QPoint& p) {
            return hi(p) - lo(p);
          }};
}

Constraint not_pole(std::string text, std::function<Real(const QPoint&)> v) {
  return {std::move(text), [v = std::move(v)](const QPoint& p) {
            const Real x = v(p);
            const Real& q = p.q();
            Real qk = 1;
            Real best = 1;
            // Once |x| q^k < 1/2 every later factor stays above 1/2.
            for (int k = 0; k < 100000; ++k) {
              Real t = x * qk;
              best = std::min(best, mp::abs(1 - t));
              if (mp::abs(t) < Real(0.5)) break;
              qk *= q;
            }
            return best;
          }};
}

Constraint nonzero(std::string text, std::function<Real(const QPoint&)> v) {
  return {std::move(text), [v = std::move(v)](const QPoint& p) { return mp::abs(v(p)); }};
}

}  // namespace constraint

}  // namespace qseries
