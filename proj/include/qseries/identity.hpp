#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/qcore.hpp"
#include "qseries/rng.hpp"

namespace qseries {

/// One strict inequality of an identity's domain, expressed as a slack
/// function: the constraint holds when slack(p) > 0. Sampling demands
/// slack(p) >= the sampling margin.
struct Constraint {
  std::string text;
  std::function<Real(const QPoint&)> slack;
};

class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<Constraint> constraints) : constraints_(std::move(constraints)) {}

  /// Text of the first violated constraint, if any. With margin > 0 every
  /// slack must also reach the margin.
  std::optional<std::string> violation(const QPoint& p, double margin = 0.0) const;
  bool contains(const QPoint& p) const { return !violation(p); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::vector<Constraint> constraints_;
};

using Evaluator = std::function<SeriesValue(const QPoint&, const PrecisionCtx&)>;
using Sampler = std::function<QPoint(Rng&)>;

struct IdentityEntry {
  std::string id;
  std::string paperRef;
  std::vector<std::string> params;
  Domain domain;
  Evaluator lhs;
  Evaluator rhs;
  Sampler sampler;
  /// Accuracy floor for identities whose sides are acceleration-limited.
  double minTolerance = 0.0;
};

struct IdentityResult {
  QPoint point;
  Real lhs;
  Real rhs;
  Real absErr;
  Real relErr;
  bool pass = false;
  std::int64_t termsUsed = 0;
};

class Registry {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(IdentityEntry entry);
  void add_all(std::vector<IdentityEntry> entries);
  const IdentityEntry* find(const std::string& id) const;
  /// Throws Error{UnknownId}.
  const IdentityEntry& at(const std::string& id) const;
  const std::vector<IdentityEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<IdentityEntry> entries_;
};

/// Every built-in identity.
const Registry& full_registry();

/// Verification tolerance used when a caller does not pick one.
double default_tolerance(int digits);

/// Extra guard digits, and tail-tolerance decades, for the single retry of a
/// failing evaluation.
inline constexpr int kRetryGuardDigits = 40;

/// Evaluates both sides at `ctx`; a failing point is evaluated once more with
/// the wider context and that result is returned.
IdentityResult eval_identity(const Registry& registry, const std::string& id,
                             const QPoint& point, const Real& tol, const PrecisionCtx& ctx);
IdentityResult eval_identity(const std::string& id, const QPoint& point, const Real& tol,
                             const PrecisionCtx& ctx);

inline constexpr double kSamplingMargin = 0.05;
inline constexpr int kMaxSamplingDraws = 10'000;

/// Deterministic in-domain points: each identity draws from its own stream
/// derived from (seed, id).
std::vector<QPoint> sample_domain(const Registry& registry, const std::string& id,
                                  int count, std::uint64_t seed);
std::vector<QPoint> sample_domain(const std::string& id, int count, std::uint64_t seed);

// Constraint builders shared by the identity modules.
namespace constraint {

/// lo(p) < hi(p).
Constraint less(std::string text, std::function<Real(const QPoint&)> lo,
                std::function<Real(const QPoint&)> hi);
/// v(p) != q^{-m} for every m >= 0, i.e. (v;q)_inf and (v;q)_n do not vanish.
/// The slack is min_k |1 - v q^k|.
Constraint not_pole(std::string text, std::function<Real(const QPoint&)> v);
Constraint nonzero(std::string text, std::function<Real(const QPoint&)> v);

}  // namespace constraint

}  // namespace qseries
