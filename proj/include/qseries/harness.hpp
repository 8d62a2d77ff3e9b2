#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/identity.hpp"
#include "qseries/param_expr.hpp"

namespace qseries {

inline constexpr const char* kToolVersion = "qseries 0.1.0";

enum class ReportFormat { Json, Text };

struct RunConfig {
  std::vector<std::string> identities{"all"};
  int pointsPerIdentity = 10;
  std::uint64_t seed = 1;
  int digits = 40;
  double tolerance = 1e-25;
  std::optional<std::vector<QPoint>> explicitPoints;
  ReportFormat reportFormat = ReportFormat::Json;

  /// Throws Error{Config}.
  void validate() const;
};

struct PointOutcome {
  QPoint point;
  std::optional<IdentityResult> result;  // unset when evaluation failed
  std::string error;
  bool pass() const { return result && result->pass; }
};

struct Aggregate {
  int total = 0;
  int passCount = 0;
  bool pass = false;
  double tolerance = 0;
  std::optional<Real> worstRelErr;
  /// lhs/rhs over the evaluated points, and its relative standard deviation.
  std::optional<Real> ratioMean;
  std::optional<Real> ratioRelStddev;
  std::optional<Real> suspectedConstantOffset;
};

struct IdentityReport {
  std::string id;
  std::string paperRef;
  std::vector<PointOutcome> points;
  Aggregate aggregate;
};

struct VerificationReport {
  std::string toolVersion = kToolVersion;
  RunConfig config;
  std::vector<IdentityReport> results;

  bool all_pass() const;
};

/// Ids named by the config, in registry order for "all". Throws Error{UnknownId}
/// before anything is evaluated.
std::vector<std::string> resolve_ids(const Registry& registry, const RunConfig& config);

VerificationReport run(const RunConfig& config, const Registry& registry);
VerificationReport run(const RunConfig& config);

/// Fills the aggregate fields from the point outcomes.
Aggregate summarize(const std::vector<PointOutcome>& points, double tolerance);

/// 0 when every identity passes, 1 otherwise.
int exit_code(const VerificationReport& report);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Default digits: QSERIES_DIGITS if set and valid, else 40.
int default_digits();

/// Builds a point from a literal q (optional) and name=ParamExpr assignments.
/// Throws SyntaxError / Error{Config}.
QPoint make_point(const std::optional<std::string>& q,
                  const std::vector<std::pair<std::string, std::string>>& assignments, int digits);

/// Reads a JSON file mirroring RunConfig. Explicit points are objects mapping
/// names to ParamExpr strings; "q" must be a literal. Throws Error{Config}.
RunConfig load_config(const std::string& path);

}  // namespace qseries
