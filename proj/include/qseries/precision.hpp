#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

namespace qseries {

// Variable-precision MPFR real. New values take the process-wide default
// precision, which PrecisionScope manages.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

enum class ErrorKind {
  Domain,
  Pole,
  Divergence,
  CapExceeded,
  NonConvergence,
  InsufficientTerms,
  Breakdown,
  UnknownId,
  DomainViolation,
  SamplingFailure,
  Syntax,
  Config,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Working precision and truncation policy shared by every evaluator.
///
/// `digits` is the number of decimal digits the caller wants to trust;
/// arithmetic runs at `digits + guardDigits`.
struct PrecisionCtx {
  int digits = 40;
  std::int64_t maxTerms = 2'000'000;
  double tailRelTol = 1e-42;
  int guardDigits = 10;

  /// Context whose truncation target sits two digits below `digits`.
  static PrecisionCtx for_digits(int digits, int guard = 10);

  int working_digits() const noexcept { return digits + guardDigits; }
  /// Throws Error{Config} when an invariant is violated.
  void validate() const;
};

/// Sets the default MPFR precision for the lifetime of the object.
///
/// The default precision is process-wide, so scopes must not be opened
/// concurrently from different threads with different precisions.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits10);
  explicit PrecisionScope(const PrecisionCtx& ctx)
      : PrecisionScope(ctx.working_digits()) {}
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Unit roundoff at the current default precision.
Real epsilon();

/// Scientific notation with `digits` significant digits. Deterministic.
std::string to_decimal(const Real& x, int digits);
/// Parses a decimal literal at the current default precision.
Real parse_decimal(std::string_view text);

Real pi();

}  // namespace qseries
