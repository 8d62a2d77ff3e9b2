#include "qseries/precision.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ios>

namespace qseries {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::InsufficientTerms: return "insufficient-terms";
    case ErrorKind::Breakdown: return "numerical-breakdown";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::DomainViolation: return "domain-violation";
    case ErrorKind::SamplingFailure: return "sampling-failure";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

PrecisionCtx PrecisionCtx::for_digits(int digits, int guard) {
  PrecisionCtx ctx;
  ctx.digits = digits;
  ctx.guardDigits = guard;
  ctx.tailRelTol = std::pow(10.0, -(digits + 2));
  return ctx;
}

void PrecisionCtx::validate() const {
  if (digits < 10) throw Error(ErrorKind::Config, "digits must be >= 10");
  if (maxTerms < 1) throw Error(ErrorKind::Config, "maxTerms must be >= 1");
  if (!(tailRelTol > 0.0 && tailRelTol < 1.0))
    throw Error(ErrorKind::Config, "tailRelTol must lie in (0, 1)");
  if (guardDigits < 0) throw Error(ErrorKind::Config, "guardDigits must be >= 0");
}

PrecisionScope::PrecisionScope(int digits10)
    : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real epsilon() {
  return boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()));
}

std::string to_decimal(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(std::max(digits - 1, 0), std::ios_base::scientific);
}

Real parse_decimal(std::string_view text) {
  std::string s(text);
  auto trimmed = s.find_first_not_of(" \t");
  if (s.empty() || trimmed == std::string::npos)
    throw Error(ErrorKind::Syntax, "empty number");
  // mpfr accepts a few spellings (inf, nan, hex) that are not decimals.
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '+' || c == 'e' || c == 'E'))
      throw Error(ErrorKind::Syntax, "not a decimal number: '" + s + "'");
  }
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Syntax, "not a decimal number: '" + s + "'");
  }
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

}  // namespace qseries
