#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qseries/precision.hpp"

namespace qseries {

/// Syntax error carrying the 0-based offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Syntax, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A parameter value: a decimal literal, or sign * coefficient * q^exponent.
///
///   expr     := ["-"] number | ["-"] [number "*"] "q" ["^" rational]
///   rational := integer | integer "/" positive-integer | decimal
///   number   := digits ["." digits]
///
/// Integers and decimals in the exponent may carry a leading "-". Numbers
/// keep their source spelling, so printing and re-parsing is exact.
struct ParamExpr {
  enum class Kind { Literal, Power };

  Kind kind = Kind::Literal;
  int sign = 1;
  std::string number;           // literal value or coefficient; "" means 1
  std::int64_t expNum = 1;      // rational exponent expNum / expDen
  std::int64_t expDen = 1;
  std::string expDecimal;       // set instead of expNum/expDen for decimal exponents

  bool uses_q() const { return kind == Kind::Power; }
  /// The exponent at the current default precision.
  Real exponent() const;
  /// Value at `q` (ignored for literals), at the current default precision.
  Real eval(const Real& q) const;
  std::string print() const;

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

inline constexpr int kMaxExponent = 100;

/// Throws SyntaxError; |exponent| > 100 is rejected as an exponent overflow.
ParamExpr parse_param(std::string_view text);

}  // namespace qseries
