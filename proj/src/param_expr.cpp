#include "qseries/param_expr.hpp"

#include <cctype>
#include <charconv>

namespace qseries {

namespace mp = boost::multiprecision;

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParamExpr parse() {
    if (s_.empty()) throw SyntaxError(0, "empty expression");
    ParamExpr e;
    if (peek() == '-') {
      e.sign = -1;
      ++pos_;
    }
    if (peek() == 'q') {
      e.kind = ParamExpr::Kind::Power;
    } else {
      e.number = number();
      if (at_end()) return e;
      expect('*');
      e.kind = ParamExpr::Kind::Power;
      if (peek() != 'q') fail("expected 'q'");
    }
    ++pos_;  // 'q'
    if (!at_end()) {
      expect('^');
      exponent(e);
    }
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= s_.size(); }
  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    if (start == pos_) fail("expected a digit");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string number() {
    std::string out = digits();
    if (peek() == '.') {
      ++pos_;
      out += '.' + digits();
    }
    return out;
  }

  static std::int64_t parse_int(const std::string& text, std::size_t at, const std::string& what) {
    std::int64_t v = 0;
    if (text.size() > 15) throw SyntaxError(at, what);
    std::from_chars(text.data(), text.data() + text.size(), v);
    return v;
  }

  void exponent(ParamExpr& e) {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::string whole = digits();
    if (peek() == '.') {
      ++pos_;
      std::string frac = digits();
      e.expDecimal = (negative ? "-" : "") + whole + "." + frac;
      // Compare against the bound without going through binary floating point.
      std::string intPart = whole.substr(std::min(whole.find_first_not_of('0'), whole.size()));
      bool fracZero = frac.find_first_not_of('0') == std::string::npos;
      if (intPart.size() > 3 || (intPart.size() == 3 && (intPart > "100" || (intPart == "100" && !fracZero))))
        throw SyntaxError(start, "exponent overflow (|exponent| > " + std::to_string(kMaxExponent) + ")");
      return;
    }
    const std::string overflow =
        "exponent overflow (|exponent| > " + std::to_string(kMaxExponent) + ")";
    std::int64_t num = parse_int(whole, start, overflow);
    std::int64_t den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t denAt = pos_;
      den = parse_int(digits(), denAt, "denominator too large");
      if (den == 0) throw SyntaxError(denAt, "denominator must be positive");
    }
    if (num > kMaxExponent * den) throw SyntaxError(start, overflow);
    e.expNum = negative ? -num : num;
    e.expDen = den;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamExpr parse_param(std::string_view text) { return Parser(text).parse(); }

Real ParamExpr::exponent() const {
  if (!expDecimal.empty()) return parse_decimal(expDecimal);
  return Real(expNum) / Real(expDen);
}

Real ParamExpr::eval(const Real& q) const {
  Real coefficient = number.empty() ? Real(1) : parse_decimal(number);
  if (kind == Kind::Literal) return sign * coefficient;
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::Domain, "q must lie in (0, 1)");
  // Integer powers by repeated multiplication, so "q" is exactly q.
  Real power = expDecimal.empty() && expDen == 1 ? Real(mp::pow(q, static_cast<long>(expNum)))
                                                 : Real(mp::exp(exponent() * mp::log(q)));
  return sign * coefficient * power;
}

std::string ParamExpr::print() const {
  std::string out = sign < 0 ? "-" : "";
  if (kind == Kind::Literal) return out + number;
  if (!number.empty()) out += number + "*";
  out += "q";
  if (!expDecimal.empty()) return out + "^" + expDecimal;
  if (expNum == 1 && expDen == 1) return out;
  out += "^" + std::to_string(expNum);
  if (expDen != 1) out += "/" + std::to_string(expDen);
  return out;
}

}  // namespace qseries
