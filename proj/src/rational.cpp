#include "gamefix/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "gamefix/errors.hpp"

namespace gamefix {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw ParseError("invalid rational '" + text + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("invalid rational '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw ParseError("invalid rational '" + text + "'");
    }
    if (!whole.empty() && !all_digits(whole)) {
      throw ParseError("invalid rational '" + text + "'");
    }
    if (!frac.empty() && !all_digits(frac)) {
      throw ParseError("invalid rational '" + text + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt mantissa = whole.empty() ? BigInt(0) : BigInt(whole);
    mantissa *= scale;
    if (!frac.empty()) mantissa += BigInt(frac);
    value = Rational(mantissa, scale);
  } else {
    if (!all_digits(s)) throw ParseError("invalid rational '" + text + "'");
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational positive_part(const Rational& value) {
  return value > 0 ? value : Rational(0);
}

}
