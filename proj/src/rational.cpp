#include "shiftlab/rational.hpp"

namespace shiftlab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string fraction_string(const Rational& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Integer floor_int(const Rational& q) {
  Integer n = rat_num(q), d = rat_den(q);
  Integer quo = n / d;  // truncates toward zero
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

Integer ceil_int(const Rational& q) { return -floor_int(-q); }

}  // namespace shiftlab
