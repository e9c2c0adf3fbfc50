#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace shiftlab {

/// Arbitrary-precision integers and rationals.
///
/// Every exact quantity in the library (squared weights, polynomial
/// coefficients, certificates) is carried by `Rational`.  The backing type
/// keeps fractions canonical: denominator positive, gcd(num, den) = 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "num/den" or "num".  Whitespace is not accepted.
Rational parse_rational(const std::string& text);

/// Renders a rational as "num/den" (integers become "n/1").
std::string fraction_string(const Rational& q);

/// Largest integer <= q.
Integer floor_int(const Rational& q);

/// Smallest integer >= q.
Integer ceil_int(const Rational& q);

/// A rational extended with the two infinities; used as interval endpoint
/// for real-root counting.
class ExtendedRational {
 public:
  enum class Kind { minus_inf, finite, plus_inf };

  ExtendedRational(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::minus_inf); }
  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::plus_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("ExtendedRational: value() on an infinity");
    return value_;
  }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ == b.kind_) return a.is_finite() && a.value_ < b.value_;
    return rank(a.kind_) < rank(b.kind_);
  }
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
  }

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}
  static int rank(Kind k) {
    return k == Kind::minus_inf ? 0 : (k == Kind::finite ? 1 : 2);
  }

  Kind kind_;
  Rational value_{};
};

}  // namespace shiftlab
