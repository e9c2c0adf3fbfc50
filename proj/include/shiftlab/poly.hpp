#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "shiftlab/rational.hpp"

namespace shiftlab {

/// Univariate polynomial over the rationals, constant term first.
///
/// The coefficient vector never stores a trailing zero, so `degree()` is the
/// index of the last coefficient (-1 for the zero polynomial).  Evaluation
/// and all arithmetic are exact.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(Rational c);
  /// c * x^k
  static Poly monomial(Rational c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  /// p(x + c), exact binomial shift of the argument.
  Poly shifted_arg(const Rational& c) const;

  /// Quotient and remainder of exact division; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (1 for coprime inputs, 0 only if both are zero).
  static Poly gcd(Poly a, Poly b);
  /// p / gcd(p, p'): same distinct roots, all simple.
  Poly squarefree_part() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace shiftlab
