#include "shiftlab/poly.hpp"

#include <sstream>

namespace shiftlab {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(Integer(i));
  return Poly(std::move(v));
}

Poly Poly::shifted_arg(const Rational& c) const {
  // Taylor shift by repeated synthetic division: p(x) = (x-c) q(x) + p(c),
  // so p(x+c) = x q(x+c) + p(c); the remainders are the shifted coefficients.
  if (is_zero()) return Poly();
  std::vector<Rational> work = c_;
  std::vector<Rational> out(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    std::size_t d = work.size() - 1;
    std::vector<Rational> quo(d);
    Rational carry = 0;
    for (std::size_t i = d; i >= 1; --i) {
      carry = work[i] + carry * c;
      quo[i - 1] = carry;
    }
    out[j] = work[0] + carry * c;
    work = std::move(quo);
    if (work.empty()) break;
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    Rational r = rem[static_cast<std::size_t>(i)];
    if (r == 0) continue;
    Rational q = r / b.leading();
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

Poly Poly::squarefree_part() const {
  if (is_zero()) return Poly();
  if (degree() == 0) return Poly::constant(1);
  Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return divmod(*this, g).first;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << fraction_string(c_[i]);
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace shiftlab
