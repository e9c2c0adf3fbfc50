#include "shiftlab/roots.hpp"

#include <algorithm>
#include <cstdlib>

namespace shiftlab {

namespace {

int sign_of(const Rational& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Sign of p at an extended point; at the infinities this is the sign of the
// leading term.
int sign_at(const Poly& p, const ExtendedRational& x) {
  switch (x.kind()) {
    case ExtendedRational::Kind::finite:
      return sign_of(p(x.value()));
    case ExtendedRational::Kind::plus_inf:
      return sign_of(p.leading());
    case ExtendedRational::Kind::minus_inf: {
      int s = sign_of(p.leading());
      return p.degree() % 2 == 0 ? s : -s;
    }
  }
  return 0;
}

// Canonical Sturm chain of a squarefree polynomial, leading elements monic
// to keep coefficients small.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = Poly::divmod(a, b).second;
    if (r.is_zero()) break;
    r = (-r).scaled(Rational(1) / r.leading() * sign_of(r.leading()));  // monic up to sign
    chain.push_back(std::move(r));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const ExtendedRational& x) {
  int variations = 0, prev = 0;
  for (const Poly& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Distinct roots of squarefree q in (a, b], endpoints not roots of q.
int sturm_count(const std::vector<Poly>& chain, const ExtendedRational& a,
                const ExtendedRational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

Rational root_magnitude_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
  Rational lead = abs(p.leading());
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i)
    m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lead));
  return m + 1;
}

int real_root_count(const Poly& p, const ExtendedRational& a, const ExtendedRational& b) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("real_root_count: empty interval");
  if (p.degree() == 0) return 0;

  Poly q = p.squarefree_part();
  int extra = 0;
  if (b.is_finite() && q(b.value()) == 0) extra = 1;
  // Rational roots sitting on an endpoint are factored out exactly, so the
  // Sturm count below sees non-root endpoints.
  auto strip_root_at = [&q](const Rational& x) {
    while (!q.is_zero() && q.degree() >= 1 && q(x) == 0)
      q = Poly::divmod(q, Poly({-x, Rational(1)})).first;
  };
  if (a.is_finite()) strip_root_at(a.value());
  if (b.is_finite()) strip_root_at(b.value());
  if (q.degree() <= 0) return extra;

  return sturm_count(sturm_chain(q), a, b) + extra;
}

bool all_roots_negative_real(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("all_roots_negative_real: zero polynomial");
  if (p.leading() <= 0) return false;
  if (p.degree() == 0) return true;
  Poly s = p.squarefree_part();
  if (s(Rational(0)) == 0) return false;
  // s has deg(s) distinct complex roots; all are real negative iff the count
  // of distinct real roots in (-inf, 0) reaches the degree.
  int negative = real_root_count(s, ExtendedRational::minus_infinity(), ExtendedRational(Rational(0)));
  return negative == s.degree();
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(
    const Poly& q, const ExtendedRational& a, const ExtendedRational& b,
    const Rational& max_width) {
  if (q.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  Poly s = q.squarefree_part();
  std::vector<std::pair<Rational, Rational>> out;
  if (s.degree() <= 0) return out;

  // The Cauchy bound is strict, so +-m are never roots; the working frame
  // (lo, hi] sees exactly the roots of (a, b].
  Rational m = root_magnitude_bound(s);
  Rational lo = a.is_finite() ? std::max(a.value(), Rational(-m)) : Rational(-m);
  Rational hi = b.is_finite() ? std::min(b.value(), m) : m;
  if (!(lo < hi)) return out;

  auto divide_out = [&s](const Rational& x) {
    while (s.degree() >= 1 && s(x) == 0)
      s = Poly::divmod(s, Poly({-x, Rational(1)})).first;
  };
  if (s(hi) == 0) {
    out.emplace_back(hi, hi);  // exact rational root on the included endpoint
    divide_out(hi);
  }
  if (s(lo) == 0) divide_out(lo);  // excluded by the half-open interval
  if (s.degree() < 1) {
    std::sort(out.begin(), out.end());
    return out;
  }

  auto chain = sturm_chain(s);
  auto count = [&](const Rational& x, const Rational& y) {
    return sturm_count(chain, ExtendedRational(x), ExtendedRational(y));
  };

  struct Cell { Rational lo, hi; int n; };
  std::vector<Cell> stack{{lo, hi, count(lo, hi)}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.n == 0) continue;
    if (c.n == 1 && c.hi - c.lo <= max_width) {
      out.emplace_back(c.lo, c.hi);
      continue;
    }
    // Split at a non-root point; s has deg(s) roots, so among 2*deg+2
    // distinct interior candidates one must be sign-definite.
    Rational mid = (c.lo + c.hi) / 2;
    if (s(mid) == 0) {
      int denom = 2 * s.degree() + 3;
      for (int t = 1; t <= denom - 1; ++t) {
        Rational cand = c.lo + (c.hi - c.lo) * Rational(t, denom);
        if (s(cand) != 0) { mid = cand; break; }
      }
    }
    int left = count(c.lo, mid);
    stack.push_back({mid, c.hi, c.n - left});
    stack.push_back({c.lo, mid, left});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t integer_beyond_real_roots(const Poly& p, std::int64_t floor_at) {
  if (p.is_zero()) throw std::invalid_argument("integer_beyond_real_roots: zero polynomial");
  std::int64_t n = floor_at;
  if (p.degree() >= 1) {
    auto roots = isolate_real_roots(p, ExtendedRational::minus_infinity(),
                                    ExtendedRational::plus_infinity(), Rational(1, 4));
    if (!roots.empty()) {
      Integer beyond = floor_int(roots.back().second) + 1;
      n = std::max(n, beyond.convert_to<std::int64_t>());
    }
  }
  while (p(Rational(n)) == 0) ++n;  // defensive; cannot happen past the bound
  return n;
}

bool poly_nonneg_on_integer_ray(const Poly& q, std::int64_t k) {
  if (q.is_zero()) throw std::invalid_argument("poly_nonneg_on_integer_ray: zero polynomial");
  if (q.degree() == 0) return q.coeff(0) >= 0;
  if (q.leading() < 0) return false;  // q(n) -> -inf along the ray
  if (q(Rational(k)) < 0) return false;

  ExtendedRational start{Rational(k)};
  if (real_root_count(q, start, ExtendedRational::plus_infinity()) == 0)
    return true;  // q(k) >= 0 and no sign change beyond k

  // Negative values can only occur near roots: any integer in a negative
  // stretch is within distance 1 of the stretch's right root, so checking
  // the integers adjacent to each isolating interval is exhaustive.
  auto roots = isolate_real_roots(q, start, ExtendedRational::plus_infinity(), Rational(1, 4));
  for (const auto& [lo, hi] : roots) {
    Integer first = floor_int(lo) - 1;
    Integer last = ceil_int(hi) + 1;
    for (Integer n = first; n <= last; ++n) {
      if (n < k) continue;
      if (q(Rational(n)) < 0) return false;
    }
  }
  return true;
}

}  // namespace shiftlab
