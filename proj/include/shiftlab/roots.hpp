#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/poly.hpp"

namespace shiftlab {

/// Exact number of distinct real roots of p in the half-open interval (a, b].
/// Endpoints may be infinite.  Multiple roots are counted once.
/// Throws std::invalid_argument for the zero polynomial or if !(a < b).
int real_root_count(const Poly& p, const ExtendedRational& a, const ExtendedRational& b);

/// True iff the leading coefficient of p is positive and every complex root
/// of p is real and lies in (-inf, 0).  Multiplicities are handled through
/// the squarefree part.  Rejects the zero polynomial.
bool all_roots_negative_real(const Poly& p);

/// True iff q(n) >= 0 for every integer n >= k, decided exactly: a real-ray
/// sign argument when q has no root beyond k, otherwise root isolation plus
/// evaluation at the finitely many candidate integers near the roots.
/// Rejects the zero polynomial.
bool poly_nonneg_on_integer_ray(const Poly& q, std::int64_t k);

/// Disjoint isolating intervals (lo, hi], each containing exactly one real
/// root of the squarefree polynomial q inside (a, b]; intervals are refined
/// to width <= max_width and returned in increasing order.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(
    const Poly& q, const ExtendedRational& a, const ExtendedRational& b,
    const Rational& max_width);

/// Smallest integer N >= floor_at such that p has no real root in [N, +inf);
/// the sign of p is then constant on that ray.  p must be nonzero.
std::int64_t integer_beyond_real_roots(const Poly& p, std::int64_t floor_at);

/// Cauchy bound: every real root of p lies in [-bound, bound].
Rational root_magnitude_bound(const Poly& p);

}  // namespace shiftlab
