#include "shiftlab/weights.hpp"

#include <algorithm>

#include "shiftlab/roots.hpp"

namespace shiftlab {

namespace {

Rational invert(const Rational& q) { return Rational(1) / q; }

Monotonicity flip(Monotonicity m) {
  switch (m) {
    case Monotonicity::non_increasing: return Monotonicity::non_decreasing;
    case Monotonicity::non_decreasing: return Monotonicity::non_increasing;
    case Monotonicity::constant: return Monotonicity::constant;
  }
  return Monotonicity::constant;
}

// Certificate for a ratio-form sequence.  The sign polynomials
//   g = p(x+1)^2 - p(x) p(x+2)   (weight monotonicity)
//   h = p(x+1) - p(x)            (position of w_n^2 against 1)
// have constant sign beyond their real roots, which pins the tail.
TailCertificate ratio_certificate(const RatioGen& g) {
  TailCertificate cert;
  cert.limit_sq = 1;

  const Poly& p = g.p;
  Poly p1 = p.shifted_arg(1);
  Poly mono = p1 * p1 - p * p.shifted_arg(2);
  Poly h = p1 - p;

  std::uint64_t from = 0;
  Monotonicity dir = Monotonicity::constant;
  if (mono.is_zero()) {
    // p constant: the isometry
    cert.monotone = MonotoneTail{0, Monotonicity::constant};
    cert.inf_sq = cert.sup_sq = 1;
    return cert;
  }
  std::int64_t beyond = integer_beyond_real_roots(mono, 0);
  if (!h.is_zero()) beyond = std::max(beyond, integer_beyond_real_roots(h, 0));
  std::int64_t shifted = beyond - static_cast<std::int64_t>(g.offset);
  from = shifted > 0 ? static_cast<std::uint64_t>(shifted) : 0;

  Rational g_sign = mono(Rational(Integer(from + g.offset)));
  bool decreasing = g_sign > 0;  // p(n+1)^2 > p(n) p(n+2): ratios decrease
  if (g.inverted) decreasing = !decreasing;
  dir = decreasing ? Monotonicity::non_increasing : Monotonicity::non_decreasing;
  cert.monotone = MonotoneTail{from, dir};

  Rational at_from = g.weight_sq(from);
  Rational tail_lo = dir == Monotonicity::non_increasing ? Rational(1) : at_from;
  Rational tail_hi = dir == Monotonicity::non_increasing ? at_from : Rational(1);
  Rational lo = std::min(tail_lo, at_from), hi = std::max(tail_hi, at_from);
  for (std::uint64_t n = 0; n < from; ++n) {
    Rational w = g.weight_sq(n);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  cert.inf_sq = lo;
  cert.sup_sq = hi;
  return cert;
}

TailCertificate explicit_certificate(const ExplicitGen& g) {
  TailCertificate cert;
  cert.limit_sq = g.tail_sq;
  cert.monotone = MonotoneTail{g.prefix_sq.size(), Monotonicity::constant};
  Rational lo = g.tail_sq, hi = g.tail_sq;
  for (const Rational& w : g.prefix_sq) {
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  cert.inf_sq = lo;
  cert.sup_sq = hi;
  return cert;
}

TailCertificate blocky_certificate(const BlockyGen& g) {
  TailCertificate cert;
  cert.limit_sq = 1;
  cert.inf_sq = g.inverted ? Rational(2, 3) : Rational(1);
  cert.sup_sq = g.inverted ? Rational(1) : Rational(3, 2);
  return cert;
}

struct CertVisitor {
  TailCertificate operator()(const RatioGen& g) const { return ratio_certificate(g); }
  TailCertificate operator()(const ExplicitGen& g) const { return explicit_certificate(g); }
  TailCertificate operator()(const BlockyGen& g) const { return blocky_certificate(g); }
};

}  // namespace

Rational RatioGen::weight_sq(std::uint64_t n) const {
  Rational lo = p(Rational(Integer(n + offset)));
  Rational hi = p(Rational(Integer(n + offset + 1)));
  return inverted ? lo / hi : hi / lo;
}

Rational ExplicitGen::weight_sq(std::uint64_t n) const {
  return n < prefix_sq.size() ? prefix_sq[n] : tail_sq;
}

Rational BlockyGen::weight_sq(std::uint64_t n) const {
  std::uint64_t idx = n + offset;
  // block l >= 1 starts at 2^(l+1) - 4 + (l-1) and holds 2^(l+1)+1 entries
  std::uint64_t l = 1, start = 0;
  while (true) {
    std::uint64_t len = (std::uint64_t{1} << (l + 1)) + 1;
    if (idx < start + len) {
      std::uint64_t within = idx - start;
      std::uint64_t level = (within % 2 == 0) ? l : l + 1;
      Rational v = Rational(1) + Rational(Integer(1), Integer(1) << level);
      return inverted ? invert(v) : v;
    }
    start += len;
    ++l;
  }
}

WeightSeq::WeightSeq(std::variant<RatioGen, ExplicitGen, BlockyGen> gen) : gen_(std::move(gen)) {
  cert_ = std::visit(CertVisitor{}, gen_);
}

WeightSeq WeightSeq::polynomial(Poly p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial generator: zero polynomial");
  if (p(Rational(0)) <= 0)
    throw std::invalid_argument("polynomial generator: p(0) must be positive");
  if (p.degree() >= 1 &&
      real_root_count(p, ExtendedRational(Rational(0)), ExtendedRational::plus_infinity()) > 0)
    throw std::invalid_argument("polynomial generator: p has a real root in [0, inf)");
  return WeightSeq(RatioGen{std::move(p), 0, false});
}

WeightSeq WeightSeq::explicit_tail(std::vector<Rational> prefix_sq, Rational tail_sq) {
  if (prefix_sq.empty()) throw std::invalid_argument("explicit generator: empty prefix");
  for (const Rational& w : prefix_sq)
    if (w <= 0) throw std::invalid_argument("explicit generator: non-positive squared weight");
  if (tail_sq <= 0) throw std::invalid_argument("explicit generator: non-positive tail");
  return WeightSeq(ExplicitGen{std::move(prefix_sq), std::move(tail_sq)});
}

WeightSeq WeightSeq::blocky() { return WeightSeq(BlockyGen{}); }

Rational WeightSeq::squared(std::uint64_t n) const {
  return std::visit([n](const auto& g) { return g.weight_sq(n); }, gen_);
}

WeightSeq WeightSeq::dual() const {
  if (!(cert_.inf_sq > 0)) throw std::domain_error("dual: shift is not left-invertible");
  if (const auto* r = ratio_form()) return WeightSeq(RatioGen{r->p, r->offset, !r->inverted});
  if (const auto* e = explicit_form()) {
    ExplicitGen d{e->prefix_sq, invert(e->tail_sq)};
    for (Rational& w : d.prefix_sq) w = invert(w);
    return WeightSeq(std::move(d));
  }
  const auto& b = std::get<BlockyGen>(gen_);
  return WeightSeq(BlockyGen{b.offset, !b.inverted});
}

WeightSeq WeightSeq::shifted(std::uint64_t k) const {
  if (k == 0) return *this;
  if (const auto* r = ratio_form()) return WeightSeq(RatioGen{r->p, r->offset + k, r->inverted});
  if (const auto* e = explicit_form()) {
    ExplicitGen s{{}, e->tail_sq};
    for (std::uint64_t n = k; n < e->prefix_sq.size(); ++n) s.prefix_sq.push_back(e->prefix_sq[n]);
    if (s.prefix_sq.empty()) s.prefix_sq.push_back(e->tail_sq);
    return WeightSeq(std::move(s));
  }
  const auto& b = std::get<BlockyGen>(gen_);
  return WeightSeq(BlockyGen{b.offset + k, b.inverted});
}

std::string WeightSeq::describe() const {
  if (const auto* r = ratio_form()) {
    std::string s = "ratio form p = " + r->p.str();
    if (r->offset) s += ", offset " + std::to_string(r->offset);
    if (r->inverted) s += ", inverted";
    return s;
  }
  if (const auto* e = explicit_form())
    return "explicit prefix of " + std::to_string(e->prefix_sq.size()) + ", tail " +
           fraction_string(e->tail_sq);
  return "blocky";
}

ShiftOp dual_weights(const ShiftOp& w) {
  return ShiftOp(w.weights().dual(), "dual(" + w.label() + ")");
}

PowerShift::PowerShift(const ShiftOp& base, std::uint64_t k) : base_(base), k_(k) {
  if (k == 0) throw std::invalid_argument("power_weights: k must be positive");
}

Rational PowerShift::squared_step_weight(std::uint64_t n) const {
  if (const auto* r = base_.weights().ratio_form()) {
    // telescoping: prod_{j<k} w_{n+j}^2 = p(n+off+k)/p(n+off) (or reciprocal)
    Rational lo = r->p(Rational(Integer(n + r->offset)));
    Rational hi = r->p(Rational(Integer(n + r->offset + k_)));
    return r->inverted ? lo / hi : hi / lo;
  }
  Rational prod = 1;
  for (std::uint64_t j = 0; j < k_; ++j) prod *= base_.squared_weight(n + j);
  return prod;
}

PowerShift power_weights(const ShiftOp& w, std::uint64_t k) { return PowerShift(w, k); }

Rational bm_diag(const ShiftOp& w, unsigned m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("bm_diag: m must be positive");
  // sum_k (-1)^k C(m,k) ||W^k e_n||^2 with the running weight product
  Rational acc = 0, prod = 1;
  Integer binom = 1;
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = Rational(binom) * prod;
    acc += (k % 2 == 0) ? term : -term;
    prod *= w.squared_weight(n + k);
    binom = binom * Integer(m - k) / Integer(k + 1);
  }
  return acc;
}

Rational self_commutator_diag(const ShiftOp& w, std::uint64_t n) {
  if (n == 0) return w.squared_weight(0);
  return w.squared_weight(n) - w.squared_weight(n - 1);
}

namespace {

// Newton interpolation at the integer nodes 0..m-1.
Poly interpolate_at_integers(const std::vector<Rational>& values) {
  std::size_t m = values.size();
  std::vector<Rational> diffs = values;  // divided differences, in place
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m; i-- > level;)
      diffs[i] = (diffs[i] - diffs[i - 1]) / Rational(Integer(level));
  Poly result = Poly::constant(diffs[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * Poly{Rational(-Integer(i)), Rational(1)} + Poly::constant(diffs[i]);
  }
  return result;
}

}  // namespace

std::optional<MomentFit> moment_poly_fit(const ShiftOp& w, unsigned m, std::uint64_t window) {
  if (m < 2) throw std::invalid_argument("moment_poly_fit: m must be at least 2");
  std::vector<Rational> q(m);
  q[0] = 1;
  for (unsigned i = 1; i < m; ++i) q[i] = q[i - 1] * w.squared_weight(i - 1);
  Poly p = interpolate_at_integers(q);

  if (const auto* r = w.weights().ratio_form()) {
    // ratio law as a polynomial identity: p(x+1) den(x) == num(x) p(x)
    Poly base = r->p.shifted_arg(Rational(Integer(r->offset)));
    Poly num = r->inverted ? base : base.shifted_arg(1);
    Poly den = r->inverted ? base.shifted_arg(1) : base;
    if (p.shifted_arg(1) * den == num * p) return MomentFit{std::move(p), true};
    return std::nullopt;
  }
  for (std::uint64_t n = 0; n <= window; ++n) {
    if (p(Rational(Integer(n + 1))) != w.squared_weight(n) * p(Rational(Integer(n))))
      return std::nullopt;
  }
  return MomentFit{std::move(p), false};
}

ShiftOp sk_weights(const ShiftOp& w, std::uint64_t k) {
  if (!w.left_invertible()) throw std::domain_error("sk_weights: shift is not left-invertible");
  return ShiftOp(w.weights().shifted(k).dual(),
                 "S_" + std::to_string(k) + "(" + w.label() + ")");
}

}  // namespace shiftlab
