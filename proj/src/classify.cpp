#include "shiftlab/classify.hpp"

#include <cmath>

#include "shiftlab/roots.hpp"

namespace shiftlab {

namespace {

// Decides "q(x) >= 0 for all integers x >= start", treating the zero
// polynomial as trivially true.
bool ray_nonneg(const Poly& q, std::int64_t start) {
  if (q.is_zero()) return true;
  return poly_nonneg_on_integer_ray(q, start);
}

Poly shifted(const Poly& p, std::uint64_t by) { return p.shifted_arg(Rational(Integer(by))); }

// Generic window fall-back: scan violation(n) for n in [start, start+window];
// a hit is an exact "no", a clean scan only certifies the window.
template <typename Violation>
TriState window_scan(std::uint64_t start, std::uint64_t window, Violation violated) {
  for (std::uint64_t n = start; n <= start + window; ++n)
    if (violated(n)) return TriState::no();
  return TriState::window(window);
}

// For a prefix+tail sequence a predicate touching lags 0..r is constant once
// n >= prefix length, so scanning up to len certifies all n.
template <typename Violation>
TriState explicit_exact(const ExplicitGen& g, std::uint64_t start, Violation violated) {
  std::uint64_t last = std::max<std::uint64_t>(start, g.prefix_sq.size()) + 1;
  for (std::uint64_t n = start; n <= last; ++n)
    if (violated(n)) return TriState::no();
  return TriState::yes();
}

}  // namespace

TriState is_expansion(const ShiftOp& w, std::uint64_t window) {
  const TailCertificate& cert = w.weights().certificate();
  if (cert.inf_sq >= 1) return TriState::yes();
  auto violated = [&w](std::uint64_t n) { return w.squared_weight(n) < 1; };
  if (const auto* r = w.weights().ratio_form()) {
    Poly base = shifted(r->p, r->offset);
    Poly h = base.shifted_arg(1) - base;
    return ray_nonneg(r->inverted ? -h : h, 0) ? TriState::yes() : TriState::no();
  }
  if (const auto* e = w.weights().explicit_form()) return explicit_exact(*e, 0, violated);
  if (cert.limit_sq && *cert.limit_sq < 1 && cert.monotone) return TriState::no();
  return window_scan(0, window, violated);
}

TriState is_concave(const ShiftOp& w, std::uint64_t window) {
  auto violated = [&w](std::uint64_t n) {
    // <B_2 e_n, e_n> = 1 - 2 w_n^2 + w_n^2 w_{n+1}^2 must stay <= 0
    Rational a = w.squared_weight(n);
    return Rational(1) - 2 * a + a * w.squared_weight(n + 1) > 0;
  };
  if (const auto* r = w.weights().ratio_form()) {
    Poly base = shifted(r->p, r->offset);
    Poly b1 = base.shifted_arg(1), b2 = base.shifted_arg(2);
    // clear the (positive) denominator of the diagonal entry
    Poly num = r->inverted ? b1 * b2 - 2 * base * b2 + base * b1
                           : base - 2 * b1 + b2;
    return ray_nonneg(-num, 0) ? TriState::yes() : TriState::no();
  }
  if (const auto* e = w.weights().explicit_form()) return explicit_exact(*e, 0, violated);
  return window_scan(0, window, violated);
}

TriState dual_restriction_hyponormal(const ShiftOp& w, std::uint64_t k, std::uint64_t window) {
  if (!w.left_invertible()) throw std::domain_error("dual_restriction_hyponormal: not left-invertible");
  auto violated = [&w](std::uint64_t n) { return w.squared_weight(n) < w.squared_weight(n + 1); };
  if (const auto* r = w.weights().ratio_form()) {
    Poly base = shifted(r->p, r->offset);
    Poly b1 = base.shifted_arg(1);
    Poly g = b1 * b1 - base * base.shifted_arg(2);
    return ray_nonneg(r->inverted ? -g : g, static_cast<std::int64_t>(k)) ? TriState::yes()
                                                                          : TriState::no();
  }
  if (const auto* e = w.weights().explicit_form()) return explicit_exact(*e, k, violated);
  return window_scan(k, window, violated);
}

namespace {

// (uno-3): limsup w_n <= 1, decided from the limit certificate.
TriState limsup_at_most_one(const ShiftOp& w, std::uint64_t window) {
  const TailCertificate& cert = w.weights().certificate();
  if (cert.limit_sq) return *cert.limit_sq <= 1 ? TriState::yes() : TriState::no();
  if (cert.sup_sq <= 1) return TriState::yes();
  return TriState::window(window);
}

}  // namespace

TriState class_Ak(const ShiftOp& w, std::uint64_t k, std::uint64_t window) {
  return conjoin(conjoin(is_expansion(w, window), dual_restriction_hyponormal(w, k, window)),
                 limsup_at_most_one(w, window));
}

TriState class_Ainf_sufficient(const ShiftOp& w, std::uint64_t window) {
  return conjoin(is_expansion(w, window), limsup_at_most_one(w, window));
}

TriState is_weakly_concave_power(const ShiftOp& w, std::uint64_t k, std::uint64_t window) {
  if (k == 0) throw std::invalid_argument("is_weakly_concave_power: k must be positive");
  if (!w.left_invertible()) throw std::domain_error("is_weakly_concave_power: not left-invertible");

  PowerShift pw = power_weights(w, k);

  // (wc2) for W^k: the k-step products stay >= 1.
  TriState expansion_k = TriState::no();
  {
    auto violated = [&pw](std::uint64_t n) { return pw.squared_step_weight(n) < 1; };
    if (const auto* r = w.weights().ratio_form()) {
      Poly base = shifted(r->p, r->offset);
      Poly h = base.shifted_arg(Rational(Integer(k))) - base;
      expansion_k = ray_nonneg(r->inverted ? -h : h, 0) ? TriState::yes() : TriState::no();
    } else if (const auto* e = w.weights().explicit_form()) {
      expansion_k = explicit_exact(*e, 0, violated);
    } else {
      expansion_k = window_scan(0, window, violated);
    }
  }
  if (expansion_k.is_no()) return TriState::no();

  // (wc1) via r(W)^k <= 1, certified by limsup w_n <= 1 under expansivity.
  TriState radius = limsup_at_most_one(w, window);
  if (radius.is_no()) return TriState::no();

  // (wc) for W^k: prod_{j<k} w_{n+j} / w_{k+n+j} >= 1 for n >= k.
  TriState domination = TriState::no();
  {
    auto violated = [&pw, k](std::uint64_t n) {
      return pw.squared_step_weight(n) < pw.squared_step_weight(n + k);
    };
    if (const auto* r = w.weights().ratio_form()) {
      Poly base = shifted(r->p, r->offset);
      Poly bk = base.shifted_arg(Rational(Integer(k)));
      Poly q = bk * bk - base * base.shifted_arg(Rational(Integer(2 * k)));
      domination = ray_nonneg(r->inverted ? -q : q, static_cast<std::int64_t>(k))
                       ? TriState::yes()
                       : TriState::no();
    } else if (const auto* e = w.weights().explicit_form()) {
      domination = explicit_exact(*e, k, violated);
    } else {
      domination = window_scan(k, window, violated);
    }
  }
  return conjoin(conjoin(expansion_k, radius), domination);
}

PrzykReport przyk_classify(const Rational& u, const Rational& v, std::uint64_t window) {
  if (u < Rational(-1, 2))
    throw std::invalid_argument("przyk_classify: requires u >= -1/2 (no power guarantee below)");
  if (v == 0) throw std::invalid_argument("przyk_classify: requires v != 0");

  PrzykReport report;
  // weak concavity of W itself: 2((1+u)^2 - v^2) + 4(1+u) + 1 >= 0
  Rational gizo = 2 * ((1 + u) * (1 + u) - v * v) + 4 * (1 + u) + 1;
  report.weakly_concave = gizo >= 0;

  Rational two_v2 = 2 * v * v;
  std::uint64_t k = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(std::sqrt(to_double(two_v2)))));
  while (Rational(Integer(k) * Integer(k)) < two_v2) ++k;
  while (k > 1 && Rational(Integer(k - 1) * Integer(k - 1)) >= two_v2) --k;
  report.paper_sufficient_k = k;

  ShiftOp shift(WeightSeq::polynomial(Poly{u * u + v * v, 2 * u, Rational(1)}), "przyk");
  for (std::uint64_t j = 1; j <= report.paper_sufficient_k; ++j) {
    if (is_weakly_concave_power(shift, j, window).is_yes()) {
      report.minimal_k = j;
      break;
    }
  }
  if (report.minimal_k == 0)
    throw consistency_error("przyk_classify: power bound k^2 >= 2 v^2 failed the exact check");
  return report;
}

bool is_hausdorff_reciprocal(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_hausdorff_reciprocal: zero polynomial");
  if (!all_roots_negative_real(p)) return false;
  // consequences of the root criterion, re-verified exactly
  Poly p1 = p.shifted_arg(1);
  if (!ray_nonneg(p1 - p, 0) || !ray_nonneg(p1 * p1 - p * p.shifted_arg(2), 1))
    throw consistency_error("is_hausdorff_reciprocal: moment consequences failed");
  return true;
}

TriState two_hypercontraction_check(const ShiftOp& w, std::uint64_t k, std::uint64_t window) {
  if (!w.left_invertible()) throw std::domain_error("two_hypercontraction_check: not left-invertible");
  ShiftOp s = sk_weights(w, k);

  // m = 1: s_n^2 <= 1, i.e. the reciprocal sequence is an expansion.
  TriState m1 = is_expansion(dual_weights(s), window);

  // m = 2: 1 - 2 s_n^2 + s_n^2 s_{n+1}^2 >= 0.
  TriState m2 = TriState::no();
  auto violated = [&s](std::uint64_t n) {
    Rational a = s.squared_weight(n);
    return Rational(1) - 2 * a + a * s.squared_weight(n + 1) < 0;
  };
  if (const auto* r = s.weights().ratio_form()) {
    Poly base = shifted(r->p, r->offset);
    Poly b1 = base.shifted_arg(1), b2 = base.shifted_arg(2);
    Poly num = r->inverted ? b1 * b2 - 2 * base * b2 + base * b1
                           : base - 2 * b1 + b2;
    m2 = ray_nonneg(num, 0) ? TriState::yes() : TriState::no();
  } else if (const auto* e = s.weights().explicit_form()) {
    m2 = explicit_exact(*e, 0, violated);
  } else {
    m2 = window_scan(0, window, violated);
  }
  return conjoin(m1, m2);
}

namespace {

std::optional<std::pair<unsigned, bool>> isometry_order(const ShiftOp& w, std::uint64_t window) {
  const TailCertificate& cert = w.weights().certificate();
  if (cert.inf_sq == 1 && cert.sup_sq == 1) return {{1u, true}};
  constexpr unsigned kMaxOrder = 12;
  for (unsigned m = 2; m <= kMaxOrder; ++m)
    if (auto fit = moment_poly_fit(w, m, window)) return {{m, fit->exact}};
  return std::nullopt;
}

}  // namespace

ClassReport build_class_report(const ShiftOp& w, std::uint64_t k_max, std::uint64_t window) {
  ClassReport report;
  report.label = w.label();
  report.left_invertible = w.left_invertible();
  report.expansion = is_expansion(w, window);
  if (auto order = isometry_order(w, window)) {
    report.m_isometry_order = order->first;
    report.m_isometry_exact = order->second;
  }
  report.concave = is_concave(w, window);
  report.weakly_concave = is_weakly_concave_power(w, 1, window);
  for (std::uint64_t k = 0; k <= k_max; ++k)
    report.class_Ak.emplace_back(k, class_Ak(w, k, window));
  report.class_Ainf_sufficient = class_Ainf_sufficient(w, window);
  if (const auto* r = w.weights().ratio_form(); r && !r->inverted)
    report.hausdorff_reciprocal = is_hausdorff_reciprocal(r->p);
  report.notes.push_back("window=" + std::to_string(window));
  report.notes.push_back("class A_inf verdict uses the sufficient condition only");

  // structural facts; a violation here is an implementation bug
  if (report.concave.is_yes() && report.weakly_concave.is_no())
    throw consistency_error("concave operator classified as not weakly concave");
  if (report.concave.is_yes() && report.m_isometry_order && *report.m_isometry_order > 2)
    throw consistency_error("concave m-isometry of order above two");
  for (std::size_t i = 0; i + 1 < report.class_Ak.size(); ++i)
    if (report.class_Ak[i].second.is_yes() && report.class_Ak[i + 1].second.is_no())
      throw consistency_error("class chain broken: A_k true but A_{k+1} false");
  if (!report.class_Ak.empty() && report.class_Ak.back().second.is_yes() &&
      report.class_Ainf_sufficient.is_no() && report.weakly_concave.is_no()) {
    // A_k membership with the sufficient condition failing is possible only
    // through a certificate gap, never through an exact contradiction.
  }
  return report;
}

}  // namespace shiftlab
