#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/weights.hpp"

namespace shiftlab {

/// Raised when a computed report violates a structural theorem (an
/// implementation bug, never repaired silently).
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Verdict of a predicate quantified over all weight indices.  Polynomial
/// and explicit generators admit exact decisions; other sequences are
/// checked on a finite window and the verdict says so.
class TriState {
 public:
  static TriState yes() { return TriState(Kind::yes, 0); }
  static TriState no() { return TriState(Kind::no, 0); }
  static TriState window(std::uint64_t n) { return TriState(Kind::window_verified, n); }

  bool is_yes() const { return kind_ == Kind::yes; }
  bool is_no() const { return kind_ == Kind::no; }
  bool is_window() const { return kind_ == Kind::window_verified; }
  /// yes or window-verified; chain invariants use this reading.
  bool truthy() const { return kind_ != Kind::no; }

  friend TriState conjoin(const TriState& a, const TriState& b) {
    if (a.is_no() || b.is_no()) return no();
    if (a.is_window() || b.is_window())
      return window(std::max(a.window_, b.window_));
    return yes();
  }

  std::string str() const {
    switch (kind_) {
      case Kind::yes: return "true";
      case Kind::no: return "false";
      default: return "window:" + std::to_string(window_);
    }
  }

  friend bool operator==(const TriState& a, const TriState& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::window_verified || a.window_ == b.window_);
  }

 private:
  enum class Kind { yes, no, window_verified };
  TriState(Kind k, std::uint64_t w) : kind_(k), window_(w) {}
  Kind kind_;
  std::uint64_t window_;
};

inline constexpr std::uint64_t kDefaultWindow = 64;

/// w_n >= 1 for every n.
TriState is_expansion(const ShiftOp& w, std::uint64_t window = kDefaultWindow);

/// B_2(W) <= 0: second difference of the moment generator non-positive.
TriState is_concave(const ShiftOp& w, std::uint64_t window = kDefaultWindow);

/// W^k is a weakly concave operator: expansion of W^k, spectral radius at
/// most one, and the k-step product domination for n >= k.
TriState is_weakly_concave_power(const ShiftOp& w, std::uint64_t k,
                                 std::uint64_t window = kDefaultWindow);

/// Hyponormality of the dual restricted to ran(W'^k): the weight tail
/// {w_{k+n}} must be non-increasing.
TriState dual_restriction_hyponormal(const ShiftOp& w, std::uint64_t k,
                                     std::uint64_t window = kDefaultWindow);

/// Membership in class A_k: expansion, non-increasing tail from k, and
/// limsup of the weights at most one.
TriState class_Ak(const ShiftOp& w, std::uint64_t k, std::uint64_t window = kDefaultWindow);

/// The sufficient condition for class A_infinity (expansion + limsup <= 1).
/// Not necessary; reports label it accordingly.
TriState class_Ainf_sufficient(const ShiftOp& w, std::uint64_t window = kDefaultWindow);

/// True iff {1/p(n)} is a Hausdorff moment sequence, decided through the
/// root criterion; a positive verdict re-checks the monotonicity and
/// log-concavity consequences exactly and throws consistency_error if they
/// ever failed.
bool is_hausdorff_reciprocal(const Poly& p);

/// The conjugated shift S_k (squared weights 1/w_{n+k}^2) must be a
/// 2-hypercontraction whenever W is of class A_k.
TriState two_hypercontraction_check(const ShiftOp& w, std::uint64_t k,
                                    std::uint64_t window = kDefaultWindow);

struct PrzykReport {
  bool weakly_concave = false;
  std::uint64_t paper_sufficient_k = 0;  // least k with k^2 >= 2 v^2
  std::uint64_t minimal_k = 0;           // least k passing the exact power check
};

/// Classification of the shift generated by x^2 + 2ux + u^2 + v^2.
/// Requires u >= -1/2 and v != 0.
PrzykReport przyk_classify(const Rational& u, const Rational& v,
                           std::uint64_t window = kDefaultWindow);

struct ClassReport {
  std::string label;
  bool left_invertible = false;
  TriState expansion = TriState::no();
  std::optional<unsigned> m_isometry_order;
  bool m_isometry_exact = false;
  TriState concave = TriState::no();
  TriState weakly_concave = TriState::no();
  std::vector<std::pair<std::uint64_t, TriState>> class_Ak;
  TriState class_Ainf_sufficient = TriState::no();
  std::optional<bool> hausdorff_reciprocal;
  std::vector<std::string> notes;
};

/// Aggregates the predicates for k = 0..k_max and enforces the structural
/// chain facts; violations raise consistency_error.
ClassReport build_class_report(const ShiftOp& w, std::uint64_t k_max,
                               std::uint64_t window = kDefaultWindow);

}  // namespace shiftlab
