#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftlab/poly.hpp"

namespace shiftlab {

enum class Monotonicity { non_increasing, non_decreasing, constant };

struct MonotoneTail {
  std::uint64_t from = 0;
  Monotonicity direction = Monotonicity::constant;
};

/// Certified facts about a squared-weight sequence.  Bounds are sound for
/// every index; limit and monotone tail are present only when the generator
/// forces them.
struct TailCertificate {
  std::optional<Rational> limit_sq;
  std::optional<MonotoneTail> monotone;
  Rational inf_sq = 0;
  Rational sup_sq = 0;
};

/// w_n^2 = p(n+offset+1)/p(n+offset), or the reciprocal when inverted.
/// Closed under Cauchy dual (invert) and index shift, so every sequence
/// derived from a polynomial generator keeps an exact form with telescoping
/// products.
struct RatioGen {
  Poly p;
  std::uint64_t offset = 0;
  bool inverted = false;

  Rational weight_sq(std::uint64_t n) const;
};

/// Finite prefix of squared weights followed by a constant tail.
struct ExplicitGen {
  std::vector<Rational> prefix_sq;
  Rational tail_sq;

  Rational weight_sq(std::uint64_t n) const;
};

/// The fixed block construction: block l >= 1 contributes 2^(l+1)+1 squared
/// weights alternating 1+2^-l and 1+2^-(l+1), beginning and ending with the
/// former.  Not eventually monotone; the self-commutator absolute series
/// gains at least 1 per block.
struct BlockyGen {
  std::uint64_t offset = 0;
  bool inverted = false;

  Rational weight_sq(std::uint64_t n) const;
};

/// A squared-weight sequence with its tail certificate.  Immutable; the
/// transforming operations return fresh values.
class WeightSeq {
 public:
  /// Eq-star generator: requires p(0) > 0 and no real root in [0, inf).
  static WeightSeq polynomial(Poly p);
  /// Requires a non-empty positive prefix and a positive tail.
  static WeightSeq explicit_tail(std::vector<Rational> prefix_sq, Rational tail_sq);
  static WeightSeq blocky();

  Rational squared(std::uint64_t n) const;
  double squared_d(std::uint64_t n) const { return to_double(squared(n)); }
  const TailCertificate& certificate() const { return cert_; }

  /// Reciprocal squared weights; requires inf_sq > 0.
  WeightSeq dual() const;
  /// Sequence n -> w_{n+k}^2.
  WeightSeq shifted(std::uint64_t k) const;

  const RatioGen* ratio_form() const { return std::get_if<RatioGen>(&gen_); }
  const ExplicitGen* explicit_form() const { return std::get_if<ExplicitGen>(&gen_); }
  bool is_blocky() const { return std::holds_alternative<BlockyGen>(gen_); }

  std::string describe() const;

 private:
  WeightSeq(std::variant<RatioGen, ExplicitGen, BlockyGen> gen);

  std::variant<RatioGen, ExplicitGen, BlockyGen> gen_;
  TailCertificate cert_;
};

/// A unilateral weighted shift seen through its weight sequence.
class ShiftOp {
 public:
  ShiftOp(WeightSeq weights, std::string label)
      : weights_(std::move(weights)), label_(std::move(label)) {}

  const WeightSeq& weights() const { return weights_; }
  const std::string& label() const { return label_; }
  Rational squared_weight(std::uint64_t n) const { return weights_.squared(n); }
  bool left_invertible() const { return weights_.certificate().inf_sq > 0; }

 private:
  WeightSeq weights_;
  std::string label_;
};

/// Cauchy dual: the shift with squared weights 1/w_n^2.
ShiftOp dual_weights(const ShiftOp& w);

/// k-step descriptor of W^k: squared step weights prod_{j<k} w_{n+j}^2.
class PowerShift {
 public:
  PowerShift(const ShiftOp& base, std::uint64_t k);
  std::uint64_t step() const { return k_; }
  Rational squared_step_weight(std::uint64_t n) const;

 private:
  ShiftOp base_;
  std::uint64_t k_;
};

PowerShift power_weights(const ShiftOp& w, std::uint64_t k);

/// Diagonal entry <B_m(W) e_n, e_n> of the defect polynomial
/// B_m = sum_k (-1)^k C(m,k) W*^k W^k; zero for every n iff W is an
/// m-isometry.
Rational bm_diag(const ShiftOp& w, unsigned m, std::uint64_t n);

/// Signed diagonal of the self-commutator [W*, W]: w_n^2 - w_{n-1}^2 with
/// w_{-1} = 0.
Rational self_commutator_diag(const ShiftOp& w, std::uint64_t n);

struct MomentFit {
  Poly p;      // normalized p(0) = 1
  bool exact;  // polynomial identity vs. window verification
};

/// Interpolates the squared moments q(n) = prod_{j<n} w_j^2 at n = 0..m-1 and
/// returns the generator polynomial when the ratio law w_n^2 = p(n+1)/p(n)
/// holds: verified as a polynomial identity for ratio-form sequences and on
/// a finite window otherwise.  Absent when the law fails.
std::optional<MomentFit> moment_poly_fit(const ShiftOp& w, unsigned m, std::uint64_t window = 64);

/// The weighted shift with squared weights 1/w_{n+k}^2: conjugating the dual
/// by C_k^(1/2) (C_k diagonal) lands on this shift; k = 0 is the Cauchy dual.
ShiftOp sk_weights(const ShiftOp& w, std::uint64_t k);

}  // namespace shiftlab
