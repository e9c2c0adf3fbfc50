#include <cmath>
#include <vector>

#include "doctest.h"
#include "shiftlab/weights.hpp"

using namespace shiftlab;

namespace {

ShiftOp separ1() {
  return ShiftOp(WeightSeq::polynomial(Poly{Rational(1), Rational(2), Rational(1)}), "separ1");
}
ShiftOp isometry() {
  return ShiftOp(WeightSeq::explicit_tail({Rational(1)}, Rational(1)), "isometry");
}
ShiftOp przyk(const Rational& u, const Rational& v) {
  // x^2 + 2ux + u^2 + v^2
  return ShiftOp(WeightSeq::polynomial(Poly{u * u + v * v, 2 * u, Rational(1)}), "przyk");
}
ShiftOp blocky() { return ShiftOp(WeightSeq::blocky(), "blocky"); }

// Dense rational matrices, used only as an independent oracle.  The weighted
// shift is similar to the 0/1 shift via the diagonal basis f_n = c_n e_n with
// c_{n+1}^2 = c_n^2 w_n^2, and adjoints are taken against the Gram matrix
// G = diag(c_n^2), so B_m can be evaluated without square roots.
using RatMat = std::vector<std::vector<Rational>>;

RatMat rm_zero(std::size_t n) { return RatMat(n, std::vector<Rational>(n)); }

RatMat rm_identity(std::size_t n) {
  RatMat m = rm_zero(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rm_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size();
  RatMat c = rm_zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Rational bm_diag_dense_oracle(const ShiftOp& w, unsigned m, std::uint64_t n) {
  std::size_t N = static_cast<std::size_t>(n) + m + 2;
  std::vector<Rational> gram(N);  // c_k^2
  gram[0] = 1;
  for (std::size_t k = 1; k < N; ++k) gram[k] = gram[k - 1] * w.squared_weight(k - 1);

  RatMat shift = rm_zero(N);  // plain 0/1 shift in the f basis
  for (std::size_t k = 0; k + 1 < N; ++k) shift[k + 1][k] = 1;
  RatMat adj = rm_zero(N);  // G^{-1} shift^T G
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (shift[j][i] != 0) adj[i][j] = shift[j][i] * gram[j] / gram[i];

  RatMat acc = rm_zero(N);
  RatMat tk = rm_identity(N);
  Integer binom = 1;
  for (unsigned k = 0; k <= m; ++k) {
    RatMat atk = tk;
    for (unsigned j = 0; j < k; ++j) atk = rm_mul(adj, atk);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j2 = 0; j2 < N; ++j2) {
        Rational t = Rational(binom) * atk[i][j2];
        acc[i][j2] += (k % 2 == 0) ? t : -t;
      }
    tk = rm_mul(shift, tk);
    binom = binom * Integer(m - k) / Integer(k + 1);
  }
  return acc[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("make_weights on the named generators") {
  ShiftOp s = separ1();
  CHECK(s.squared_weight(0) == 4);
  CHECK(s.squared_weight(1) == Rational(9, 4));
  REQUIRE(s.weights().certificate().limit_sq.has_value());
  CHECK(*s.weights().certificate().limit_sq == 1);
  CHECK(s.weights().certificate().inf_sq == 1);
  CHECK(s.weights().certificate().sup_sq == 4);
  REQUIRE(s.weights().certificate().monotone.has_value());
  CHECK(s.weights().certificate().monotone->direction == Monotonicity::non_increasing);

  ShiftOp iso = isometry();
  for (std::uint64_t n : {0, 1, 5, 100}) CHECK(iso.squared_weight(n) == 1);

  ShiftOp p01 = przyk(0, 1);
  CHECK(p01.squared_weight(0) == 2);
  CHECK(p01.squared_weight(1) == Rational(5, 2));

  ShiftOp b = blocky();
  CHECK(b.squared_weight(0) == Rational(3, 2));
  // block 1 pattern: a1 a2 a1 a2 a1, then block 2 starts with a2
  CHECK(b.squared_weight(1) == Rational(5, 4));
  CHECK(b.squared_weight(4) == Rational(3, 2));
  CHECK(b.squared_weight(5) == Rational(5, 4));
  CHECK(b.squared_weight(6) == Rational(9, 8));
  CHECK(b.weights().certificate().inf_sq == 1);
  CHECK(b.weights().certificate().sup_sq == Rational(3, 2));
  CHECK_FALSE(b.weights().certificate().monotone.has_value());
}

TEST_CASE("polynomial generator validation") {
  CHECK_THROWS_AS(WeightSeq::polynomial(Poly{Rational(0), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::polynomial(Poly{Rational(-3), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::polynomial(Poly::constant(-1)), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::polynomial(Poly()), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::explicit_tail({}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::explicit_tail({Rational(0)}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::explicit_tail({Rational(1)}, Rational(-1)), std::invalid_argument);
}

TEST_CASE("dual weights") {
  ShiftOp s = separ1();
  ShiftOp d = dual_weights(s);
  CHECK(d.squared_weight(0) == Rational(1, 4));
  CHECK(d.squared_weight(1) == Rational(4, 9));
  REQUIRE(d.weights().certificate().monotone.has_value());
  CHECK(d.weights().certificate().monotone->direction == Monotonicity::non_decreasing);
  CHECK(d.weights().certificate().inf_sq == Rational(1, 4));
  CHECK(d.weights().certificate().sup_sq == 1);

  ShiftOp iso = isometry();
  CHECK(dual_weights(iso).squared_weight(17) == 1);

  // involution on all generator kinds
  for (const ShiftOp& w : {separ1(), przyk(0, 1), przyk(Rational(-1, 2), 3), isometry(), blocky(),
                           ShiftOp(WeightSeq::explicit_tail({Rational(9), Rational(1, 2)}, Rational(2)), "e")}) {
    ShiftOp dd = dual_weights(dual_weights(w));
    for (std::uint64_t n = 0; n <= 256; ++n) CHECK(dd.squared_weight(n) == w.squared_weight(n));
  }
}

TEST_CASE("power weights telescope") {
  CHECK(power_weights(separ1(), 2).squared_step_weight(0) == 9);
  CHECK(power_weights(isometry(), 7).squared_step_weight(3) == 1);
  CHECK(power_weights(przyk(0, 1), 2).squared_step_weight(0) == 5);
  CHECK_THROWS_AS(power_weights(separ1(), 0), std::invalid_argument);

  // q(n) = prod_{j<n} w_j^2; the k-step weight must equal q(n+k)/q(n)
  for (const ShiftOp& w : {separ1(), przyk(Rational(-1, 2), 3), blocky()}) {
    std::vector<Rational> q{Rational(1)};
    for (std::uint64_t n = 0; n < 130; ++n) q.push_back(q.back() * w.squared_weight(n));
    for (std::uint64_t k = 1; k <= 64; k += 21)
      for (std::uint64_t n = 0; n <= 64; n += 13)
        CHECK(power_weights(w, k).squared_step_weight(n) == q[n + k] / q[n]);
  }
}

TEST_CASE("bm_diag spec values and dense oracle") {
  CHECK(bm_diag(separ1(), 3, 0) == 0);
  CHECK(bm_diag(separ1(), 2, 0) == 2);
  for (unsigned m = 1; m <= 3; ++m)
    for (std::uint64_t n = 0; n <= 5; ++n) CHECK(bm_diag(isometry(), m, n) == 0);

  for (const ShiftOp& w : {separ1(), przyk(0, 1), dual_weights(separ1()), blocky()})
    for (unsigned m = 1; m <= 4; ++m)
      for (std::uint64_t n = 0; n <= 8; ++n)
        CHECK(bm_diag(w, m, n) == bm_diag_dense_oracle(w, m, n));
}

TEST_CASE("moment_poly_fit") {
  auto fit3 = moment_poly_fit(separ1(), 3);
  REQUIRE(fit3.has_value());
  CHECK(fit3->exact);
  CHECK(fit3->p == Poly{Rational(1), Rational(2), Rational(1)});

  CHECK_FALSE(moment_poly_fit(separ1(), 2).has_value());  // not a 2-isometry

  auto iso2 = moment_poly_fit(isometry(), 2);
  REQUIRE(iso2.has_value());
  CHECK(iso2->p == Poly::constant(1));

  CHECK_FALSE(moment_poly_fit(blocky(), 4).has_value());
  CHECK_FALSE(moment_poly_fit(dual_weights(separ1()), 3).has_value());

  // a successful fit forces the m-isometry defect to vanish on the window
  auto fit_p = moment_poly_fit(przyk(Rational(-1, 2), 3), 3);
  REQUIRE(fit_p.has_value());
  for (std::uint64_t n = 0; n <= 64; ++n) CHECK(bm_diag(przyk(Rational(-1, 2), 3), 3, n) == 0);
}

TEST_CASE("self-commutator diagonal") {
  CHECK(self_commutator_diag(separ1(), 0) == 4);
  CHECK(self_commutator_diag(separ1(), 1) == Rational(-7, 4));
  CHECK(self_commutator_diag(isometry(), 1) == 0);
}

TEST_CASE("sk_weights identity and numeric conjugation oracle") {
  ShiftOp s = separ1();
  CHECK(sk_weights(s, 1).squared_weight(0) == Rational(4, 9));
  CHECK(sk_weights(s, 1).squared_weight(1) == Rational(9, 16));
  for (std::uint64_t n = 0; n <= 32; ++n)
    CHECK(sk_weights(s, 0).squared_weight(n) == dual_weights(s).squared_weight(n));
  for (std::uint64_t n = 0; n <= 32; ++n) CHECK(sk_weights(isometry(), 5).squared_weight(n) == 1);

  // conjugate the truncated dual by the truncated C_k^{+-1/2}
  constexpr int N = 16;
  for (const ShiftOp& w : {separ1(), przyk(0, 1), blocky()}) {
    for (std::uint64_t k = 0; k <= 4; ++k) {
      std::vector<double> ck(N);
      for (int n = 0; n < N; ++n) {
        double c = 1.0;
        for (std::uint64_t j = 0; j < k; ++j)
          c /= to_double(w.squared_weight(static_cast<std::uint64_t>(n) + j));
        ck[static_cast<std::size_t>(n)] = c;
      }
      ShiftOp sk = sk_weights(w, k);
      for (int n = 0; n + 1 < N; ++n) {
        double dual_entry = 1.0 / std::sqrt(to_double(w.squared_weight(static_cast<std::uint64_t>(n))));
        double conj = std::sqrt(ck[static_cast<std::size_t>(n) + 1]) * dual_entry /
                      std::sqrt(ck[static_cast<std::size_t>(n)]);
        double expected = std::sqrt(to_double(sk.squared_weight(static_cast<std::uint64_t>(n))));
        CHECK(std::abs(conj - expected) < 1e-9);
      }
    }
  }
}
