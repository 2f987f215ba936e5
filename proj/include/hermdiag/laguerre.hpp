#pragma once

#include "hermdiag/polynomial.hpp"
#include "hermdiag/rational.hpp"
#include "hermdiag/report.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hermdiag {

/// (α, a) for the operator T = a + (x - α - 1) D - x D², diagonal in the
/// generalized Laguerre basis with eigenvalues n + a.
class LaguerreParam {
 public:
  /// Throws std::invalid_argument unless alpha > -1.
  LaguerreParam(Rational alpha, Rational a);

  const Rational& alpha() const { return alpha_; }
  const Rational& a() const { return a_; }

 private:
  Rational alpha_;
  Rational a_;
};

/// Standard normalization, L_n^{(α)}(0) = C(n+α, n):
/// L_n^{(α)}(x) = Σ_k (-1)^k [∏_{j=k+1}^{n} (α+j)] / ((n-k)! k!) x^k.
Polynomial laguerre_poly(std::size_t n, const Rational& alpha);

std::vector<Polynomial> laguerre_polys_upto(std::size_t n, const Rational& alpha);

/// Coefficients c_k with p = Σ c_k L_k^{(α)}, by back-substitution.
std::vector<Rational> to_laguerre_basis(const Polynomial& p, const Rational& alpha);
Polynomial from_laguerre_basis(const std::vector<Rational>& coeffs, const Rational& alpha);

/// a f + (x - α - 1) f' - x f''.
Polynomial laguerre_operator_apply(const LaguerreParam& params, const Polynomial& f);

/// The three coefficient polynomials a, x - α - 1, -x.
std::vector<Polynomial> laguerre_operator_coefficients(const LaguerreParam& params);

/// T L_n = (n + a) L_n for n ≤ n_max.
CheckReport verify_laguerre_eigen(const LaguerreParam& params, std::size_t n_max);

struct LaguerreDemoRow {
  Rational a;
  bool coefficients_real_rooted = false;
  /// "falsified" or "inconclusive".
  std::string status;
  std::optional<Polynomial> witness_input;
  std::optional<Polynomial> witness_output;
  bool inside_bound = false;
};

/// For each a: the operator's coefficients are real-rooted, yet {k + a}
/// fails as a Laguerre multiplier sequence outside 0 ≤ a ≤ α + 1, which
/// the falsifier exhibits with a witness of degree ≤ deg_max.
std::vector<LaguerreDemoRow> laguerre_counterexample_demo(const Rational& alpha, const std::vector<Rational>& a_values,
                                                          std::size_t deg_max = 6);

}  // namespace hermdiag
