#pragma once

#include "hermdiag/execution.hpp"
#include "hermdiag/hermite.hpp"
#include "hermdiag/polynomial.hpp"
#include "hermdiag/report.hpp"
#include "hermdiag/sequence.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hermdiag {

/// Truncated representation T = Σ_{k=0}^{K} Q_k(x) D^k of an operator that
/// is diagonal in the generalized Hermite basis. K = Q.size() - 1.
struct HermiteDiffOp {
  HermiteParam alpha;
  std::size_t p_shift = 0;
  std::vector<Polynomial> Q;

  std::size_t order() const { return Q.empty() ? 0 : Q.size() - 1; }
};

/// Thrown when an operator truncated at order K is applied to a polynomial
/// of degree > K.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Q_{k,p}(x) = Σ_{j=0}^{⌊k/2⌋} (-α)^j / (j!(k-2j)!) g_{k-j,p}*(-1) H_{k-2j}^{(α)}(x).
/// α = 0 substitutes H_n^{(0)} = x^n.
Polynomial coefficient_polynomial(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k, std::size_t p = 0);

/// Q_{0,p} .. Q_{K,p}. Rows are independent; `parallel` splits them across
/// OpenMP threads.
HermiteDiffOp build_operator(const HermiteParam& alpha, const GammaSeq& seq, std::size_t K, std::size_t p = 0,
                             Execution exec = Execution::parallel);

/// Coefficient of D^k for the operator diagonal in the standard basis:
/// g_k*(-1)/k! x^k.
Polynomial standard_coefficient(const GammaSeq& seq, std::size_t k);

/// Σ_k Q_k f^{(k)}. Throws TruncationError when deg f > K.
Polynomial apply_operator(const HermiteDiffOp& op, const Polynomial& f);

/// Forward substitution from T[H_n] = γ_n H_n, n = 0..K:
///   Q_n = (γ_n H_n - Σ_{k<n} Q_k H_n^{(k)}) / n!.
/// Shares no code path with coefficient_polynomial.
HermiteDiffOp solve_operator_from_action(const HermiteParam& alpha, const GammaSeq& seq, std::size_t K);

/// For each n ≤ n_max: T (order n, from coefficient_polynomial) maps H_n to γ_n H_n.
CheckReport verify_diagonal_action(const HermiteParam& alpha, const GammaSeq& seq, std::size_t n_max,
                                   Execution exec = Execution::parallel);

/// Q_k at α = 0 equals g_k*(-1)/k! x^k, and every coefficient of Q_k^α is a
/// polynomial in α of degree ≤ ⌊k/2⌋ whose value at 0 is the standard one
/// (checked by interpolation through α = 1, 1/2, 1/4, ...).
CheckReport alpha_zero_limit_check(const GammaSeq& seq, std::size_t k_max);

/// p(x) = Σ_k C(x,k) Q_k^{(k)}, so p(n) = γ_n for an operator of finite
/// order. Throws std::domain_error when some Q_k^{(k)} is not constant.
Polynomial interpolation_poly(const HermiteDiffOp& op);

/// C(x, k) = x(x-1)...(x-k+1)/k! as a polynomial.
Polynomial binomial_polynomial(std::size_t k);

}  // namespace hermdiag
