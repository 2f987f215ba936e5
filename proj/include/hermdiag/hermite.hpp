#pragma once

#include "hermdiag/polynomial.hpp"
#include "hermdiag/rational.hpp"
#include "hermdiag/report.hpp"

#include <cstddef>
#include <vector>

namespace hermdiag {

/// Parameter of the generalized Hermite family. Zero is admitted and
/// denotes the standard-basis limit H_n^{(0)} = x^n.
class HermiteParam {
 public:
  /// Throws std::invalid_argument when alpha < 0.
  explicit HermiteParam(Rational alpha);

  const Rational& value() const { return alpha_; }
  bool is_limit() const { return alpha_ == 0; }

  friend bool operator==(const HermiteParam&, const HermiteParam&) = default;

 private:
  Rational alpha_;
};

/// Coefficients c_k of Σ c_k H_k^{(α)}; no trailing zeros.
class HermiteExpansion {
 public:
  explicit HermiteExpansion(HermiteParam alpha, std::vector<Rational> coeffs = {});

  const HermiteParam& alpha() const { return alpha_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws std::invalid_argument if the parameters differ.
  HermiteExpansion& operator+=(const HermiteExpansion& other);

  friend bool operator==(const HermiteExpansion&, const HermiteExpansion&) = default;

 private:
  HermiteParam alpha_;
  std::vector<Rational> coeffs_;
};

/// H_n^{(α)}(x) = Σ_j n!/2^j (-α)^j / (j!(n-2j)!) x^{n-2j}; monic of degree n.
Polynomial hermite_poly(std::size_t n, const HermiteParam& alpha);

/// H_0 .. H_n in one pass via the three-term recurrence
/// H_{k+1} = x H_k - k α H_{k-1}.
std::vector<Polynomial> hermite_polys_upto(std::size_t n, const HermiteParam& alpha);

/// H_n H_m = Σ_i α^i i! C(m,i) C(n,i) H_{m+n-2i}.
HermiteExpansion hermite_product_expand(std::size_t n, std::size_t m, const HermiteParam& alpha);

/// Back-substitution on the monic triangular change of basis.
HermiteExpansion to_hermite_basis(const Polynomial& p, const HermiteParam& alpha);

Polynomial from_hermite_basis(const HermiteExpansion& e);

/// Classical (physicists') Hermite polynomial, H_{n+1} = 2x H_n - 2n H_{n-1}.
Polynomial classical_hermite_poly(std::size_t n);

/// Checks, for every n ≤ n_max and exactly:
///  - D H_n = n H_{n-1}
///  - n H_n = x D H_n - α D² H_n
///  - classical H_n(x/√(2α)) = (2/α)^{n/2} H_n^{(α)}(x) at α = 1/2 and α = 2
///  - the product formula for n, m ≤ min(n_max, 8)
CheckReport check_hermite_identities(std::size_t n_max, const HermiteParam& alpha);

}  // namespace hermdiag
