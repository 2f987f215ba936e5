#pragma once

#include "hermdiag/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hermdiag {

/// Dense univariate polynomial over the rationals, ascending degree.
/// Invariant: no trailing zero coefficients, so the zero polynomial has
/// an empty coefficient list and the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// x
  static Polynomial identity();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  Polynomial derivative(std::size_t order = 1) const;
  /// p(c·x)
  Polynomial scale_argument(const Rational& c) const;
  /// p(x + c)
  Polynomial shift_argument(const Rational& c) const;
  /// p(-x)
  Polynomial reflect() const { return scale_argument(Rational(-1)); }
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd; gcd(0, 0) = 0. Runs the Euclidean loop on primitive integer
/// images so coefficients stay small.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), monic. Throws std::domain_error on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots, from a Sturm chain built with
/// content-stripped pseudo-remainders. Throws std::domain_error on zero.
std::size_t count_real_roots(const Polynomial& p);

/// True when every complex root is real (multiplicities allowed). Zero and
/// nonzero constants count as real-rooted.
bool is_real_rooted(const Polynomial& p);

/// Integer-coefficient primitive polynomial with positive leading
/// coefficient, proportional to p. Exposed for tests.
std::vector<Integer> primitive_integer_image(const Polynomial& p);

}  // namespace hermdiag
