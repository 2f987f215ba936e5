#pragma once

#include "hermdiag/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hermdiag {

/// c x^m e^{σx} ∏ (1 + x/x_k) with finitely many zeros -x_k < 0.
struct FactoredSpec {
  Rational c = 1;
  std::size_t m = 0;
  Rational sigma = 0;
  std::vector<Rational> zeros;

  /// Throws std::invalid_argument unless c > 0, σ ≥ 0 and all x_k > 0.
  void validate() const;
  /// Elementary symmetric expansion of ∏ (1 + x/x_k), ascending.
  std::vector<Rational> product_coeffs() const;
};

/// An L-P⁺ function known through an exact Taylor-coefficient rule
/// γ_k = k! [x^k] φ.
struct SeriesSpec {
  std::string name;
  std::function<Rational(std::size_t)> gamma;
};

using LPPlusSpec = std::variant<FactoredSpec, SeriesSpec>;

/// J_0(2√x) = Σ x^k / (k!)², so γ_k = 1/k!.
SeriesSpec bessel_j0_spec();
/// e^{x/2} cosh(√(2x)).
SeriesSpec exp_half_cosh_spec();
/// Σ r^k x^k / (k!)², so γ_k = r^k / k!.
SeriesSpec geom_factorial_spec(const Rational& r);

/// γ_k = k! [x^k] φ(x).
Rational taylor_gamma(const LPPlusSpec& phi, std::size_t k);

enum class SignPattern { nonneg, nonpos, alternating_even_start, alternating_odd_start, mixed };

const char* to_string(SignPattern pattern);

/// A real sequence {γ_k}, indexable for every k ≥ 0. Values are memoized in
/// a cache shared between copies and guarded by a mutex, so one GammaSeq may
/// be read from many threads.
class GammaSeq {
 public:
  using Rule = std::function<Rational(std::size_t)>;

  struct ClosedForm {
    std::string name;
    /// Set when the generating function is a known factored L-P⁺ function.
    std::optional<FactoredSpec> generating;
    /// Set for the k + a family.
    std::optional<Rational> linear_shift;
  };
  struct ExplicitList {
    std::vector<Rational> head;
    Rational tail = 0;
  };
  using Source = std::variant<LPPlusSpec, ClosedForm, ExplicitList>;

  static GammaSeq from_spec(LPPlusSpec phi);
  static GammaSeq closed_form(ClosedForm form, Rule rule);
  static GammaSeq explicit_list(std::vector<Rational> head, Rational tail = 0);

  Rational operator[](std::size_t k) const;
  /// γ_0 .. γ_{n-1}
  std::vector<Rational> prefix(std::size_t n) const;

  const std::string& name() const { return name_; }
  const Source& source() const { return source_; }

  /// Pattern of γ_0 .. γ_{up_to}. Zeros are compatible with every pattern.
  SignPattern sign_pattern(std::size_t up_to) const;
  /// The nonnegative representative among {γ}, {-γ}, {(-1)^k γ},
  /// {(-1)^{k+1} γ}, judged on γ_0 .. γ_{up_to}. Throws on a mixed pattern.
  GammaSeq normalized(std::size_t up_to) const;

 private:
  struct Cache;
  GammaSeq(std::string name, Source source, Rule rule);

  std::string name_;
  Source source_;
  Rule rule_;
  std::shared_ptr<Cache> cache_;
};

/// Named sequences addressable from the command line.
namespace sequences {

/// γ_k = 1 (φ = e^x).
GammaSeq const1();
/// γ_k = k + a (φ = (x + a) e^x).
GammaSeq linear(const Rational& a);
/// γ_k = (4(k+1)² - 8(k+1) + 5) / 2^k, φ = e^{x/2}(1+x)².
GammaSeq example311();
GammaSeq bessel_j0();
GammaSeq exp_half_cosh();
GammaSeq geom_factorial(const Rational& r);
/// γ_k = k(k-1).
GammaSeq falling2();
GammaSeq factored(const FactoredSpec& spec);

/// Resolves "const1", "linear(a)", "example311", "besselJ0", "exp-half-cosh",
/// "geom-factorial(r)", "falling2". Throws std::invalid_argument.
GammaSeq by_name(const std::string& selector);

std::vector<std::string> registry_names();

}  // namespace sequences

}  // namespace hermdiag
