#pragma once

#include "hermdiag/execution.hpp"
#include "hermdiag/hermite.hpp"
#include "hermdiag/polynomial.hpp"
#include "hermdiag/report.hpp"
#include "hermdiag/sequence.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hermdiag {

/// A real-rooted polynomial whose image under the diagonal map is not.
struct Witness {
  Polynomial input;
  Polynomial output;
  std::string family;
};

struct Verdict {
  enum class Status { is_ms, not_ms, falsified, inconclusive };
  Status status = Status::inconclusive;
  std::string reason;
  std::optional<Witness> witness;
  /// Search budget (degree) behind an inconclusive falsifier verdict.
  std::optional<std::size_t> bound;
};

const char* to_string(Verdict::Status status);

/// Hermite multiplier sequence iff σ ≥ 1. Series specs are inconclusive.
Verdict is_hermite_ms(const LPPlusSpec& phi);

/// Classical multiplier sequence iff the generating function is in L-P⁺.
/// Every factored spec and both built-in series qualify by construction.
Verdict is_classical_ms(const LPPlusSpec& phi);
/// Factored or series sources as above; the k + a closed form is affirmative
/// for a ≥ 0; explicit lists are inconclusive.
Verdict is_classical_ms(const GammaSeq& seq);

struct RealityRow {
  std::size_t k = 0;
  bool real_rooted = true;
  long degree = -1;
  /// Distinct real roots vs degree of the squarefree part.
  std::size_t distinct_real_roots = 0;
  std::size_t squarefree_degree = 0;
};

struct RealityTable {
  Rational alpha;
  std::size_t p = 0;
  std::vector<RealityRow> rows;

  /// Smallest k whose Q_{k,p} has a non-real zero.
  std::optional<std::size_t> first_non_real() const;
};

RealityRow reality_row(const Polynomial& q, std::size_t k);

/// Row k carries the real-rootedness of Q_{k,p}. The sequence is first
/// reduced to its nonnegative sign representative; mixed patterns throw
/// std::invalid_argument. Requires α > 0.
RealityTable q_reality_table(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k_max, std::size_t p = 0,
                             Execution exec = Execution::parallel);

/// Whenever Q_{k,p} is real-rooted, g_{k,p}*² + 2 g_{k,p}* g_{k-1,p}* ≥ 0
/// (2 ≤ k ≤ k_max). A failure would contradict the necessary condition.
CheckReport turanish_check(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k_max, std::size_t p = 0);

struct RatioLimitReport {
  CheckReport check;
  Rational limit;
  /// First K0 with every defined ratio in [K0, K0 + window] within tol.
  std::optional<std::size_t> k0;
};

inline constexpr std::size_t kRatioLimitCap = 200;

/// Searches K0 ≤ cap such that the ratios g_k*/g_{k-1}* for k in
/// [K0, K0 + window] lie within tol of σ - 1. Throws std::invalid_argument
/// for σ = 1.
RatioLimitReport ratio_limit_check(const FactoredSpec& phi, std::size_t window, const Rational& tol,
                                   std::size_t cap = kRatioLimitCap);

struct Basis {
  enum class Kind { standard, hermite, laguerre };
  Kind kind = Kind::standard;
  Rational alpha = 0;

  static Basis standard() { return {Kind::standard, 0}; }
  static Basis hermite(const Rational& alpha) { return {Kind::hermite, alpha}; }
  static Basis laguerre(const Rational& alpha) { return {Kind::laguerre, alpha}; }

  std::string name() const;
  /// b_0 .. b_n.
  std::vector<Polynomial> elements(std::size_t n) const;
};

/// Expands f in the basis, multiplies coefficient k by γ_k, reconstructs.
Polynomial apply_diagonal(const GammaSeq& seq, const Basis& basis, const Polynomial& f);

struct CorpusItem {
  std::string family;
  Polynomial poly;
};

/// Deterministic real-rooted test inputs of exact degree n: powers (x+c)^n,
/// symmetric pairs x^{n-2}(x-c)(x+c), seeded random products of rational
/// linear factors, and shifted basis elements b_n(x+c).
std::vector<CorpusItem> falsifier_corpus(const Basis& basis, std::size_t n);

/// Degree by degree up to deg_max, maps every corpus item through the
/// diagonal map and returns the first non-real-rooted image as a witness.
/// Without one the verdict is inconclusive(deg_max).
Verdict ms_falsifier(const GammaSeq& seq, const Basis& basis, std::size_t deg_max,
                     Execution exec = Execution::parallel);

/// Re-derives the witness image by a route other than basis expansion
/// (Hermite: the Q_k operator; standard: coefficientwise; Laguerre k + a:
/// the explicit second-order operator) and re-tests both zero conditions.
bool recheck_witness(const GammaSeq& seq, const Basis& basis, const Witness& witness);

/// Q_2 and Q_4 of {r^k/k!} at one r.
struct GeomFactorialRow {
  Rational r;
  Polynomial q2;
  Polynomial q4;
  bool q2_real = true;
  bool q4_real = true;
};

GeomFactorialRow geom_factorial_row(const Rational& r, const HermiteParam& alpha);

/// Maximal runs of grid points r = i/steps in [0, 1] sharing a reality
/// pattern, reported as closed intervals of grid points.
struct GeomFactorialRegion {
  Rational from;
  Rational to;
  bool q2_real;
  bool q4_real;
};

std::vector<GeomFactorialRegion> geom_factorial_regions(std::size_t steps, const HermiteParam& alpha,
                                                        Execution exec = Execution::parallel);

}  // namespace hermdiag
