#pragma once

#include "hermdiag/polynomial.hpp"
#include "hermdiag/report.hpp"
#include "hermdiag/sequence.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace hermdiag {

/// g_n*(x) = Σ_k C(n,k) γ_k x^{n-k}.
Polynomial jensen_reversed(const GammaSeq& seq, std::size_t n);

/// g_{k,p}*(-1) = Σ_n C(k,n) γ_{n+p} (-1)^{k-n}. p = 0 gives g_k*(-1).
Rational gstar_shifted(const GammaSeq& seq, std::size_t k, std::size_t p);

/// g_{0,p}*(-1) .. g_{k_max,p}*(-1) in one pass.
std::vector<Rational> gstar_values(const GammaSeq& seq, std::size_t k_max, std::size_t p);

/// k! [x^k] c x^m e^{(σ-1)x} ∏(1 + x/x_k): the g_k*(-1) values read off
/// e^{-x} φ(x), computed without touching γ.
Rational gstar_via_shift(const FactoredSpec& phi, std::size_t k);

struct RatioEntry {
  std::size_t k;
  /// Empty when g_{k-1,p}*(-1) = 0.
  std::optional<Rational> value;
};

/// Entry k (1 ≤ k ≤ k_max) is g_{k,p}*(-1) / g_{k-1,p}*(-1). Label k pairs
/// g_k* over g_{k-1}*, which is the indexing that gives 3/2, 1/6, ... for
/// the e^{x/2}(1+x)² example.
std::vector<RatioEntry> ratio_sequence(const GammaSeq& seq, std::size_t k_max, std::size_t p);

/// g_{k,p}*(-1)² + 2 g_{k,p}*(-1) g_{k-1,p}*(-1); k ≥ 1.
Rational turan_quantity(const GammaSeq& seq, std::size_t k, std::size_t p);

/// γ_n = Σ_k C(n,k) g_k*(-1) for all n ≤ n_max.
CheckReport check_gslem(const GammaSeq& seq, std::size_t n_max);

/// g_{k,p}* + g_{k+1,p}* = g_{k,p+1}* for 2 ≤ k ≤ k_max, 0 ≤ p ≤ p_max.
CheckReport check_shifty(const GammaSeq& seq, std::size_t k_max, std::size_t p_max);

/// Table a_{k,i}; missing entries read as zero.
using IndexTable = std::function<Rational(std::size_t k, std::size_t i)>;

/// Both sides of the double-sum reindexing
///   Σ_{k=2j}^{n} Σ_{i=0}^{min(k-2j, n-k)} a_{k,i}
///   = Σ_{i=0}^{⌊n/2⌋-j} Σ_{k=i+2j}^{n-i} a_{k,i}.
struct IndexIdentitySides {
  Rational lhs;
  Rational rhs;
};

/// Throws std::invalid_argument unless n ≥ 1 and j ≤ ⌊n/2⌋.
IndexIdentitySides index_identity_sides(std::size_t n, std::size_t j, const IndexTable& table);
CheckReport check_index_identity(std::size_t n, std::size_t j, const IndexTable& table);

/// CSV with header `k,num,den,approx`; undefined rows are `k,,,NA`.
void write_ratio_csv(std::ostream& out, const std::vector<RatioEntry>& ratios);

/// Equal-width bin counts over [min, max] of the defined ratios. The last
/// bin is closed. Bin edges are exact rationals.
struct Histogram {
  Rational lo;
  Rational hi;
  std::vector<std::size_t> counts;
};

/// Throws std::invalid_argument for zero bins.
Histogram ratio_histogram(const std::vector<RatioEntry>& ratios, std::size_t bins);

}  // namespace hermdiag
