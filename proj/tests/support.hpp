#pragma once

#include "hermdiag/polynomial.hpp"
#include "hermdiag/rational.hpp"

#include <random>

namespace hermdiag::test {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline Rational random_rational(std::mt19937& rng, long span = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Exact degree d (nonzero leading coefficient).
inline Polynomial random_poly(std::mt19937& rng, std::size_t d, long span = 9, long max_den = 5) {
  std::vector<Rational> c(d + 1);
  for (auto& v : c) v = random_rational(rng, span, max_den);
  while (c[d] == 0) c[d] = random_rational(rng, span, max_den);
  return Polynomial(std::move(c));
}

/// x - r
inline Polynomial linear_factor(const Rational& r) { return Polynomial{Rational(-r), Rational(1)}; }

}  // namespace hermdiag::test
