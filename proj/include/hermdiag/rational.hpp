#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hermdiag {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator, zero as 0/1) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q" (no decimals). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always renders "p/q", including "n/1" for integers.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering with 12 significant digits. Display only.
std::string to_display_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
Rational make_rational(long num, long den);

Rational factorial(std::size_t n);

Rational power(const Rational& base, std::size_t exponent);

/// Binomial coefficient table filled by Pascal's rule, grown on demand.
/// Not thread-safe; use one per thread or call binomial() below.
class BinomialTable {
 public:
  const Integer& operator()(std::size_t n, std::size_t k);

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// C(n, k) from a process-wide memoized Pascal triangle (internally locked).
Integer binomial(std::size_t n, std::size_t k);

}  // namespace hermdiag
