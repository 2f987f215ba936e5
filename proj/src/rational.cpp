#include "hermdiag/rational.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>

namespace hermdiag {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (num.size() > 1 && num[0] == '+') num.remove_prefix(1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Rational& value) {
  // mpf keeps the exponent range of huge numerators/denominators.
  mpf_class approx(value, 128);
  long exp10 = 0;
  if (approx == 0) return "0";
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.11Fe", approx.get_mpf_t());
  std::string sci(buf);
  // Prefer plain notation for moderate magnitudes, like %.12g.
  const auto e = sci.find('e');
  exp10 = std::stol(sci.substr(e + 1));
  if (exp10 < -5 || exp10 >= 12) return sci;
  gmp_snprintf(buf, sizeof buf, "%.*Ff", static_cast<int>(11 - exp10), approx.get_mpf_t());
  std::string fixed(buf);
  if (fixed.find('.') != std::string::npos) {
    while (fixed.back() == '0') fixed.pop_back();
    if (fixed.back() == '.') fixed.pop_back();
  }
  return fixed;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value{Integer(num), Integer(den)};
  value.canonicalize();
  return value;
}

Rational factorial(std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

const Integer& BinomialTable::operator()(std::size_t n, std::size_t k) {
  static const Integer zero = 0;
  if (k > n) return zero;
  while (rows_.size() <= n) {
    const std::size_t m = rows_.size();
    std::vector<Integer> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
    rows_.push_back(std::move(row));
  }
  return rows_[n][k];
}

Integer binomial(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static BinomialTable table;
  std::lock_guard lock(mutex);
  return table(n, k);
}

}  // namespace hermdiag
