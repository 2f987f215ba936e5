#include "hermdiag/jensen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hermdiag {

Polynomial jensen_reversed(const GammaSeq& seq, std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rational(binomial(n, k)) * seq[k];
  return Polynomial(std::move(coeffs));
}

Rational gstar_shifted(const GammaSeq& seq, std::size_t k, std::size_t p) {
  Rational sum = 0;
  for (std::size_t n = 0; n <= k; ++n) {
    const Rational term = Rational(binomial(k, n)) * seq[n + p];
    if ((k - n) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<Rational> gstar_values(const GammaSeq& seq, std::size_t k_max, std::size_t p) {
  const auto gamma = seq.prefix(k_max + p + 1);
  BinomialTable binom;
  std::vector<Rational> out(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    Rational sum = 0;
    for (std::size_t n = 0; n <= k; ++n) {
      const Rational term = Rational(binom(k, n)) * gamma[n + p];
      if ((k - n) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out[k] = sum;
  }
  return out;
}

Rational gstar_via_shift(const FactoredSpec& phi, std::size_t k) {
  phi.validate();
  if (k < phi.m) return 0;
  const std::size_t n = k - phi.m;
  const auto a = phi.product_coeffs();
  const Rational shifted = phi.sigma - 1;
  Rational sum = 0;
  for (std::size_t j = 0; j < a.size() && j <= n; ++j) sum += a[j] * power(shifted, n - j) / factorial(n - j);
  return phi.c * factorial(k) * sum;
}

std::vector<RatioEntry> ratio_sequence(const GammaSeq& seq, std::size_t k_max, std::size_t p) {
  const auto g = gstar_values(seq, k_max, p);
  std::vector<RatioEntry> out;
  out.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    RatioEntry entry{k, std::nullopt};
    if (g[k - 1] != 0) entry.value = g[k] / g[k - 1];
    out.push_back(std::move(entry));
  }
  return out;
}

Rational turan_quantity(const GammaSeq& seq, std::size_t k, std::size_t p) {
  if (k == 0) throw std::invalid_argument("turan_quantity needs k >= 1");
  const Rational gk = gstar_shifted(seq, k, p);
  const Rational gk1 = gstar_shifted(seq, k - 1, p);
  return gk * gk + 2 * gk * gk1;
}

CheckReport check_gslem(const GammaSeq& seq, std::size_t n_max) {
  CheckReport report("binomial reconstruction of gamma (" + seq.name() + ")");
  const auto g = gstar_values(seq, n_max, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += Rational(binomial(n, k)) * g[k];
    if (sum != seq[n]) report.fail("n=" + std::to_string(n) + ": " + sum.get_str() + " != " + seq[n].get_str());
    ++report.cases;
  }
  return report;
}

CheckReport check_shifty(const GammaSeq& seq, std::size_t k_max, std::size_t p_max) {
  CheckReport report("shift identity (" + seq.name() + ")");
  for (std::size_t p = 0; p <= p_max; ++p) {
    for (std::size_t k = 2; k <= k_max; ++k) {
      const Rational lhs = gstar_shifted(seq, k, p) + gstar_shifted(seq, k + 1, p);
      const Rational rhs = gstar_shifted(seq, k, p + 1);
      if (lhs != rhs) report.fail("k=" + std::to_string(k) + ", p=" + std::to_string(p));
      ++report.cases;
    }
  }
  return report;
}

IndexIdentitySides index_identity_sides(std::size_t n, std::size_t j, const IndexTable& table) {
  if (n == 0 || j > n / 2) {
    throw std::invalid_argument("index identity needs n >= 1 and j <= floor(n/2) (n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ")");
  }
  IndexIdentitySides sides;
  for (std::size_t k = 2 * j; k <= n; ++k) {
    const std::size_t upper = std::min(k - 2 * j, n - k);
    for (std::size_t i = 0; i <= upper; ++i) sides.lhs += table(k, i);
  }
  for (std::size_t i = 0; i <= n / 2 - j; ++i) {
    for (std::size_t k = i + 2 * j; k <= n - i; ++k) sides.rhs += table(k, i);
  }
  return sides;
}

CheckReport check_index_identity(std::size_t n, std::size_t j, const IndexTable& table) {
  CheckReport report("double-sum reindexing");
  const auto sides = index_identity_sides(n, j, table);
  report.cases = 1;
  if (sides.lhs != sides.rhs) {
    report.fail("n=" + std::to_string(n) + ", j=" + std::to_string(j) + ": " + sides.lhs.get_str() +
                " != " + sides.rhs.get_str());
  }
  return report;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioEntry>& ratios) {
  out << "k,num,den,approx\n";
  for (const auto& r : ratios) {
    if (r.value) {
      out << r.k << ',' << r.value->get_num().get_str() << ',' << r.value->get_den().get_str() << ','
          << to_display_string(*r.value) << '\n';
    } else {
      out << r.k << ",,,NA\n";
    }
  }
}

Histogram ratio_histogram(const std::vector<RatioEntry>& ratios, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h{0, 0, std::vector<std::size_t>(bins, 0)};
  bool any = false;
  for (const auto& r : ratios) {
    if (!r.value) continue;
    if (!any) {
      h.lo = h.hi = *r.value;
      any = true;
    }
    h.lo = std::min(h.lo, *r.value);
    h.hi = std::max(h.hi, *r.value);
  }
  if (!any) return h;
  const Rational width = (h.hi - h.lo) / static_cast<unsigned long>(bins);
  for (const auto& r : ratios) {
    if (!r.value) continue;
    std::size_t idx = 0;
    if (width != 0) {
      const Rational pos = (*r.value - h.lo) / width;
      Integer floor_pos;
      mpz_fdiv_q(floor_pos.get_mpz_t(), pos.get_num_mpz_t(), pos.get_den_mpz_t());
      idx = std::min<std::size_t>(floor_pos.get_ui(), bins - 1);
    }
    ++h.counts[idx];
  }
  return h;
}

}  // namespace hermdiag
