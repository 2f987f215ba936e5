#include "hermdiag/hermite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermdiag {

HermiteParam::HermiteParam(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ < 0) throw std::invalid_argument("Hermite parameter must be >= 0, got " + alpha_.get_str());
}

HermiteExpansion::HermiteExpansion(HermiteParam alpha, std::vector<Rational> coeffs)
    : alpha_(std::move(alpha)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HermiteExpansion& HermiteExpansion::operator+=(const HermiteExpansion& other) {
  if (!(alpha_ == other.alpha_)) {
    throw std::invalid_argument("cannot combine Hermite expansions with different alpha (" + alpha_.value().get_str() +
                                " vs " + other.alpha_.value().get_str() + ")");
  }
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  return *this;
}

Polynomial hermite_poly(std::size_t n, const HermiteParam& alpha) {
  std::vector<Rational> coeffs(n + 1);
  const Rational nf = factorial(n);
  const Rational minus_alpha = -alpha.value();
  Rational alpha_pow = 1;
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    coeffs[n - 2 * j] = nf * alpha_pow / (power(Rational(2), j) * factorial(j) * factorial(n - 2 * j));
    alpha_pow *= minus_alpha;
  }
  return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> hermite_polys_upto(std::size_t n, const HermiteParam& alpha) {
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  out.push_back(Polynomial::constant(Rational(1)));
  if (n == 0) return out;
  out.push_back(Polynomial::identity());
  const Polynomial x = Polynomial::identity();
  for (std::size_t k = 1; k < n; ++k) {
    out.push_back(x * out[k] - out[k - 1] * (alpha.value() * static_cast<unsigned long>(k)));
  }
  return out;
}

HermiteExpansion hermite_product_expand(std::size_t n, std::size_t m, const HermiteParam& alpha) {
  std::vector<Rational> coeffs(n + m + 1);
  for (std::size_t i = 0; i <= std::min(n, m); ++i) {
    coeffs[n + m - 2 * i] =
        power(alpha.value(), i) * factorial(i) * Rational(binomial(m, i)) * Rational(binomial(n, i));
  }
  return HermiteExpansion(alpha, std::move(coeffs));
}

HermiteExpansion to_hermite_basis(const Polynomial& p, const HermiteParam& alpha) {
  if (p.is_zero()) return HermiteExpansion(alpha);
  const auto d = static_cast<std::size_t>(p.degree());
  const auto basis = hermite_polys_upto(d, alpha);
  std::vector<Rational> residual(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> out(d + 1);
  for (std::size_t k = d + 1; k-- > 0;) {
    const Rational c = residual[k];
    out[k] = c;
    if (c == 0) continue;
    const auto hk = basis[k].coeffs();
    for (std::size_t i = 0; i < hk.size(); ++i) residual[i] -= c * hk[i];
  }
  return HermiteExpansion(alpha, std::move(out));
}

Polynomial from_hermite_basis(const HermiteExpansion& e) {
  if (e.is_zero()) return {};
  const auto basis = hermite_polys_upto(e.coeffs().size() - 1, e.alpha());
  Polynomial out;
  for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
    if (e.coeffs()[k] != 0) out += basis[k] * e.coeffs()[k];
  }
  return out;
}

Polynomial classical_hermite_poly(std::size_t n) {
  Polynomial prev = Polynomial::constant(Rational(1));
  if (n == 0) return prev;
  const Polynomial two_x = Polynomial::monomial(Rational(2), 1);
  Polynomial cur = two_x;
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev * Rational(2 * static_cast<long>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// At α = 1/2 and α = 2 both √(2α) and (2/α)^{1/2} are rational.
struct ClassicalInstance {
  Rational alpha;
  Rational sqrt_two_alpha;
  Rational root_two_over_alpha;
};

}  // namespace

CheckReport check_hermite_identities(std::size_t n_max, const HermiteParam& alpha) {
  CheckReport report("hermite identities");
  const auto h = hermite_polys_upto(n_max, alpha);
  const Polynomial x = Polynomial::identity();

  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::string tag = " (alpha=" + alpha.value().get_str() + ", n=" + std::to_string(n) + ")";
    if (!(h[n] == hermite_poly(n, alpha))) report.fail("recurrence vs closed form" + tag);
    if (n >= 1 && !(h[n].derivative() == h[n - 1] * Rational(static_cast<long>(n)))) {
      report.fail("differentiation formula" + tag);
    }
    const Polynomial lhs = h[n] * Rational(static_cast<long>(n));
    const Polynomial rhs = x * h[n].derivative() - h[n].derivative(2) * alpha.value();
    if (!(lhs == rhs)) report.fail("differential equation" + tag);
    report.cases += 3;
  }

  const ClassicalInstance instances[] = {
      {Rational(1, 2), Rational(1), Rational(2)},
      {Rational(2), Rational(2), Rational(1)},
  };
  for (const auto& inst : instances) {
    const HermiteParam a(inst.alpha);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Polynomial lhs = classical_hermite_poly(n).scale_argument(Rational(1) / inst.sqrt_two_alpha);
      const Polynomial rhs = hermite_poly(n, a) * power(inst.root_two_over_alpha, n);
      if (!(lhs == rhs)) {
        report.fail("classical relation (alpha=" + inst.alpha.get_str() + ", n=" + std::to_string(n) + ")");
      }
      ++report.cases;
    }
  }

  const std::size_t prod_max = std::min<std::size_t>(n_max, 8);
  for (std::size_t n = 0; n <= prod_max; ++n) {
    for (std::size_t m = 0; m <= prod_max; ++m) {
      if (!(from_hermite_basis(hermite_product_expand(n, m, alpha)) == h[n] * h[m])) {
        report.fail("product formula (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
      }
      ++report.cases;
    }
  }
  return report;
}

}  // namespace hermdiag
