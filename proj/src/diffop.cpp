#include "hermdiag/diffop.hpp"

#include "hermdiag/jensen.hpp"

#include <algorithm>
#include <string>

namespace hermdiag {

namespace {

/// One row of the closed form, given g_{0,p}*..g_{k,p}* and H_0..H_k.
Polynomial q_row(const HermiteParam& alpha, const std::vector<Rational>& g, const std::vector<Polynomial>& hermite,
                 std::size_t k) {
  Polynomial q;
  const Rational minus_alpha = -alpha.value();
  Rational alpha_pow = 1;
  for (std::size_t j = 0; 2 * j <= k; ++j) {
    const Rational weight = alpha_pow * g[k - j] / (factorial(j) * factorial(k - 2 * j));
    if (weight != 0) q += hermite[k - 2 * j] * weight;
    alpha_pow *= minus_alpha;
  }
  return q;
}

}  // namespace

Polynomial coefficient_polynomial(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k, std::size_t p) {
  return q_row(alpha, gstar_values(seq, k, p), hermite_polys_upto(k, alpha), k);
}

HermiteDiffOp build_operator(const HermiteParam& alpha, const GammaSeq& seq, std::size_t K, std::size_t p,
                             Execution exec) {
  const auto g = gstar_values(seq, K, p);
  const auto hermite = hermite_polys_upto(K, alpha);
  HermiteDiffOp op{alpha, p, std::vector<Polynomial>(K + 1)};
  for_each_index(K + 1, exec, [&](std::size_t k) { op.Q[k] = q_row(alpha, g, hermite, k); });
  return op;
}

Polynomial standard_coefficient(const GammaSeq& seq, std::size_t k) {
  return Polynomial::monomial(gstar_shifted(seq, k, 0) / factorial(k), k);
}

Polynomial apply_operator(const HermiteDiffOp& op, const Polynomial& f) {
  if (f.degree() > static_cast<long>(op.order())) {
    throw TruncationError("operator truncated at order " + std::to_string(op.order()) +
                          " applied to a polynomial of degree " + std::to_string(f.degree()));
  }
  Polynomial out;
  Polynomial deriv = f;
  for (std::size_t k = 0; k < op.Q.size() && !deriv.is_zero(); ++k) {
    out += op.Q[k] * deriv;
    deriv = deriv.derivative();
  }
  return out;
}

HermiteDiffOp solve_operator_from_action(const HermiteParam& alpha, const GammaSeq& seq, std::size_t K) {
  HermiteDiffOp op{alpha, 0, {}};
  op.Q.reserve(K + 1);
  for (std::size_t n = 0; n <= K; ++n) {
    const Polynomial hn = hermite_poly(n, alpha);
    Polynomial rhs = hn * seq[n];
    Polynomial deriv = hn;
    for (std::size_t k = 0; k < n; ++k) {
      rhs -= op.Q[k] * deriv;
      deriv = deriv.derivative();
    }
    // deriv is now H_n^{(n)} = n!.
    op.Q.push_back(rhs * (Rational(1) / factorial(n)));
  }
  return op;
}

CheckReport verify_diagonal_action(const HermiteParam& alpha, const GammaSeq& seq, std::size_t n_max,
                                   Execution exec) {
  CheckReport report("diagonal action (" + seq.name() + ", alpha=" + alpha.value().get_str() + ")");
  const HermiteDiffOp full = build_operator(alpha, seq, n_max, 0, exec);
  const auto hermite = hermite_polys_upto(n_max, alpha);
  std::vector<Polynomial> residuals(n_max + 1);
  for_each_index(n_max + 1, exec, [&](std::size_t n) {
    HermiteDiffOp op{alpha, 0, {full.Q.begin(), full.Q.begin() + static_cast<std::ptrdiff_t>(n + 1)}};
    residuals[n] = apply_operator(op, hermite[n]) - hermite[n] * seq[n];
  });
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!residuals[n].is_zero()) report.fail("n=" + std::to_string(n) + ", residual " + residuals[n].to_string());
    ++report.cases;
  }
  return report;
}

namespace {

Rational lagrange_eval(const std::vector<Rational>& nodes, const std::vector<Rational>& values, std::size_t count,
                       const Rational& t) {
  Rational sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rational basis = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i) basis *= (t - nodes[j]) / (nodes[i] - nodes[j]);
    }
    sum += values[i] * basis;
  }
  return sum;
}

}  // namespace

CheckReport alpha_zero_limit_check(const GammaSeq& seq, std::size_t k_max) {
  CheckReport report("alpha -> 0 limit (" + seq.name() + ")");
  const HermiteParam zero(Rational(0));
  for (std::size_t k = 0; k <= k_max; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    const Polynomial at_zero = coefficient_polynomial(zero, seq, k);
    if (!(at_zero == standard_coefficient(seq, k))) report.fail(tag + ": alpha=0 substitution differs");
    ++report.cases;

    const std::size_t fit = k / 2 + 1;
    const std::size_t samples = std::max<std::size_t>(4, fit + 1);
    std::vector<Rational> nodes;
    std::vector<Polynomial> rows;
    for (std::size_t i = 0; i < samples; ++i) {
      nodes.push_back(Rational(1) / power(Rational(2), i));
      rows.push_back(coefficient_polynomial(HermiteParam(nodes.back()), seq, k));
    }
    for (std::size_t c = 0; c <= k; ++c) {
      std::vector<Rational> values;
      for (const auto& r : rows) values.push_back(r.coeff(c));
      for (std::size_t extra = fit; extra < samples; ++extra) {
        if (lagrange_eval(nodes, values, fit, nodes[extra]) != values[extra]) {
          report.fail(tag + ", x^" + std::to_string(c) + ": coefficient is not a polynomial in alpha of degree <= " +
                      std::to_string(fit - 1));
        }
      }
      if (lagrange_eval(nodes, values, fit, Rational(0)) != at_zero.coeff(c)) {
        report.fail(tag + ", x^" + std::to_string(c) + ": interpolated value at alpha=0 differs");
      }
      ++report.cases;
    }
  }
  return report;
}

Polynomial binomial_polynomial(std::size_t k) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (std::size_t i = 0; i < k; ++i) out = out * Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
  return out * (Rational(1) / factorial(k));
}

Polynomial interpolation_poly(const HermiteDiffOp& op) {
  Polynomial p;
  for (std::size_t k = 0; k < op.Q.size(); ++k) {
    const Polynomial dk = op.Q[k].derivative(k);
    if (dk.degree() > 0) {
      throw std::domain_error("Q_" + std::to_string(k) + " has degree " + std::to_string(op.Q[k].degree()) +
                              " > " + std::to_string(k) + "; its k-th derivative is not constant");
    }
    if (!dk.is_zero()) p += binomial_polynomial(k) * dk.leading();
  }
  return p;
}

}  // namespace hermdiag
