#include "hermdiag/laguerre.hpp"

#include "hermdiag/classify.hpp"
#include "hermdiag/sequence.hpp"

#include <stdexcept>
#include <string>

namespace hermdiag {

LaguerreParam::LaguerreParam(Rational alpha, Rational a) : alpha_(std::move(alpha)), a_(std::move(a)) {
  if (alpha_ <= -1) throw std::invalid_argument("Laguerre parameter must be > -1, got " + alpha_.get_str());
}

Polynomial laguerre_poly(std::size_t n, const Rational& alpha) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational rising = 1;
    for (std::size_t j = k + 1; j <= n; ++j) rising *= alpha + static_cast<unsigned long>(j);
    Rational c = rising / (factorial(n - k) * factorial(k));
    coeffs[k] = (k % 2 == 0) ? c : Rational(-c);
  }
  return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> laguerre_polys_upto(std::size_t n, const Rational& alpha) {
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(laguerre_poly(k, alpha));
  return out;
}

std::vector<Rational> to_laguerre_basis(const Polynomial& p, const Rational& alpha) {
  if (p.is_zero()) return {};
  const auto d = static_cast<std::size_t>(p.degree());
  const auto basis = laguerre_polys_upto(d, alpha);
  std::vector<Rational> residual(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> out(d + 1);
  for (std::size_t k = d + 1; k-- > 0;) {
    if (residual[k] == 0) continue;
    const Rational c = residual[k] / basis[k].leading();
    out[k] = c;
    const auto lk = basis[k].coeffs();
    for (std::size_t i = 0; i < lk.size(); ++i) residual[i] -= c * lk[i];
  }
  return out;
}

Polynomial from_laguerre_basis(const std::vector<Rational>& coeffs, const Rational& alpha) {
  if (coeffs.empty()) return {};
  const auto basis = laguerre_polys_upto(coeffs.size() - 1, alpha);
  Polynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out += basis[k] * coeffs[k];
  }
  return out;
}

std::vector<Polynomial> laguerre_operator_coefficients(const LaguerreParam& params) {
  return {Polynomial::constant(params.a()), Polynomial({-params.alpha() - 1, Rational(1)}),
          Polynomial({Rational(0), Rational(-1)})};
}

Polynomial laguerre_operator_apply(const LaguerreParam& params, const Polynomial& f) {
  const auto q = laguerre_operator_coefficients(params);
  return q[0] * f + q[1] * f.derivative() + q[2] * f.derivative(2);
}

CheckReport verify_laguerre_eigen(const LaguerreParam& params, std::size_t n_max) {
  CheckReport report("Laguerre eigen-identity (alpha=" + params.alpha().get_str() +
                             ", a=" + params.a().get_str() + ")");
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Polynomial ln = laguerre_poly(n, params.alpha());
    const Polynomial residual =
        laguerre_operator_apply(params, ln) - ln * (Rational(static_cast<unsigned long>(n)) + params.a());
    if (!residual.is_zero()) report.fail("n=" + std::to_string(n) + ", residual " + residual.to_string());
    ++report.cases;
  }
  return report;
}

std::vector<LaguerreDemoRow> laguerre_counterexample_demo(const Rational& alpha, const std::vector<Rational>& a_values,
                                                          std::size_t deg_max) {
  std::vector<LaguerreDemoRow> rows;
  for (const auto& a : a_values) {
    const LaguerreParam params(alpha, a);
    LaguerreDemoRow row;
    row.a = a;
    row.inside_bound = a >= 0 && a <= alpha + 1;
    row.coefficients_real_rooted = true;
    for (const auto& q : laguerre_operator_coefficients(params)) row.coefficients_real_rooted &= is_real_rooted(q);
    const Verdict v = ms_falsifier(sequences::linear(a), Basis::laguerre(alpha), deg_max);
    row.status = to_string(v.status);
    if (v.witness) {
      row.witness_input = v.witness->input;
      row.witness_output = v.witness->output;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hermdiag
