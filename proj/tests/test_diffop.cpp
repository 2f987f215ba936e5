#include "support.hpp"

#include "hermdiag/diffop.hpp"
#include "hermdiag/jensen.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hermdiag;
using hermdiag::test::q;

namespace {

const Polynomial x = Polynomial::identity();

Polynomial c(const Rational& v) { return Polynomial::constant(v); }

std::vector<GammaSeq> test_sequences() {
  return {sequences::const1(), sequences::linear(q(3)), sequences::example311(), sequences::bessel_j0()};
}

}  // namespace

TEST_SUITE("diffop") {
  TEST_CASE("coefficient_polynomial examples") {
    for (const auto& a : {q(0), q(1, 2), q(3)}) {
      const HermiteParam alpha(a);
      CHECK(coefficient_polynomial(alpha, sequences::const1(), 0) == c(q(1)));
      CHECK(coefficient_polynomial(alpha, sequences::const1(), 2).is_zero());
      for (const auto& shift : {q(-1), q(0), q(5, 2)}) {
        const GammaSeq lin = sequences::linear(shift);
        CHECK(coefficient_polynomial(alpha, lin, 0) == c(shift));
        CHECK(coefficient_polynomial(alpha, lin, 1) == x);
        CHECK(coefficient_polynomial(alpha, lin, 2) == c(-a));
        CHECK(coefficient_polynomial(alpha, lin, 3).is_zero());
      }
      // Bessel Q_3 = x(2x^2 + 3 alpha)/18.
      CHECK(coefficient_polynomial(alpha, sequences::bessel_j0(), 3) == x * (x * x * 2 + c(3 * a)) * q(1, 18));
    }
  }

  TEST_CASE("standard_coefficient examples") {
    CHECK(standard_coefficient(sequences::const1(), 0) == c(q(1)));
    for (std::size_t k = 1; k <= 5; ++k) CHECK(standard_coefficient(sequences::const1(), k).is_zero());
    CHECK(standard_coefficient(sequences::linear(q(0)), 1) == x);
    CHECK(standard_coefficient(sequences::example311(), 2) == Polynomial::monomial(q(1, 8), 2));
  }

  TEST_CASE("apply_operator examples") {
    const HermiteDiffOp identity{HermiteParam(q(1)), 0, {c(q(1))}};
    const Polynomial f = Polynomial{q(2), q(-1), q(0), q(5)};
    CHECK_THROWS_AS(apply_operator(identity, f), TruncationError);
    const HermiteDiffOp padded{HermiteParam(q(1)), 0, {c(q(1)), {}, {}, {}}};
    CHECK(apply_operator(padded, f) == f);

    const HermiteParam a1(q(1));
    for (const auto& a : {q(-1), q(0), q(2)}) {
      const auto op = build_operator(a1, sequences::linear(a), 2);
      const Polynomial h2 = x * x - c(q(1));
      CHECK(apply_operator(op, h2) == h2 * (2 + a));
    }
    const auto bessel = build_operator(a1, sequences::bessel_j0(), 5);
    const Polynomial h5 = hermite_poly(5, a1);
    CHECK(apply_operator(bessel, h5) == h5 * q(1, 120));
  }

  TEST_CASE("verify_diagonal_action examples") {
    CHECK(verify_diagonal_action(HermiteParam(q(1)), sequences::const1(), 12).passed);
    CHECK(verify_diagonal_action(HermiteParam(q(1)), sequences::example311(), 12).passed);
    const auto r = verify_diagonal_action(HermiteParam(q(1, 2)), sequences::bessel_j0(), 12);
    CHECK_MESSAGE(r.passed, r.failure.value_or(""));
    CHECK(r.cases == 13);
  }

  TEST_CASE("solve_operator_from_action examples") {
    const HermiteParam a1(q(1));
    const auto id = solve_operator_from_action(a1, sequences::const1(), 6);
    REQUIRE(id.Q.size() == 7);
    CHECK(id.Q[0] == c(q(1)));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(id.Q[k].is_zero());

    const Rational a = q(7, 3);
    const auto lin = solve_operator_from_action(HermiteParam(a), sequences::linear(q(4)), 5);
    CHECK(lin.Q[0] == c(q(4)));
    CHECK(lin.Q[1] == x);
    CHECK(lin.Q[2] == c(-a));
    for (std::size_t k = 3; k <= 5; ++k) CHECK(lin.Q[k].is_zero());

    const auto bessel = solve_operator_from_action(a1, sequences::bessel_j0(), 3);
    CHECK(bessel.Q[3] == x * (x * x * 2 + c(q(3))) * q(1, 18));
  }

  TEST_CASE("alpha_zero_limit_check examples") {
    CHECK(alpha_zero_limit_check(sequences::const1(), 8).passed);
    CHECK(coefficient_polynomial(HermiteParam(q(0)), sequences::bessel_j0(), 3) == Polynomial::monomial(q(1, 9), 3));
    const auto r = alpha_zero_limit_check(sequences::example311(), 8);
    CHECK_MESSAGE(r.passed, r.failure.value_or(""));
    CHECK(alpha_zero_limit_check(sequences::bessel_j0(), 8).passed);
  }

  TEST_CASE("interpolation_poly examples") {
    const HermiteParam a1(q(1));
    for (const auto& a : {q(-2), q(0), q(1, 2), q(3)}) {
      CHECK(interpolation_poly(build_operator(a1, sequences::linear(a), 4)) == x + c(a));
    }
    CHECK(interpolation_poly(build_operator(a1, sequences::const1(), 3)) == c(q(1)));
    const auto op = solve_operator_from_action(a1, sequences::falling2(), 4);
    const Polynomial p = interpolation_poly(op);
    CHECK(p == x * (x - c(q(1))));
    for (long n = 0; n <= 10; ++n) CHECK(p.eval(Rational(n)) == sequences::falling2()[static_cast<std::size_t>(n)]);

    const HermiteDiffOp bad{a1, 0, {c(q(1)), x * x}};
    CHECK_THROWS_AS(interpolation_poly(bad), std::domain_error);
  }

  TEST_CASE("binomial_polynomial") {
    CHECK(binomial_polynomial(0) == c(q(1)));
    CHECK(binomial_polynomial(1) == x);
    for (std::size_t k = 0; k <= 6; ++k) {
      const Polynomial b = binomial_polynomial(k);
      for (long n = 0; n <= 12; ++n) CHECK(b.eval(Rational(n)) == binomial(static_cast<std::size_t>(n), k));
    }
  }

  TEST_CASE("property: representation equivalence") {
    for (const auto& a : {q(1, 2), q(1), q(2)}) {
      const HermiteParam alpha(a);
      for (const auto& seq : test_sequences()) {
        const auto oracle = solve_operator_from_action(alpha, seq, 10);
        const auto built = build_operator(alpha, seq, 10);
        REQUIRE(built.Q.size() == 11);
        for (std::size_t k = 0; k <= 10; ++k) CHECK(built.Q[k] == oracle.Q[k]);
      }
    }
  }

  TEST_CASE("property: shifted operator equals operator of the shifted sequence") {
    const HermiteParam alpha(q(3, 2));
    for (const auto& seq : test_sequences()) {
      for (std::size_t p = 0; p <= 3; ++p) {
        const GammaSeq shifted = GammaSeq::closed_form(
            {seq.name() + "+shift", std::nullopt, std::nullopt}, [seq, p](std::size_t k) -> Rational { return seq[k + p]; });
        const auto oracle = solve_operator_from_action(alpha, shifted, 8);
        for (std::size_t k = 0; k <= 8; ++k) CHECK(coefficient_polynomial(alpha, seq, k, p) == oracle.Q[k]);
      }
    }
  }

  TEST_CASE("property: parity and leading coefficient") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> head(16);
      for (auto& v : head) v = test::random_rational(rng, 9, 4);
      const GammaSeq seq = GammaSeq::explicit_list(head);
      const HermiteParam alpha(make_rational(1 + trial % 4, 1 + trial % 3));
      const std::size_t p = trial % 3;
      for (std::size_t k = 0; k <= 10; ++k) {
        const Polynomial Q = coefficient_polynomial(alpha, seq, k, p);
        CHECK(Q.degree() <= static_cast<long>(k));
        for (std::size_t i = 0; i < Q.coeffs().size(); ++i) {
          if ((k - i) % 2 == 1) CHECK(Q.coeff(i) == 0);
        }
        CHECK(Q.coeff(k) == gstar_shifted(seq, k, p) / factorial(k));
      }
    }
  }

  TEST_CASE("property: truncation exactness") {
    std::mt19937 rng(29);
    const HermiteParam alpha(q(2, 3));
    const GammaSeq seq = sequences::bessel_j0();
    const auto big = build_operator(alpha, seq, 12);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = trial % 8;
      const Polynomial f = test::random_poly(rng, d);
      for (std::size_t K = d; K <= 12; ++K) {
        const HermiteDiffOp op{alpha, 0, std::vector<Polynomial>(big.Q.begin(), big.Q.begin() + static_cast<long>(K) + 1)};
        CHECK(apply_operator(op, f) == apply_operator(big, f));
      }
      if (d > 0) {
        const HermiteDiffOp short_op{alpha, 0, std::vector<Polynomial>(big.Q.begin(), big.Q.begin() + static_cast<long>(d))};
        CHECK_THROWS_AS(apply_operator(short_op, f), TruncationError);
      }
    }
  }

  TEST_CASE("property: interpolation for polynomial sequences") {
    std::mt19937 rng(31);
    const HermiteParam alpha(q(1));
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = trial % 5;
      const Polynomial target = test::random_poly(rng, d);
      const GammaSeq seq = GammaSeq::closed_form(
          {"poly", std::nullopt, std::nullopt},
          [target](std::size_t k) -> Rational { return target.eval(Rational(static_cast<unsigned long>(k))); });
      const auto op = solve_operator_from_action(alpha, seq, d + 2);
      const Polynomial p = interpolation_poly(op);
      CHECK(p == target);
      for (std::size_t n = 0; n <= d + 7; ++n) CHECK(p.eval(Rational(static_cast<unsigned long>(n))) == seq[n]);
    }
  }
}
