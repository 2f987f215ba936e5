#include "support.hpp"

#include "hermdiag/hermite.hpp"
#include "hermdiag/jensen.hpp"
#include "hermdiag/polynomial.hpp"
#include "hermdiag/rational.hpp"
#include "hermdiag/sequence.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace hermdiag;
using hermdiag::test::linear_factor;
using hermdiag::test::q;

namespace {

const Polynomial x = Polynomial::identity();

// Distinct real roots of a polynomial of degree 1..3 from discriminant signs.
std::size_t discriminant_root_count(const Polynomial& p) {
  switch (p.degree()) {
    case 1:
      return 1;
    case 2: {
      const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
      const int s = sgn(Rational(b * b - 4 * a * c));
      return s > 0 ? 2 : (s == 0 ? 1 : 0);
    }
    case 3: {
      const Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
      const Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                            27 * a * a * d * d;
      if (disc > 0) return 3;
      if (disc < 0) return 1;
      return b * b == 3 * a * c ? 1 : 2;
    }
    default:
      throw std::logic_error("oracle covers degrees 1..3");
  }
}

}  // namespace

TEST_SUITE("polycore") {
  TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(parse_rational("-10/4") == q(-5, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(q(-6, 4)) == "-3/2");
    CHECK(to_display_string(q(1, 3)) == "0.333333333333");
    CHECK(to_display_string(q(-13, 2)) == "-6.5");
  }

  TEST_CASE("make_rational canonicalizes") {
    const Rational r = make_rational(2, -4);
    CHECK(r.get_num() == -1);
    CHECK(r.get_den() == 2);
    CHECK(make_rational(0, -7).get_den() == 1);
  }

  TEST_CASE("binomials and factorials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    BinomialTable table;
    CHECK(table(40, 20) == binomial(40, 20));
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(power(q(-1, 2), 3) == q(-1, 8));
  }

  TEST_CASE("representation is normalized") {
    const Polynomial p{q(1), q(0), q(0)};
    CHECK(p.degree() == 0);
    CHECK(Polynomial({q(0), q(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK_THROWS(Polynomial().leading());
    CHECK(p.coeff(7) == 0);
  }

  TEST_CASE("poly_add examples") {
    CHECK((x + Polynomial::constant(q(1))) + (-x) == Polynomial::constant(q(1)));
    const Polynomial p{q(2), q(-1, 3), q(5)};
    CHECK(p + Polynomial() == p);
    const Rational alpha = 3;
    CHECK((x * x - Polynomial::constant(alpha)) + Polynomial::constant(alpha) == x * x);
    CHECK(((x * x - Polynomial::constant(alpha)) + Polynomial::constant(alpha)).degree() == 2);
  }

  TEST_CASE("poly_mul examples") {
    const Polynomial one = Polynomial::constant(q(1));
    CHECK((x + one) * (x - one) == x * x - one);
    const Polynomial p{q(2), q(-1, 3), q(5)};
    CHECK(p * one == p);
    CHECK((p * Polynomial()).is_zero());
    const HermiteParam a1(q(1));
    const Polynomial h1 = hermite_poly(1, a1);
    CHECK(h1 * h1 == x * x);
    CHECK(x * x == hermite_poly(2, a1) + hermite_poly(0, a1));
    CHECK(from_hermite_basis(hermite_product_expand(1, 1, a1)) == h1 * h1);
  }

  TEST_CASE("poly_derivative examples") {
    const Polynomial x3 = Polynomial::monomial(q(1), 3);
    CHECK(x3.derivative() == Polynomial::monomial(q(3), 2));
    CHECK(x3.derivative(4).is_zero());
    CHECK(x3.derivative(0) == x3);
    const HermiteParam a1(q(1));
    CHECK(hermite_poly(3, a1).derivative() == Polynomial{q(-3), q(0), q(3)});
    CHECK(hermite_poly(3, a1).derivative() == hermite_poly(2, a1) * q(3));
  }

  TEST_CASE("poly_eval examples") {
    CHECK((x * x - Polynomial::constant(q(1))).eval(q(1)) == 0);
    CHECK(Polynomial().eval(q(17, 3)) == 0);
    CHECK(jensen_reversed(sequences::bessel_j0(), 2).eval(q(-1)) == q(-1, 2));
    CHECK(Polynomial{q(1), q(2), q(3)}(q(1, 2)) == q(11, 4));
  }

  TEST_CASE("argument transforms") {
    const Polynomial p{q(1), q(2), q(3)};
    CHECK(p.scale_argument(q(2)) == Polynomial{q(1), q(4), q(12)});
    CHECK(p.shift_argument(q(1)) == Polynomial{q(6), q(8), q(3)});
    CHECK(p.reflect() == Polynomial{q(1), q(-2), q(3)});
    CHECK(p.monic().leading() == 1);
  }

  TEST_CASE("division and gcd") {
    const Polynomial a = linear_factor(q(1)) * linear_factor(q(-2));
    const Polynomial b = linear_factor(q(1)) * linear_factor(q(3));
    CHECK(gcd(a, b) == linear_factor(q(1)));
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(a, Polynomial()) == a.monic());
    CHECK_THROWS_AS(divide(a, Polynomial()), std::domain_error);
    const auto dr = divide(x * x * x + Polynomial::constant(q(2)), x - Polynomial::constant(q(1)));
    CHECK(dr.quotient == Polynomial{q(1), q(1), q(1)});
    CHECK(dr.remainder == Polynomial::constant(q(3)));
  }

  TEST_CASE("squarefree_part examples") {
    const Polynomial p = linear_factor(q(1)) * linear_factor(q(1)) * linear_factor(q(-2));
    CHECK(squarefree_part(p) == (linear_factor(q(1)) * linear_factor(q(-2))));
    const Polynomial x2p1{q(1), q(0), q(1)};
    CHECK(squarefree_part(x2p1) == x2p1);
    const Polynomial one_plus_x{q(1), q(1)};
    CHECK(squarefree_part(one_plus_x * one_plus_x) == one_plus_x);
    CHECK(squarefree_part(Polynomial{q(3), q(6)} * q(7)) == Polynomial{q(1, 2), q(1)});
    CHECK_THROWS_AS(squarefree_part(Polynomial()), std::domain_error);
  }

  TEST_CASE("count_real_roots examples") {
    CHECK(count_real_roots(Polynomial{q(1), q(0), q(1)}) == 0);
    CHECK(count_real_roots(x * linear_factor(q(1)) * linear_factor(q(-1))) == 3);
    CHECK(count_real_roots(Polynomial{q(0), q(3), q(0), q(2)}) == 1);  // x(2x^2 + 3)
    CHECK(count_real_roots(Polynomial::constant(q(5))) == 0);
    CHECK(count_real_roots(linear_factor(q(2)) * linear_factor(q(2)) * linear_factor(q(2))) == 1);
    CHECK_THROWS_AS(count_real_roots(Polynomial()), std::domain_error);
  }

  TEST_CASE("is_real_rooted examples") {
    CHECK(is_real_rooted(Polynomial{q(-6), q(0), q(1)}));
    CHECK_FALSE(is_real_rooted(Polynomial{q(0), q(3), q(0), q(2)}));
    CHECK(is_real_rooted(Polynomial()));
    CHECK(is_real_rooted(Polynomial::constant(q(-4))));
    const Polynomial one_plus_x{q(1), q(1)};
    CHECK(is_real_rooted(one_plus_x * one_plus_x));
  }

  TEST_CASE("primitive integer image") {
    const auto img = primitive_integer_image(Polynomial{q(-1, 2), q(0), q(-3, 4)});
    REQUIRE(img.size() == 3);
    CHECK(img[0] == 2);
    CHECK(img[1] == 0);
    CHECK(img[2] == 3);
  }

  TEST_CASE("property: degree and evaluation of products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> deg(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial p = test::random_poly(rng, deg(rng));
      const Polynomial r = test::random_poly(rng, deg(rng));
      const Polynomial pr = p * r;
      CHECK(pr.degree() == p.degree() + r.degree());
      for (int i = 0; i < 5; ++i) {
        const Rational t = test::random_rational(rng, 20, 7);
        CHECK(pr.eval(t) == p.eval(t) * r.eval(t));
      }
    }
  }

  TEST_CASE("property: Sturm count agrees with discriminant oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> deg(1, 3);
    std::bernoulli_distribution small(0.5);
    for (int trial = 0; trial < 200; ++trial) {
      // Small integer coefficients hit zero discriminants often.
      const Polynomial p = small(rng) ? test::random_poly(rng, deg(rng), 3, 1) : test::random_poly(rng, deg(rng));
      CAPTURE(p.to_string());
      CHECK(count_real_roots(p) == discriminant_root_count(p));
    }
  }

  TEST_CASE("property: root count bookkeeping on constructed products") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<long> coord(-6, 6);
    std::uniform_int_distribution<long> height(1, 4);
    std::bernoulli_distribution repeat(0.3);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial p = Polynomial::constant(test::random_rational(rng) + 10);
      std::vector<Rational> roots;
      std::vector<std::pair<long, long>> pairs;
      const int n_real = count(rng);
      const int n_pairs = count(rng);
      while (static_cast<int>(roots.size()) < n_real) {
        const Rational r = make_rational(coord(rng), 2);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        roots.push_back(r);
        p = p * linear_factor(r);
        if (repeat(rng)) p = p * linear_factor(r);
      }
      while (static_cast<int>(pairs.size()) < n_pairs) {
        const std::pair<long, long> st{coord(rng), height(rng)};
        if (std::find(pairs.begin(), pairs.end(), st) != pairs.end()) continue;
        pairs.push_back(st);
        // (x - s)^2 + t^2
        const Polynomial quad = linear_factor(Rational(st.first)) * linear_factor(Rational(st.first)) +
                                Polynomial::constant(Rational(st.second * st.second));
        p = p * quad;
        if (repeat(rng)) p = p * quad;
      }
      const Polynomial sf = squarefree_part(p);
      CHECK(sf.degree() == n_real + 2 * n_pairs);
      CHECK(count_real_roots(p) == static_cast<std::size_t>(n_real));
      CHECK(count_real_roots(p) + 2 * pairs.size() == static_cast<std::size_t>(sf.degree()));
      CHECK(is_real_rooted(p) == (n_pairs == 0));
    }
  }

  TEST_CASE("property: real-rootedness invariant under scaling and reflection") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::size_t> deg(0, 6);
    for (int trial = 0; trial < 150; ++trial) {
      const Polynomial p = test::random_poly(rng, deg(rng), 4, 3);
      Rational c = 0;
      while (c == 0) c = test::random_rational(rng);
      const bool base = is_real_rooted(p);
      CHECK(is_real_rooted(p * c) == base);
      CHECK(is_real_rooted(p.reflect()) == base);
      if (!p.is_zero()) CHECK(count_real_roots(p.reflect()) == count_real_roots(p));
    }
  }

  TEST_CASE("property: Sturm handles large coefficients") {
    // (x - 1)(x - 2)...(x - 12) scaled by a huge rational, with a tiny perturbation that keeps all roots real.
    Polynomial p = Polynomial::constant(q(1));
    for (long r = 1; r <= 12; ++r) p = p * linear_factor(q(r));
    CHECK(count_real_roots(p * q(1, 1000003)) == 12);
    CHECK(count_real_roots(p + Polynomial::constant(q(1, 1000000))) == 12);
    CHECK_FALSE(is_real_rooted(p * p + Polynomial::constant(q(1, 1000000))));
  }
}
