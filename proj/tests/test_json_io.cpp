#include "support.hpp"

#include "hermdiag/json_io.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hermdiag;
using hermdiag::test::q;
using hermdiag::io::json;

TEST_SUITE("json_io") {
  TEST_CASE("rationals") {
    CHECK(io::to_json(q(-6, 4)) == json("-3/2"));
    CHECK(io::to_json(q(5)) == json("5/1"));
    CHECK(io::rational_from_json(json("10/4")) == q(5, 2));
    CHECK(io::rational_from_json(json("-7")) == q(-7));
    CHECK(io::rational_from_json(json(3)) == q(3));
    CHECK_THROWS_AS(io::rational_from_json(json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(io::rational_from_json(json("abc")), std::invalid_argument);
    CHECK_THROWS_AS(io::rational_from_json(json(0.5)), std::invalid_argument);
  }

  TEST_CASE("polynomials") {
    const Polynomial p{q(1, 2), q(0), q(-3)};
    const json j = io::to_json(p);
    CHECK(j.dump() == R"({"coeffs":["1/2","0/1","-3/1"]})");
    CHECK(io::polynomial_from_json(j) == p);
    CHECK(io::to_json(Polynomial()).dump() == R"({"coeffs":[]})");
    CHECK(io::polynomial_from_json(json::parse(R"({"coeffs":["1","2/4",0]})")) == Polynomial{q(1), q(1, 2)});
    CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"c":[]})")), std::invalid_argument);
  }

  TEST_CASE("round trips") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
      const Polynomial p = test::random_poly(rng, trial % 7);
      CHECK(io::polynomial_from_json(json::parse(io::to_json(p).dump())) == p);
      const HermiteParam alpha(make_rational(1 + trial % 4, 3));
      const HermiteExpansion e = to_hermite_basis(p, alpha);
      CHECK(io::expansion_from_json(json::parse(io::to_json(e).dump())) == e);
    }
    const auto op = build_operator(HermiteParam(q(1, 2)), sequences::bessel_j0(), 6, 2);
    const auto back = io::operator_from_json(json::parse(io::to_json(op).dump()));
    CHECK(back.alpha.value() == q(1, 2));
    CHECK(back.p_shift == 2);
    CHECK(back.Q == op.Q);
  }

  TEST_CASE("reality table and verdict") {
    const auto table = q_reality_table(HermiteParam(q(1)), sequences::bessel_j0(), 3);
    const json j = io::to_json(table);
    CHECK(j["alpha"] == "1/1");
    CHECK(j["p"] == 0);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][3]["k"] == 3);
    CHECK(j["rows"][3]["real_rooted"] == false);

    const auto v = ms_falsifier(sequences::linear(q(-1)), Basis::hermite(q(1)), 4);
    const json jv = io::to_json(v);
    CHECK(jv["status"] == "falsified");
    CHECK(io::polynomial_from_json(jv["witness"]["input"]) == v.witness->input);
    CHECK(io::polynomial_from_json(jv["witness"]["output"]) == v.witness->output);
    const json ji = io::to_json(ms_falsifier(sequences::const1(), Basis::standard(), 3));
    CHECK(ji["status"] == "inconclusive");
    CHECK(ji["bound"] == 3);
    CHECK_FALSE(ji.contains("witness"));
  }

  TEST_CASE("laguerre demo") {
    const json j = io::to_json(laguerre_counterexample_demo(q(1), {q(1), q(3)}));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["a"] == "1/1");
    CHECK(j[0]["status"] == "inconclusive");
    CHECK_FALSE(j[0].contains("witness"));
    CHECK(j[1]["status"] == "falsified");
    CHECK(j[1]["witness"].contains("input"));
  }

  TEST_CASE("sequence files") {
    const GammaSeq s = io::sequence_from_json(json::parse(R"({"gammas":["1","1/2","1/3"],"tail":"1/9"})"));
    CHECK(s[0] == 1);
    CHECK(s[2] == q(1, 3));
    CHECK(s[50] == q(1, 9));
    const GammaSeq t = io::sequence_from_json(json::parse(R"({"gammas":[2]})"));
    CHECK(t[1] == 0);
    CHECK_THROWS_AS(io::sequence_from_json(json::parse(R"({"tail":"1"})")), std::invalid_argument);
    CHECK_THROWS_AS(io::sequence_from_json(json::parse(R"([1,2])")), std::invalid_argument);
  }

  TEST_CASE("malformed operator") {
    CHECK_THROWS_AS(io::operator_from_json(json::parse(R"({"alpha":"-1","p_shift":0,"Q":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::operator_from_json(json::parse(R"({"alpha":"1","Q":[]})")), std::invalid_argument);
  }
}
