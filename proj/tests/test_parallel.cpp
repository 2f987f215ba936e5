#include "support.hpp"

#include "hermdiag/classify.hpp"
#include "hermdiag/diffop.hpp"
#include "hermdiag/execution.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <thread>

using namespace hermdiag;
using hermdiag::test::q;

namespace {

bool same_rows(const RealityTable& a, const RealityTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.k != y.k || x.real_rooted != y.real_rooted || x.degree != y.degree ||
        x.distinct_real_roots != y.distinct_real_roots || x.squarefree_degree != y.squarefree_degree)
      return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("build_operator serial and parallel agree") {
    for (const auto& a : {q(1, 2), q(2)}) {
      for (const auto& seq : {sequences::bessel_j0(), sequences::example311(), sequences::exp_half_cosh()}) {
        const auto s = build_operator(HermiteParam(a), seq, 16, 1, Execution::serial);
        const auto p = build_operator(HermiteParam(a), seq, 16, 1, Execution::parallel);
        CHECK(s.Q == p.Q);
      }
    }
  }

  TEST_CASE("q_reality_table serial and parallel agree") {
    const HermiteParam alpha(q(1));
    for (const auto& seq : {sequences::bessel_j0(), sequences::example311(), sequences::linear(q(3))}) {
      CHECK(same_rows(q_reality_table(alpha, seq, 14, 0, Execution::serial),
                      q_reality_table(alpha, seq, 14, 0, Execution::parallel)));
    }
  }

  TEST_CASE("ms_falsifier serial and parallel agree") {
    const std::vector<std::pair<GammaSeq, Basis>> cases = {
        {sequences::linear(q(-1)), Basis::hermite(q(1))},
        {sequences::linear(q(3)), Basis::laguerre(q(1))},
        {sequences::const1(), Basis::hermite(q(1))},
    };
    for (const auto& [seq, basis] : cases) {
      const auto s = ms_falsifier(seq, basis, 5, Execution::serial);
      const auto p = ms_falsifier(seq, basis, 5, Execution::parallel);
      CHECK(s.status == p.status);
      CHECK(s.witness.has_value() == p.witness.has_value());
      if (s.witness && p.witness) {
        CHECK(s.witness->input == p.witness->input);
        CHECK(s.witness->output == p.witness->output);
        CHECK(s.witness->family == p.witness->family);
      }
    }
  }

  TEST_CASE("verify_diagonal_action serial and parallel agree") {
    const auto s = verify_diagonal_action(HermiteParam(q(1)), sequences::bessel_j0(), 12, Execution::serial);
    const auto p = verify_diagonal_action(HermiteParam(q(1)), sequences::bessel_j0(), 12, Execution::parallel);
    CHECK(s.passed == p.passed);
    CHECK(s.cases == p.cases);
  }

  TEST_CASE("geom-factorial regions serial and parallel agree") {
    const auto s = geom_factorial_regions(40, HermiteParam(q(1)), Execution::serial);
    const auto p = geom_factorial_regions(40, HermiteParam(q(1)), Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].from == p[i].from);
      CHECK(s[i].to == p[i].to);
      CHECK(s[i].q2_real == p[i].q2_real);
      CHECK(s[i].q4_real == p[i].q4_real);
    }
  }

  TEST_CASE("shared sequence cache under concurrent reads") {
    const GammaSeq seq = sequences::exp_half_cosh();
    const GammaSeq reference = sequences::exp_half_cosh();
    std::vector<std::thread> threads;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&seq, &reference, &mismatches, t] {
        for (std::size_t k = 0; k < 60; ++k) {
          const std::size_t idx = (t % 2 == 0) ? k : 59 - k;
          if (seq[idx] != reference[idx]) ++mismatches;
        }
      });
    }
    for (auto& th : threads) th.join();
    CHECK(mismatches == 0);
  }

  TEST_CASE("for_each_index") {
    std::vector<int> hits(50, 0);
    for_each_index(hits.size(), Execution::parallel, [&hits](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(for_each_index(10, Execution::parallel,
                                   [](std::size_t i) {
                                     if (i == 7) throw std::runtime_error("row 7");
                                   }),
                    std::runtime_error);
    CHECK_THROWS_AS(for_each_index(10, Execution::serial,
                                   [](std::size_t i) {
                                     if (i == 3) throw std::logic_error("row 3");
                                   }),
                    std::logic_error);
    CHECK(max_threads() >= 1);
  }
}
