#include "examples.hpp"

#include "hermdiag/classify.hpp"
#include "hermdiag/diffop.hpp"
#include "hermdiag/jensen.hpp"
#include "hermdiag/laguerre.hpp"
#include "hermdiag/sequence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hermdiag::cli {

namespace {

void check(ExampleReport& report, std::string label, bool passed, std::string detail = {}) {
  report.checks.push_back({std::move(label), passed, std::move(detail)});
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out;
}

const char* realness(bool real) { return real ? "real" : "non-real"; }

std::string linear_label(const Rational& shift) {
  return shift < 0 ? "k-" + Rational(-shift).get_str() : "k+" + shift.get_str();
}

ExampleReport table1(Execution) {
  ExampleReport report{"table1", "ratios of g_k*(-1) for e^{x/2}(1+x)^2", {}, {}, {}};
  const std::vector<Rational> printed = {make_rational(3, 2),    make_rational(1, 6),    make_rational(-13, 2),
                                         make_rational(-33, 26), make_rational(-61, 66), make_rational(-97, 122),
                                         make_rational(-141, 194)};
  const auto ratios = ratio_sequence(sequences::example311(), printed.size(), 0);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& value = ratios[i].value;
    check(report, "k=" + std::to_string(ratios[i].k), value && *value == printed[i],
          value ? value->get_str() : std::string("undefined"));
  }
  report.errata.push_back(
      "column header reads g_{k+1}*/g_k*, but the printed values are g_k*/g_{k-1}* (k=1 gives g_1*/g_0* = 3/2)");

  const FactoredSpec phi{1, 0, make_rational(1, 2), {1, 1}};
  const auto limit = ratio_limit_check(phi, 10, make_rational(1, 100));
  if (limit.k0) {
    report.notes.push_back("ratios stay within 1/100 of " + limit.limit.get_str() + " from k=" +
                           std::to_string(*limit.k0) + " on");
  } else {
    report.notes.push_back("ratios not within 1/100 of " + limit.limit.get_str() + " below k=" +
                           std::to_string(kRatioLimitCap));
  }
  return report;
}

ExampleReport bessel(Execution exec) {
  ExampleReport report{"bessel", "the 1/k! sequence (J_0(2 sqrt x))", {}, {}, {}};
  const GammaSeq seq = sequences::bessel_j0();

  const std::vector<Rational> g_printed = {1,
                                           0,
                                           make_rational(-1, 2),
                                           make_rational(2, 3),
                                           make_rational(-5, 8),
                                           make_rational(7, 15),
                                           make_rational(-37, 144),
                                           make_rational(17, 420)};
  const auto g = gstar_values(seq, 7, 0);
  check(report, "g_k*(-1), k=0..7", g == g_printed, join(g));

  const std::map<std::size_t, Rational> turan_expected = {{1, 0},
                                                          {2, make_rational(1, 4)},
                                                          {3, make_rational(-2, 9)},
                                                          {4, make_rational(-85, 192)},
                                                          {5, make_rational(-329, 900)}};
  for (const auto& [k, expected] : turan_expected) {
    const Rational t = turan_quantity(seq, k, 0);
    check(report, "turan k=" + std::to_string(k), t == expected, t.get_str());
  }
  report.errata.push_back("turan quantity at k=2 is printed as 1; g_2*^2 + 2 g_2* g_1* = 1/4 + 0 = 1/4");

  for (const Rational& a : {make_rational(1, 2), Rational(1), Rational(2)}) {
    const HermiteParam alpha(a);
    const Polynomial q3 = coefficient_polynomial(alpha, seq, 3);
    const Polynomial oracle = solve_operator_from_action(alpha, seq, 3).Q[3];
    const Polynomial closed{Rational(0), a / 6, Rational(0), make_rational(1, 9)};
    check(report, "Q_3 = x(2x^2+3 alpha)/18, alpha=" + a.get_str(), q3 == oracle && q3 == closed, q3.to_string());
    const std::size_t roots = count_real_roots(q3);
    check(report, "Q_3 non-real-rooted, alpha=" + a.get_str(), roots == 1 && !is_real_rooted(q3),
          std::to_string(roots) + " distinct real root(s)");
  }
  report.errata.push_back("Q_3 is printed as (x^2+6 alpha)x/18; the coefficient formula gives x(2x^2+3 alpha)/18. "
                          "Both have non-real zeros for alpha > 0");

  const auto table = q_reality_table(HermiteParam(Rational(1)), seq, 5, 0, exec);
  bool rows_ok = table.rows.size() == 6;
  for (std::size_t k = 3; rows_ok && k <= 5; ++k) rows_ok = !table.rows[k].real_rooted;
  check(report, "Q_3, Q_4, Q_5 non-real-rooted (alpha=1)", rows_ok);

  const auto turanish = turanish_check(HermiteParam(Rational(1)), seq, 10);
  check(report, "turan condition consistent with reality table, k<=10", turanish.passed,
        turanish.failure.value_or(std::to_string(turanish.cases) + " cases"));
  return report;
}

ExampleReport hermite_ops(Execution exec) {
  ExampleReport report{"hermite-ops", "operators a + xD - alpha D^2 and the converse direction", {}, {}, {}};
  for (const Rational& a : {make_rational(1, 2), Rational(1), Rational(2)}) {
    for (const Rational& shift : {Rational(-1), Rational(0), Rational(3)}) {
      const auto op = build_operator(HermiteParam(a), sequences::linear(shift), 6, 0, exec);
      bool ok = op.Q[0] == Polynomial::constant(shift) && op.Q[1] == Polynomial::identity() &&
                op.Q[2] == Polynomial::constant(-a);
      for (std::size_t k = 3; k < op.Q.size(); ++k) ok = ok && op.Q[k].is_zero();
      check(report, linear_label(shift) + " at alpha=" + a.get_str() + ": Q = (a, x, -alpha, 0, ...)", ok);
    }
  }

  for (const Rational& shift : {Rational(-1), Rational(0), Rational(3)}) {
    const Verdict v = is_classical_ms(sequences::linear(shift));
    const auto expected = shift >= 0 ? Verdict::Status::is_ms : Verdict::Status::not_ms;
    check(report, linear_label(shift) + " classical verdict", v.status == expected, to_string(v.status));
  }

  const Basis hermite1 = Basis::hermite(Rational(1));
  const GammaSeq negative = sequences::linear(Rational(-1));
  const Verdict bad = ms_falsifier(negative, hermite1, 4, exec);
  const bool witnessed = bad.status == Verdict::Status::falsified && bad.witness &&
                         recheck_witness(negative, hermite1, *bad.witness);
  check(report, "k-1 falsified in the alpha=1 Hermite basis", witnessed,
        bad.witness ? bad.witness->input.to_string() + " -> " + bad.witness->output.to_string() : bad.reason);

  const Verdict good = ms_falsifier(sequences::linear(Rational(3)), hermite1, 4, exec);
  check(report, "k+3 survives the falsifier (deg<=4)", good.status == Verdict::Status::inconclusive,
        to_string(good.status));
  report.notes.push_back("the coefficients a, x, -alpha are real-rooted for every a; only a >= 0 gives a "
                         "multiplier sequence");

  const FactoredSpec phi{1, 0, make_rational(1, 2), {1, 1}};
  const Verdict hms = is_hermite_ms(phi);
  check(report, "e^{x/2}(1+x)^2 is not a Hermite multiplier sequence", hms.status == Verdict::Status::not_ms,
        to_string(hms.status));
  const auto table = q_reality_table(HermiteParam(Rational(1)), sequences::example311(), 10, 0, exec);
  const auto first = table.first_non_real();
  check(report, "e^{x/2}(1+x)^2 has a non-real Q_k, k<=10", first.has_value(),
        first ? "first at k=" + std::to_string(*first) : "none");
  return report;
}

ExampleReport geom_factorial(Execution exec) {
  ExampleReport report{"geom-factorial", "the r^k/k! family", {}, {}, {}};
  const Rational a = 1;
  const HermiteParam alpha(a);
  for (const Rational& r : {Rational(0), make_rational(1, 2), make_rational(4, 7), make_rational(3, 5),
                            make_rational(9, 10), Rational(1)}) {
    const auto row = geom_factorial_row(r, alpha);
    check(report, "r=" + r.get_str() + ": Q_2 or Q_4 non-real", !row.q2_real || !row.q4_real,
          std::string("Q_2 ") + realness(row.q2_real) + ", Q_4 " + realness(row.q4_real));
    const Rational g2 = 1 - 2 * r + r * r / 2;
    const Polynomial q2_closed{-(a / 2) * (r * r / 2 - 1), Rational(0), g2 / 2};
    check(report, "r=" + r.get_str() + ": Q_2 = g_2*/2 x^2 - (alpha/2)(r^2/2 - 1)", row.q2 == q2_closed,
          row.q2.to_string());
  }

  for (const auto& region : geom_factorial_regions(100, alpha, exec)) {
    report.notes.push_back("r in [" + region.from.get_str() + ", " + region.to.get_str() + "]: Q_2 " +
                           realness(region.q2_real) + ", Q_4 " + realness(region.q4_real));
  }
  report.errata.push_back("Q_2 is printed with constant term -(alpha/2)(r^2/3 - 1); the coefficient formula "
                          "gives -(alpha/2)(r^2/2 - 1)");
  report.errata.push_back("printed non-reality set for Q_2 is [0, 1/sqrt 3) u (2 - sqrt 2, 1]; the computed "
                          "regions (notes) differ and are not asserted against it");
  return report;
}

ExampleReport laguerre_demo(Execution) {
  ExampleReport report{"laguerre", "Laguerre operator a + (x-alpha-1)D - xD^2", {}, {}, {}};
  bool eigen_ok = true;
  std::string eigen_detail;
  std::size_t eigen_cases = 0;
  for (const Rational& alpha : {Rational(0), make_rational(1, 2), Rational(1), Rational(2)}) {
    for (const Rational& a : {Rational(-1), Rational(0), Rational(1), Rational(alpha + 1), Rational(alpha + 2)}) {
      const auto r = verify_laguerre_eigen(LaguerreParam(alpha, a), 10);
      eigen_cases += r.cases;
      if (!r.passed && eigen_ok) {
        eigen_ok = false;
        eigen_detail = r.name + ": " + r.failure.value_or("");
      }
    }
  }
  check(report, "T L_n = (n+a) L_n, n<=10", eigen_ok,
        eigen_ok ? std::to_string(eigen_cases) + " cases" : eigen_detail);

  const Rational alpha = 1;
  const std::vector<Rational> a_values = {Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3)};
  for (const auto& row : laguerre_counterexample_demo(alpha, a_values, 6)) {
    const std::string tag = "a=" + row.a.get_str();
    check(report, tag + ": operator coefficients real-rooted", row.coefficients_real_rooted);
    if (row.inside_bound) {
      check(report, tag + ": inconclusive inside [0, alpha+1]", row.status == "inconclusive", row.status);
      continue;
    }
    bool sound = row.status == "falsified" && row.witness_input && row.witness_output;
    if (sound) {
      const Witness w{*row.witness_input, *row.witness_output, ""};
      sound = recheck_witness(sequences::linear(row.a), Basis::laguerre(alpha), w);
    }
    check(report, tag + ": falsified outside [0, alpha+1]", sound,
          row.witness_input ? row.witness_input->to_string() + " -> " + row.witness_output->to_string()
                            : row.status);
  }
  return report;
}

using Runner = std::function<ExampleReport(Execution)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"table1", table1}, {"bessel", bessel}, {"hermite-ops", hermite_ops},
      {"geom-factorial", geom_factorial}, {"laguerre", laguerre_demo},
  };
  return table;
}

}  // namespace

bool ExampleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.passed; });
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : runners()) out.push_back(id);
    return out;
  }();
  return ids;
}

ExampleReport run_example(const std::string& id, Execution exec) {
  for (const auto& [name, fn] : runners()) {
    if (name == id) return fn(exec);
  }
  throw std::invalid_argument("unknown example id '" + id + "'");
}

void print_text(std::ostream& out, const ExampleReport& report) {
  out << "== " << report.id << ": " << report.title << '\n';
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.label;
    if (!c.detail.empty()) out << " : " << c.detail;
    out << '\n';
  }
  for (const auto& e : report.errata) out << "ERRATUM " << e << '\n';
  for (const auto& n : report.notes) out << "NOTE " << n << '\n';
  out << "RESULT " << report.id << ' ' << (report.passed() ? "PASS" : "FAIL") << '\n';
}

nlohmann::json to_json(const ExampleReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"id", report.id},         {"title", report.title},   {"passed", report.passed()},
          {"checks", checks},        {"errata", report.errata}, {"notes", report.notes}};
}

}  // namespace hermdiag::cli
