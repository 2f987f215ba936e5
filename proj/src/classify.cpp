#include "hermdiag/classify.hpp"

#include "hermdiag/diffop.hpp"
#include "hermdiag/jensen.hpp"
#include "hermdiag/laguerre.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hermdiag {

const char* to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::is_ms: return "is_ms";
    case Verdict::Status::not_ms: return "not_ms";
    case Verdict::Status::falsified: return "falsified";
    case Verdict::Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict is_hermite_ms(const LPPlusSpec& phi) {
  const auto* f = std::get_if<FactoredSpec>(&phi);
  if (!f) {
    return {Verdict::Status::inconclusive, "series spec '" + std::get<SeriesSpec>(phi).name + "' has no explicit sigma",
            std::nullopt, std::nullopt};
  }
  f->validate();
  if (f->sigma >= 1) return {Verdict::Status::is_ms, "sigma = " + f->sigma.get_str() + " >= 1", std::nullopt, {}};
  return {Verdict::Status::not_ms, "sigma = " + f->sigma.get_str() + " < 1", std::nullopt, {}};
}

Verdict is_classical_ms(const LPPlusSpec& phi) {
  if (const auto* f = std::get_if<FactoredSpec>(&phi)) {
    f->validate();
    return {Verdict::Status::is_ms, "factored form lies in L-P+", std::nullopt, {}};
  }
  return {Verdict::Status::is_ms, "series '" + std::get<SeriesSpec>(phi).name + "' generates an L-P+ function",
          std::nullopt, {}};
}

Verdict is_classical_ms(const GammaSeq& seq) {
  return std::visit(
      [](const auto& source) -> Verdict {
        using T = std::decay_t<decltype(source)>;
        if constexpr (std::is_same_v<T, LPPlusSpec>) {
          return is_classical_ms(source);
        } else if constexpr (std::is_same_v<T, GammaSeq::ClosedForm>) {
          if (source.linear_shift) {
            if (*source.linear_shift >= 0) {
              return {Verdict::Status::is_ms, "k + a with a >= 0: (x + a) e^x lies in L-P+", std::nullopt, {}};
            }
            return {Verdict::Status::not_ms, "k + a with a < 0 has mixed signs", std::nullopt, {}};
          }
          if (source.generating) return is_classical_ms(LPPlusSpec{*source.generating});
          return {Verdict::Status::inconclusive, "closed form without a factored generating function", std::nullopt,
                  {}};
        } else {
          return {Verdict::Status::inconclusive, "explicit list: no factored form supplied", std::nullopt, {}};
        }
      },
      seq.source());
}

std::optional<std::size_t> RealityTable::first_non_real() const {
  for (const auto& row : rows) {
    if (!row.real_rooted) return row.k;
  }
  return std::nullopt;
}

RealityRow reality_row(const Polynomial& q, std::size_t k) {
  RealityRow row;
  row.k = k;
  row.degree = q.degree();
  if (q.degree() <= 0) return row;
  const Polynomial sf = squarefree_part(q);
  row.squarefree_degree = static_cast<std::size_t>(sf.degree());
  row.distinct_real_roots = count_real_roots(sf);
  row.real_rooted = row.distinct_real_roots == row.squarefree_degree;
  return row;
}

RealityTable q_reality_table(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k_max, std::size_t p,
                             Execution exec) {
  if (alpha.is_limit()) throw std::invalid_argument("reality table needs alpha > 0");
  const GammaSeq normalized = seq.normalized(k_max + p);
  const HermiteDiffOp op = build_operator(alpha, normalized, k_max, p, exec);
  RealityTable table{alpha.value(), p, std::vector<RealityRow>(k_max + 1)};
  for_each_index(k_max + 1, exec, [&](std::size_t k) { table.rows[k] = reality_row(op.Q[k], k); });
  return table;
}

CheckReport turanish_check(const HermiteParam& alpha, const GammaSeq& seq, std::size_t k_max, std::size_t p) {
  if (alpha.is_limit()) throw std::invalid_argument("turan check needs alpha > 0");
  CheckReport report("turan necessary condition (" + seq.name() + ", p=" + std::to_string(p) + ")");
  const HermiteDiffOp op = build_operator(alpha, seq, k_max, p);
  const auto g = gstar_values(seq, k_max, p);
  for (std::size_t k = 2; k <= k_max; ++k) {
    const Rational turan = g[k] * g[k] + 2 * g[k] * g[k - 1];
    if (is_real_rooted(op.Q[k]) && turan < 0) {
      report.fail("k=" + std::to_string(k) + ": Q_k real-rooted but turan quantity " + turan.get_str() + " < 0");
    }
    ++report.cases;
  }
  return report;
}

RatioLimitReport ratio_limit_check(const FactoredSpec& phi, std::size_t window, const Rational& tol,
                                   std::size_t cap) {
  phi.validate();
  if (phi.sigma == 1) throw std::invalid_argument("ratio limit check is undefined for sigma = 1");
  RatioLimitReport out{CheckReport("ratio limit"), phi.sigma - 1, std::nullopt};
  const auto ratios = ratio_sequence(GammaSeq::from_spec(phi), cap + window, 0);
  // ratios[i] has label k = i + 1.
  std::vector<bool> bad(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    bad[i] = ratios[i].value && abs(*ratios[i].value - out.limit) >= tol;
  }
  std::size_t last_bad = 0;  // label of the latest out-of-tolerance entry seen
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (bad[i]) last_bad = ratios[i].k;
  }
  // Smallest K0 >= 1 with no bad label in [K0, K0 + window].
  for (std::size_t k0 = 1; k0 <= cap; ++k0) {
    bool ok = true;
    for (std::size_t k = k0; k <= k0 + window; ++k) {
      if (bad[k - 1]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.k0 = k0;
      break;
    }
  }
  out.check.cases = ratios.size();
  if (!out.k0) {
    out.check.fail("no K0 <= " + std::to_string(cap) + " (last out-of-tolerance label " + std::to_string(last_bad) +
                   ")");
  }
  return out;
}

std::string Basis::name() const {
  switch (kind) {
    case Kind::standard: return "standard";
    case Kind::hermite: return "hermite(" + alpha.get_str() + ")";
    case Kind::laguerre: return "laguerre(" + alpha.get_str() + ")";
  }
  return "standard";
}

std::vector<Polynomial> Basis::elements(std::size_t n) const {
  switch (kind) {
    case Kind::hermite: return hermite_polys_upto(n, HermiteParam(alpha));
    case Kind::laguerre: return laguerre_polys_upto(n, alpha);
    case Kind::standard: break;
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(Polynomial::monomial(Rational(1), k));
  return out;
}

Polynomial apply_diagonal(const GammaSeq& seq, const Basis& basis, const Polynomial& f) {
  switch (basis.kind) {
    case Basis::Kind::standard: {
      std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] *= seq[k];
      return Polynomial(std::move(c));
    }
    case Basis::Kind::hermite: {
      const auto e = to_hermite_basis(f, HermiteParam(basis.alpha));
      std::vector<Rational> c(e.coeffs().begin(), e.coeffs().end());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] *= seq[k];
      return from_hermite_basis(HermiteExpansion(e.alpha(), std::move(c)));
    }
    case Basis::Kind::laguerre: {
      auto c = to_laguerre_basis(f, basis.alpha);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] *= seq[k];
      return from_laguerre_basis(c, basis.alpha);
    }
  }
  throw std::logic_error("unknown basis kind");
}

namespace {

const long kPowerShifts[][2] = {{0, 1},  {1, 2}, {-1, 2}, {1, 1},  {-1, 1}, {2, 1},  {-2, 1}, {3, 1},  {-3, 1},
                                {4, 1},  {-4, 1}, {5, 1}, {-5, 1}, {6, 1},  {-6, 1}, {8, 1},  {-8, 1}, {10, 1},
                                {-10, 1}};
const long kSymmetricShifts[] = {1, 2, 3, 4, 6, 10};
const long kBasisShifts[] = {0, 1, -1, 3, -3};
constexpr std::size_t kRandomProducts = 12;

}  // namespace

std::vector<CorpusItem> falsifier_corpus(const Basis& basis, std::size_t n) {
  std::vector<CorpusItem> corpus;
  const Polynomial x = Polynomial::identity();
  for (const auto& [num, den] : kPowerShifts) {
    const Rational c = make_rational(num, den);
    Polynomial f = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) f = f * Polynomial({c, Rational(1)});
    corpus.push_back({"(x + " + c.get_str() + ")^" + std::to_string(n), std::move(f)});
  }
  if (n >= 2) {
    for (long c : kSymmetricShifts) {
      Polynomial f = Polynomial::monomial(Rational(1), n - 2) * Polynomial({Rational(-c * c), Rational(0), Rational(1)});
      corpus.push_back({"x^" + std::to_string(n - 2) + "(x^2 - " + std::to_string(c * c) + ")", std::move(f)});
    }
  }
  // mt19937's output sequence is fixed by the standard; distributions are not.
  std::mt19937 engine(static_cast<std::uint32_t>(0x5eedu + 7919u * n));
  for (std::size_t item = 0; item < kRandomProducts; ++item) {
    Polynomial f = Polynomial::constant(Rational(1));
    std::string family = "random product:";
    for (std::size_t i = 0; i < n; ++i) {
      const long num = static_cast<long>(engine() % 49) - 24;
      const long den = static_cast<long>(engine() % 4) + 1;
      const Rational root = make_rational(num, den);
      f = f * Polynomial({Rational(-root), Rational(1)});
      family += " " + root.get_str();
    }
    corpus.push_back({family, std::move(f)});
  }
  const Polynomial bn = basis.elements(n).back();
  for (long c : kBasisShifts) {
    corpus.push_back({basis.name() + " element " + std::to_string(n) + " shifted by " + std::to_string(c),
                      bn.shift_argument(Rational(c))});
  }
  std::erase_if(corpus, [](const CorpusItem& item) { return !is_real_rooted(item.poly); });
  return corpus;
}

Verdict ms_falsifier(const GammaSeq& seq, const Basis& basis, std::size_t deg_max, Execution exec) {
  for (std::size_t n = 1; n <= deg_max; ++n) {
    const auto corpus = falsifier_corpus(basis, n);
    std::vector<Polynomial> images(corpus.size());
    std::vector<char> real(corpus.size(), 1);
    for_each_index(corpus.size(), exec, [&](std::size_t i) {
      images[i] = apply_diagonal(seq, basis, corpus[i].poly);
      real[i] = is_real_rooted(images[i]) ? 1 : 0;
    });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!real[i]) {
        Verdict v{Verdict::Status::falsified,
                  "degree " + std::to_string(n) + " input " + corpus[i].family + " maps to a non-real-rooted image",
                  Witness{corpus[i].poly, images[i], corpus[i].family}, n};
        return v;
      }
    }
  }
  return {Verdict::Status::inconclusive, "no witness in the corpus up to degree " + std::to_string(deg_max),
          std::nullopt, deg_max};
}

bool recheck_witness(const GammaSeq& seq, const Basis& basis, const Witness& witness) {
  if (!is_real_rooted(witness.input) || is_real_rooted(witness.output)) return false;
  const auto deg = static_cast<std::size_t>(std::max(0L, witness.input.degree()));
  Polynomial image;
  switch (basis.kind) {
    case Basis::Kind::standard: {
      for (std::size_t k = 0; k < witness.input.coeffs().size(); ++k) {
        image += Polynomial::monomial(witness.input.coeffs()[k] * seq[k], k);
      }
      break;
    }
    case Basis::Kind::hermite: {
      image = apply_operator(build_operator(HermiteParam(basis.alpha), seq, deg, 0, Execution::serial), witness.input);
      break;
    }
    case Basis::Kind::laguerre: {
      const auto* form = std::get_if<GammaSeq::ClosedForm>(&seq.source());
      if (form && form->linear_shift) {
        image = laguerre_operator_apply(LaguerreParam(basis.alpha, *form->linear_shift), witness.input);
      } else {
        auto c = to_laguerre_basis(witness.input, basis.alpha);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] *= seq[k];
        image = from_laguerre_basis(c, basis.alpha);
      }
      break;
    }
  }
  return image == witness.output;
}

GeomFactorialRow geom_factorial_row(const Rational& r, const HermiteParam& alpha) {
  const GammaSeq seq = sequences::geom_factorial(r);
  const HermiteDiffOp op = build_operator(alpha, seq, 4, 0, Execution::serial);
  GeomFactorialRow row{r, op.Q[2], op.Q[4]};
  row.q2_real = is_real_rooted(row.q2);
  row.q4_real = is_real_rooted(row.q4);
  return row;
}

std::vector<GeomFactorialRegion> geom_factorial_regions(std::size_t steps, const HermiteParam& alpha,
                                                        Execution exec) {
  if (steps == 0) throw std::invalid_argument("region scan needs at least one step");
  std::vector<GeomFactorialRow> rows(steps + 1, GeomFactorialRow{0, {}, {}});
  for_each_index(steps + 1, exec, [&](std::size_t i) {
    rows[i] = geom_factorial_row(make_rational(static_cast<long>(i), static_cast<long>(steps)), alpha);
  });
  std::vector<GeomFactorialRegion> regions;
  for (const auto& row : rows) {
    if (!regions.empty() && regions.back().q2_real == row.q2_real && regions.back().q4_real == row.q4_real) {
      regions.back().to = row.r;
    } else {
      regions.push_back({row.r, row.r, row.q2_real, row.q4_real});
    }
  }
  return regions;
}

}  // namespace hermdiag
