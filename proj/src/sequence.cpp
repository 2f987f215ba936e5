#include "hermdiag/sequence.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace hermdiag {

void FactoredSpec::validate() const {
  if (c <= 0) throw std::invalid_argument("factored spec: c must be > 0");
  if (sigma < 0) throw std::invalid_argument("factored spec: sigma must be >= 0");
  for (const auto& z : zeros) {
    if (z <= 0) throw std::invalid_argument("factored spec: zeros x_k must be > 0, got " + z.get_str());
  }
}

std::vector<Rational> FactoredSpec::product_coeffs() const {
  std::vector<Rational> a{Rational(1)};
  for (const auto& z : zeros) {
    const Rational inv = Rational(1) / z;
    a.emplace_back(0);
    for (std::size_t i = a.size() - 1; i >= 1; --i) a[i] += a[i - 1] * inv;
  }
  return a;
}

SeriesSpec bessel_j0_spec() {
  return {"besselJ0", [](std::size_t k) -> Rational { return Rational(1) / factorial(k); }};
}

SeriesSpec exp_half_cosh_spec() {
  // e^{x/2} = Σ (1/2)^i x^i / i!,  cosh(√(2x)) = Σ 2^j x^j / (2j)!.
  return {"exp-half-cosh", [](std::size_t k) -> Rational {
            Rational sum = 0;
            for (std::size_t j = 0; j <= k; ++j) {
              sum += power(Rational(2), j) / factorial(2 * j) * power(Rational(1, 2), k - j) / factorial(k - j);
            }
            return factorial(k) * sum;
          }};
}

SeriesSpec geom_factorial_spec(const Rational& r) {
  if (r < 0) throw std::invalid_argument("geom-factorial needs r >= 0");
  return {"geom-factorial(" + r.get_str() + ")", [r](std::size_t k) -> Rational { return power(r, k) / factorial(k); }};
}

namespace {

Rational factored_gamma(const FactoredSpec& f, std::size_t k) {
  if (k < f.m) return 0;
  const std::size_t n = k - f.m;
  const auto a = f.product_coeffs();
  Rational sum = 0;
  for (std::size_t j = 0; j < a.size() && j <= n; ++j) sum += a[j] * power(f.sigma, n - j) / factorial(n - j);
  return f.c * factorial(k) * sum;
}

}  // namespace

Rational taylor_gamma(const LPPlusSpec& phi, std::size_t k) {
  return std::visit(
      [k](const auto& spec) -> Rational {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, FactoredSpec>) {
          return factored_gamma(spec, k);
        } else {
          return spec.gamma(k);
        }
      },
      phi);
}

const char* to_string(SignPattern pattern) {
  switch (pattern) {
    case SignPattern::nonneg: return "nonneg";
    case SignPattern::nonpos: return "nonpos";
    case SignPattern::alternating_even_start: return "alternating-even-start";
    case SignPattern::alternating_odd_start: return "alternating-odd-start";
    case SignPattern::mixed: return "mixed";
  }
  return "mixed";
}

struct GammaSeq::Cache {
  std::mutex mutex;
  std::vector<Rational> values;
};

GammaSeq::GammaSeq(std::string name, Source source, Rule rule)
    : name_(std::move(name)), source_(std::move(source)), rule_(std::move(rule)), cache_(std::make_shared<Cache>()) {}

GammaSeq GammaSeq::from_spec(LPPlusSpec phi) {
  std::string name;
  if (const auto* f = std::get_if<FactoredSpec>(&phi)) {
    f->validate();
    name = "factored";
  } else {
    name = std::get<SeriesSpec>(phi).name;
  }
  Rule rule = [phi](std::size_t k) -> Rational { return taylor_gamma(phi, k); };
  return GammaSeq(std::move(name), Source{std::move(phi)}, std::move(rule));
}

GammaSeq GammaSeq::closed_form(ClosedForm form, Rule rule) {
  std::string name = form.name;
  return GammaSeq(std::move(name), Source{std::move(form)}, std::move(rule));
}

GammaSeq GammaSeq::explicit_list(std::vector<Rational> head, Rational tail) {
  Rule rule = [head, tail](std::size_t k) -> Rational { return k < head.size() ? head[k] : tail; };
  return GammaSeq("explicit", Source{ExplicitList{std::move(head), std::move(tail)}}, std::move(rule));
}

Rational GammaSeq::operator[](std::size_t k) const {
  std::lock_guard lock(cache_->mutex);
  auto& values = cache_->values;
  while (values.size() <= k) values.push_back(rule_(values.size()));
  return values[k];
}

std::vector<Rational> GammaSeq::prefix(std::size_t n) const {
  if (n == 0) return {};
  (void)(*this)[n - 1];
  std::lock_guard lock(cache_->mutex);
  return {cache_->values.begin(), cache_->values.begin() + static_cast<std::ptrdiff_t>(n)};
}

SignPattern GammaSeq::sign_pattern(std::size_t up_to) const {
  bool nonneg = true, nonpos = true, alt_even = true, alt_odd = true;
  for (std::size_t k = 0; k <= up_to; ++k) {
    const int s = sgn((*this)[k]);
    const int parity = (k % 2 == 0) ? 1 : -1;
    if (s < 0) nonneg = false;
    if (s > 0) nonpos = false;
    if (s * parity < 0) alt_even = false;
    if (s * parity > 0) alt_odd = false;
  }
  if (nonneg) return SignPattern::nonneg;
  if (nonpos) return SignPattern::nonpos;
  if (alt_even) return SignPattern::alternating_even_start;
  if (alt_odd) return SignPattern::alternating_odd_start;
  return SignPattern::mixed;
}

GammaSeq GammaSeq::normalized(std::size_t up_to) const {
  const SignPattern pattern = sign_pattern(up_to);
  const GammaSeq base = *this;
  switch (pattern) {
    case SignPattern::nonneg:
      return *this;
    case SignPattern::nonpos:
      return GammaSeq(name_ + "[negated]", ClosedForm{name_ + "[negated]", {}, {}},
                      [base](std::size_t k) -> Rational { return -base[k]; });
    case SignPattern::alternating_even_start:
      return GammaSeq(name_ + "[alternated]", ClosedForm{name_ + "[alternated]", {}, {}},
                      [base](std::size_t k) -> Rational { return k % 2 == 0 ? base[k] : Rational(-base[k]); });
    case SignPattern::alternating_odd_start:
      return GammaSeq(name_ + "[alternated]", ClosedForm{name_ + "[alternated]", {}, {}},
                      [base](std::size_t k) -> Rational { return k % 2 == 1 ? base[k] : Rational(-base[k]); });
    case SignPattern::mixed:
      break;
  }
  throw std::invalid_argument("sequence '" + name_ + "' has a mixed sign pattern; not classifiable");
}

namespace sequences {

GammaSeq const1() {
  return GammaSeq::closed_form({"const1", FactoredSpec{.c = 1, .m = 0, .sigma = 1, .zeros = {}}, {}},
                               [](std::size_t) -> Rational { return Rational(1); });
}

GammaSeq linear(const Rational& a) {
  std::optional<FactoredSpec> gen;
  if (a > 0) gen = FactoredSpec{.c = a, .m = 0, .sigma = 1, .zeros = {a}};
  if (a == 0) gen = FactoredSpec{.c = 1, .m = 1, .sigma = 1, .zeros = {}};
  return GammaSeq::closed_form({"linear(" + a.get_str() + ")", gen, a},
                               [a](std::size_t k) -> Rational { return Rational(static_cast<unsigned long>(k)) + a; });
}

GammaSeq example311() {
  return GammaSeq::closed_form(
      {"example311", FactoredSpec{.c = 1, .m = 0, .sigma = Rational(1, 2), .zeros = {1, 1}}, {}}, [](std::size_t k) -> Rational {
        const Rational k1(static_cast<unsigned long>(k + 1));
        return (4 * k1 * k1 - 8 * k1 + 5) / power(Rational(2), k);
      });
}

GammaSeq bessel_j0() { return GammaSeq::from_spec(bessel_j0_spec()); }

GammaSeq exp_half_cosh() { return GammaSeq::from_spec(exp_half_cosh_spec()); }

GammaSeq geom_factorial(const Rational& r) { return GammaSeq::from_spec(geom_factorial_spec(r)); }

GammaSeq falling2() {
  return GammaSeq::closed_form({"falling2", std::nullopt, {}}, [](std::size_t k) -> Rational {
    const Rational kk(static_cast<unsigned long>(k));
    return kk * (kk - 1);
  });
}

GammaSeq factored(const FactoredSpec& spec) { return GammaSeq::from_spec(spec); }

namespace {

std::optional<std::string> call_argument(const std::string& selector, const std::string& fn) {
  if (selector.size() < fn.size() + 2 || selector.compare(0, fn.size() + 1, fn + "(") != 0 || selector.back() != ')') {
    return std::nullopt;
  }
  return selector.substr(fn.size() + 1, selector.size() - fn.size() - 2);
}

}  // namespace

GammaSeq by_name(const std::string& selector) {
  if (selector == "const1") return const1();
  if (selector == "example311") return example311();
  if (selector == "besselJ0") return bessel_j0();
  if (selector == "exp-half-cosh") return exp_half_cosh();
  if (selector == "falling2") return falling2();
  if (auto arg = call_argument(selector, "linear")) return linear(parse_rational(*arg));
  if (auto arg = call_argument(selector, "geom-factorial")) return geom_factorial(parse_rational(*arg));
  throw std::invalid_argument("unknown sequence '" + selector + "'");
}

std::vector<std::string> registry_names() {
  return {"const1", "linear(a)", "example311", "besselJ0", "exp-half-cosh", "geom-factorial(r)", "falling2"};
}

}  // namespace sequences

}  // namespace hermdiag
