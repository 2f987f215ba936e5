#include "hermdiag/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hermdiag {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(Rational(1), 1); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative(std::size_t order) const {
  if (order == 0) return *this;
  if (static_cast<long>(order) > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    // falling factorial i (i-1) ... (i-order+1)
    Integer ff = 1;
    for (std::size_t j = 0; j < order; ++j) ff *= static_cast<unsigned long>(i - j);
    out[i - order] = coeffs_[i] * Rational(ff);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational factor = 1;
  for (auto& a : out) {
    a *= factor;
    factor *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift_argument(const Rational& c) const {
  // Horner in the shifted variable.
  Polynomial acc;
  const Polynomial linear({c, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const long db = divisor.degree();
  const long da = dividend.degree();
  if (da < db) return {Polynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational inv_lead = Rational(1) / divisor.leading();
  for (long k = da - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Divides out the positive content.
void strip_content(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_int_poly(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (lcm / c.get_den()));
  strip_content(out);
  return out;
}

Polynomial to_rational_poly(const IntPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

IntPoly int_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
  return out;
}

/// Positive multiple of (a mod b): every elimination step scales the
/// running remainder by |lc(b)|, which never flips signs.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  const Integer abs_lb = abs(lb);
  const int sign_lb = sgn(lb);
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= abs_lb;
    for (std::size_t j = 0; j <= db; ++j) {
      if (sign_lb > 0) {
        a[shift + j] -= la * b[j];
      } else {
        a[shift + j] += la * b[j];
      }
    }
    trim(a);
    strip_content(a);
  }
  return a;
}

IntPoly int_gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = positive_pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  strip_content(a);
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

int sign_at_infinity(const IntPoly& p, bool positive_side) {
  const int s = sgn(p.back());
  if (positive_side || (p.size() - 1) % 2 == 0) return s;
  return -s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<Integer> primitive_integer_image(const Polynomial& p) {
  IntPoly out = to_int_poly(p);
  if (!out.empty() && out.back() < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return to_rational_poly(int_gcd(to_int_poly(a), to_int_poly(b))).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  const IntPoly ip = to_int_poly(p);
  const IntPoly g = int_gcd(ip, int_derivative(ip));
  return divide(to_rational_poly(ip), to_rational_poly(g)).quotient.monic();
}

std::size_t count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  IntPoly prev = to_int_poly(squarefree_part(p));
  if (prev.size() <= 1) return 0;
  IntPoly cur = int_derivative(prev);
  strip_content(cur);
  std::vector<int> at_neg{sign_at_infinity(prev, false), sign_at_infinity(cur, false)};
  std::vector<int> at_pos{sign_at_infinity(prev, true), sign_at_infinity(cur, true)};
  while (cur.size() > 1) {
    IntPoly next = positive_pseudo_remainder(prev, cur);
    if (next.empty()) break;
    for (auto& c : next) c = -c;
    at_neg.push_back(sign_at_infinity(next, false));
    at_pos.push_back(sign_at_infinity(next, true));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_real_rooted(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  const Polynomial sf = squarefree_part(p);
  return count_real_roots(sf) == static_cast<std::size_t>(sf.degree());
}

}  // namespace hermdiag
