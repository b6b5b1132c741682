#include "stripwalk/poly.hpp"

#include <algorithm>
#include <sstream>

#include "stripwalk/errors.hpp"

namespace stripwalk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_divisible: return "NotDivisible";
    case Errc::both_zero: return "BothZero";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case Errc::singular_system: return "SingularSystem";
    case Errc::chain_too_short: return "ChainTooShort";
    case Errc::height_out_of_strip: return "HeightOutOfStrip";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::insufficient_terms: return "InsufficientTerms";
    case Errc::invalid_model: return "InvalidModel";
    case Errc::bad_format: return "BadFormat";
  }
  return "Unknown";
}

std::string_view to_string(Parity p) noexcept {
  switch (p) {
    case Parity::zero: return "zero";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "unknown";
}

std::string_view to_string(Var v) noexcept { return v == Var::t ? "t" : "z"; }

namespace {
const BigInt kZero{0};
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_z(std::initializer_list<long> z_coeffs) {
  std::vector<BigInt> v;
  v.reserve(z_coeffs.size());
  for (long c : z_coeffs) v.emplace_back(c);
  return from_z(v);
}

IntPoly IntPoly::from_z(std::span<const BigInt> z_coeffs) {
  std::vector<BigInt> v(z_coeffs.empty() ? 0 : 2 * z_coeffs.size() - 1);
  for (std::size_t k = 0; k < z_coeffs.size(); ++k) v[2 * k] = z_coeffs[k];
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::operator[](std::size_t k) const noexcept {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

void IntPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  std::vector<BigInt> v(coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::vector<BigInt> IntPoly::z_coeffs() const {
  std::vector<BigInt> out;
  out.reserve((coeffs_.size() + 1) / 2);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k % 2 == 1) {
      if (coeffs_[k] != 0) {
        throw Error(Errc::parity_violation, "odd power t^" + std::to_string(k) + " has no z form");
      }
    } else {
      out.push_back(coeffs_[k]);
    }
  }
  return out;
}

IntPoly operator-(const IntPoly& a) { return a.scaled(-1); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<BigInt> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] + b[k];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<BigInt> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] - b[k];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<BigInt> v(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::not_divisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::not_divisible, "divisor degree exceeds dividend degree");

  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) {
      throw Error(Errc::not_divisible, "leading coefficient does not divide");
    }
    quot[k] = top / bc[db];
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= quot[k] * bc[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(Errc::not_divisible, "nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly exact_div(const IntPoly& a, const BigInt& c) {
  if (c == 0) throw Error(Errc::not_divisible, "division by zero scalar");
  std::vector<BigInt> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw Error(Errc::not_divisible, "scalar does not divide coefficient");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  BigInt c = content(a);
  if (a.leading() < 0) c = -c;
  return c == 1 ? a : exact_div(a, c);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::not_divisible, "pseudo-remainder by zero");
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc[db];
  while (!rem.empty() && rem.size() - 1 >= db) {
    const std::size_t shift = rem.size() - 1 - db;
    const BigInt lr = rem.back();
    // rem <- lb * rem - lr * t^shift * b, which kills the leading term
    for (auto& r : rem) r *= lb;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= lr * bc[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Parity parity(const IntPoly& p) noexcept {
  bool even = false, odd = false;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    (k % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::mixed;
  if (even) return Parity::even;
  if (odd) return Parity::odd;
  return Parity::zero;
}

Var natural_var(const IntPoly& p) noexcept {
  const Parity q = parity(p);
  return (q == Parity::even || q == Parity::zero) ? Var::z : Var::t;
}

std::string render(const IntPoly& p, Var var) {
  if (p.is_zero()) return "0";
  std::vector<BigInt> c;
  if (var == Var::z) {
    c = p.z_coeffs();
  } else {
    c.assign(p.coeffs().begin(), p.coeffs().end());
  }
  const char sym = var == Var::z ? 'z' : 't';
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    BigInt mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) os << '-';
    } else {
      os << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << sym;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace stripwalk
