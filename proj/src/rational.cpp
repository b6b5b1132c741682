#include "stripwalk/rational.hpp"

#include "stripwalk/errors.hpp"

namespace stripwalk {

RationalGF RationalGF::normalize(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw Error(Errc::zero_denominator, "denominator is the zero polynomial");
  if (num.is_zero()) return RationalGF(IntPoly{}, IntPoly{1}, 0);

  const IntPoly g = gcd(num, den);
  IntPoly n = g.degree() > 0 ? exact_div(num, g) : num;
  IntPoly d = g.degree() > 0 ? exact_div(den, g) : den;

  // Remove the joint integer content; after that den(0) must be a unit.
  BigInt c;
  mpz_gcd(c.get_mpz_t(), content(n).get_mpz_t(), content(d).get_mpz_t());
  if (c != 1) {
    n = exact_div(n, c);
    d = exact_div(d, c);
  }
  const BigInt& d0 = d.constant_term();
  if (d0 == 0) {
    throw Error(Errc::non_unit_constant_term, "pole at t = 0: " + render(d));
  }
  if (d0 == -1) {
    n = -n;
    d = -d;
  } else if (d0 != 1) {
    throw Error(Errc::non_unit_constant_term,
                "den(0) = " + d0.get_str() + " cannot be normalized to 1 over the integers");
  }
  return RationalGF(std::move(n), std::move(d), 0);
}

Parity RationalGF::parity() const noexcept {
  const Parity dp = stripwalk::parity(den_);
  if (dp != Parity::even) return Parity::mixed;
  return stripwalk::parity(num_);
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.den() == b.den()) return RationalGF::normalize(a.num() + b.num(), a.den());
  return RationalGF::normalize(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalGF operator-(const RationalGF& a) { return RationalGF::normalize(-a.num(), a.den()); }

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF::normalize(a.num() * b.num(), a.den() * b.den());
}

RationalGF operator*(const IntPoly& a, const RationalGF& b) {
  return RationalGF::normalize(a * b.num(), b.den());
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
  if (b.is_zero()) throw Error(Errc::zero_denominator, "division by the zero function");
  return RationalGF::normalize(a.num() * b.den(), a.den() * b.num());
}

RationalGF inverse(const RationalGF& a) {
  if (a.is_zero()) throw Error(Errc::zero_denominator, "inverse of the zero function");
  return RationalGF::normalize(a.den(), a.num());
}

IntPoly cross_difference(const RationalGF& a, const RationalGF& b) {
  return a.num() * b.den() - b.num() * a.den();
}

}  // namespace stripwalk
