#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace stripwalk {

using BigInt = mpz_class;

/// Variable a polynomial or series is expressed in. Internally everything is
/// in t, with t^2 = z; the z form is only a view over even polynomials.
enum class Var { t, z };

enum class Parity { zero, even, odd, mixed };

std::string_view to_string(Parity p) noexcept;
std::string_view to_string(Var v) noexcept;

/// Dense univariate polynomial in t with arbitrary-precision coefficients.
/// Index k holds the coefficient of t^k; trailing zeros are never stored.
class IntPoly {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);
  /// t^exponent
  static IntPoly t_power(std::size_t exponent) { return monomial(1, exponent); }
  /// z^exponent, i.e. t^(2 * exponent)
  static IntPoly z_power(std::size_t exponent) { return monomial(1, 2 * exponent); }
  /// Builds the polynomial from coefficients of z^0, z^1, ...
  static IntPoly from_z(std::initializer_list<long> z_coeffs);
  static IntPoly from_z(std::span<const BigInt> z_coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// kZeroDegree for the zero polynomial.
  long degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^k; zero beyond the stored range.
  const BigInt& operator[](std::size_t k) const noexcept;
  const BigInt& leading() const noexcept { return (*this)[coeffs_.empty() ? 0 : coeffs_.size() - 1]; }
  const BigInt& constant_term() const noexcept { return (*this)[0]; }

  /// Multiply by t^k.
  IntPoly shifted(std::size_t k) const;
  IntPoly scaled(const BigInt& c) const;

  /// Coefficients of z^0, z^1, ...; throws parity_violation if an odd t-power
  /// is present.
  std::vector<BigInt> z_coeffs() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void strip();

  std::vector<BigInt> coeffs_;
};

IntPoly operator-(const IntPoly& a);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

inline IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

/// Quotient q with q * b == a. Throws not_divisible when the division leaves
/// a remainder or needs non-integer coefficients.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Divide every coefficient by c, which must divide each of them exactly.
IntPoly exact_div(const IntPoly& a, const BigInt& c);

/// Non-negative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& a);

/// a / content(a), sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& a);

/// lc(b)^k * a mod b for a suitable k, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient. Throws both_zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

Parity parity(const IntPoly& p) noexcept;

/// Human-readable rendering, e.g. "1 - 3z - 5z^2". The z form throws
/// parity_violation for polynomials with odd t-powers.
std::string render(const IntPoly& p, Var var = Var::t);

/// Preferred display variable: z when the parity permits it.
Var natural_var(const IntPoly& p) noexcept;

}  // namespace stripwalk
