#pragma once

#include "stripwalk/poly.hpp"

namespace stripwalk {

/// Quotient num/den of two IntPoly, always kept in lowest terms with
/// den(0) == 1. The only way to obtain one is through normalization, so every
/// instance satisfies the invariant and equality is plain coefficient equality.
class RationalGF {
 public:
  /// The constant 1.
  RationalGF() : num_(IntPoly{1}), den_(IntPoly{1}) {}
  /// p / 1
  explicit RationalGF(IntPoly p) : num_(std::move(p)), den_(IntPoly{1}) {}

  /// Lowest terms, den(0) == 1. Throws zero_denominator or
  /// non_unit_constant_term.
  static RationalGF normalize(const IntPoly& num, const IntPoly& den);

  static RationalGF zero() { return RationalGF(IntPoly{}); }
  static RationalGF one() { return RationalGF(); }

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Parity of the function as a whole: den is always even for the objects in
  /// this library, so the numerator decides. Mixed if den is not even.
  Parity parity() const noexcept;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  RationalGF(IntPoly num, IntPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  IntPoly num_;
  IntPoly den_;
};

inline RationalGF rational_normalize(const IntPoly& num, const IntPoly& den) {
  return RationalGF::normalize(num, den);
}

RationalGF operator+(const RationalGF& a, const RationalGF& b);
RationalGF operator-(const RationalGF& a, const RationalGF& b);
RationalGF operator-(const RationalGF& a);
RationalGF operator*(const RationalGF& a, const RationalGF& b);
RationalGF operator*(const IntPoly& a, const RationalGF& b);
RationalGF operator/(const RationalGF& a, const RationalGF& b);

/// 1/a. Throws zero_denominator for a == 0 and non_unit_constant_term when
/// a(0) is not a unit.
RationalGF inverse(const RationalGF& a);

inline RationalGF rational_add(const RationalGF& a, const RationalGF& b) { return a + b; }
inline RationalGF rational_mul(const RationalGF& a, const RationalGF& b) { return a * b; }
inline RationalGF rational_inv(const RationalGF& a) { return inverse(a); }

/// a.num * b.den - b.num * a.den; zero iff the two are equal as functions.
IntPoly cross_difference(const RationalGF& a, const RationalGF& b);

}  // namespace stripwalk
