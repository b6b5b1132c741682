#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stripwalk/rational.hpp"

namespace stripwalk {

enum class Origin { soccer, basketball };

/// Denominator polynomials indexed by width. Numerators follow from
/// P_w = entries[w-1] (P_0 = 1).
struct DenomSequence {
  Origin origin = Origin::basketball;
  std::vector<IntPoly> entries;

  /// entries[w-1] / entries[w], normalized; 1 at w = 0.
  RationalGF gf(std::size_t w) const;
};

using BasketballSeed = std::array<IntPoly, 5>;

/// Denominators at widths 0..4:
///   1, 1 - z, 1 - 2z - 3z^2, 1 - 3z - 5z^2 - 2z^3 + z^4, 1 - 4z - 6z^2 + 2z^3
BasketballSeed basketball_initial_denominators();

/// Numerators at widths 0..4 as tabulated alongside the denominators.
BasketballSeed basketball_initial_numerators();

/// Fifth-order linear recurrence in w with coefficients polynomial in z:
///   D_w = (1+z) D_{w-1} - 2z D_{w-2} - 2z^2 D_{w-3} + (z^3+z^4) D_{w-4} - z^5 D_{w-5}
/// seeded with the five initial denominators (overridable for experiments).
DenomSequence basketball_denominators(std::size_t w_max,
                                      const BasketballSeed& seed = basketball_initial_denominators());

/// F_w from the linear recurrence: D_{w-1} / D_w.
RationalGF basketball_gf_linear(std::size_t w);

/// Soccer denominators Q_0 = 1, Q_1 = 1 - z, Q_w = Q_{w-1} - z Q_{w-2};
/// gf(w) is the bounded Dyck generating function C_w.
DenomSequence soccer_linear(std::size_t w_max);

/// Nonlinear recurrence of the shape
///   X_w = 1 + sum_{k=1..5} c_k X_w X_{w-1} ... X_{w-k+1}
/// Both closed-form recurrences for the strip generating functions fit it.
struct ProductRecurrence {
  std::array<IntPoly, 5> coeffs;  // coeffs[k-1] = c_k

  friend bool operator==(const ProductRecurrence&, const ProductRecurrence&) = default;
};

/// Steps (1,+-1), (2,+-2):
///   c = (-z, 2z, 2z^2, -(z^3+z^4), z^5)
ProductRecurrence theorem1_recurrence();

/// Steps (1,+-1), (p,+-2), with s = z^(p/2) = t^p:
///   c = (-s, z+s, z s + s^2, -(s^3+s^4), s^5)
ProductRecurrence theorem2_recurrence(unsigned p);

/// Solves the recurrence for X_w given X_{w-4}..X_{w-1} (oldest first).
/// Throws chain_too_short or singular_system.
RationalGF solve_product_recurrence(const ProductRecurrence& rec, std::span<const RationalGF> prev4);

RationalGF theorem1_step(std::span<const RationalGF> prev4);
RationalGF theorem2_step(std::span<const RationalGF> prev4, unsigned p);

/// The recurrence evaluated on X_{w-4}..X_w (oldest first) with all
/// denominators cleared. Zero iff the identity holds at that width.
IntPoly product_recurrence_residual(const ProductRecurrence& rec, std::span<const RationalGF> window5);

/// C_w (1 - z C_{w-1}) - 1 with denominators cleared.
IntPoly soccer_residual(const RationalGF& prev, const RationalGF& cur);

struct RecurrenceKind {
  enum class Tag { theorem1, theorem2, soccer };
  Tag tag = Tag::theorem1;
  unsigned p = 2;

  std::string name() const;
};

struct IdentityCheck {
  std::string kind;
  std::size_t w = 0;
  bool applicable = true;
  bool ok = false;
  std::optional<long> residual_degree;  // empty when the residual is zero or not applicable
};

/// Substitutes strip-system generating functions into the chosen recurrence
/// for every w in [w_lo, w_hi]. Widths without enough predecessors are
/// reported as not applicable; failures are reported, never thrown.
std::vector<IdentityCheck> verify_recurrence_identity(RecurrenceKind kind, std::size_t w_lo, std::size_t w_hi);

/// Same, on a caller-supplied chain (entry w is the function at width w).
std::vector<IdentityCheck> verify_recurrence_identity(RecurrenceKind kind, std::span<const RationalGF> chain,
                                                      std::size_t w_lo, std::size_t w_hi);

}  // namespace stripwalk
