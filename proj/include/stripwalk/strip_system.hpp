#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stripwalk/rational.hpp"

namespace stripwalk {

/// Generating functions of walks inside the strip 0 <= y <= width, by
/// endpoint heights: F = [0 -> 0], G = [0 -> 1], H = [1 -> 0], J = [1 -> 1].
struct StripState {
  std::size_t width = 0;
  RationalGF F;
  RationalGF G = RationalGF::zero();
  RationalGF H = RationalGF::zero();
  RationalGF J = RationalGF::zero();
};

/// Width 0: only the empty walk, so F = 1 and there is no line y = 1.
StripState base_state();

/// One width increment of the first-passage system for steps (1,+-1) and
/// (p,+-2), weight t per unit of x. p = 2 is the basketball model.
///
///   F_w = 1 / (1 - t^2 F - t^(p+1) G - t^(p+1) H - t^(2p) J)
///   G_w = F_w (t F + t^p H)
///   H_w = F_w (t F + t^p G)
///   J_w = F + G_w (t F + t^p G)
///
/// where the right-hand sides use the previous width's functions.
/// Throws singular_system if the F divisor vanishes.
StripState step_width(const StripState& prev, unsigned p = 2);

/// base_state() followed by w_max applications of step_width; entry w has width w.
std::vector<StripState> strip_chain(std::size_t w_max, unsigned p = 2);

/// Dyck walks: C_w = 1 / (1 - z C_{w-1}). Throws singular_system.
RationalGF soccer_step(const RationalGF& prev);

/// C_0 .. C_{w_max} by iterating soccer_step from C_0 = 1.
std::vector<RationalGF> soccer_chain(std::size_t w_max);

/// C_w as the terminating continued fraction
///   1/(1 - z/(1 - z/(... z/(1 - z))))
/// evaluated from the innermost level outward.
RationalGF soccer_continued_fraction(std::size_t w);

/// G_w from F_{w-3}, F_{w-2}, F_{w-1}, F_w alone (the last four entries of
/// f_chain, oldest first):
///   2 t G_w = F_w - 1 + z F_w F_{w-1} - z^2 F_w F_{w-1} F_{w-2}
///             + z^4 F_w F_{w-1} F_{w-2} F_{w-3}
/// Throws chain_too_short with fewer than four entries.
RationalGF g_closed_form(std::span<const RationalGF> f_chain);

}  // namespace stripwalk
