#include "stripwalk/strip_system.hpp"

#include "stripwalk/errors.hpp"

namespace stripwalk {

namespace {

RationalGF reciprocal_of_divisor(const RationalGF& divisor, std::size_t width) {
  if (divisor.is_zero()) {
    throw Error(Errc::singular_system, "vanishing divisor at width " + std::to_string(width));
  }
  return inverse(divisor);
}

}  // namespace

StripState base_state() { return StripState{}; }

StripState step_width(const StripState& prev, unsigned p) {
  if (p == 0) throw Error(Errc::invalid_model, "step length p must be positive");
  const IntPoly t1 = IntPoly::t_power(1);
  const IntPoly tp = IntPoly::t_power(p);

  StripState next;
  next.width = prev.width + 1;

  const RationalGF divisor = RationalGF::one() - IntPoly::z_power(1) * prev.F -
                             IntPoly::t_power(p + 1) * (prev.G + prev.H) -
                             IntPoly::t_power(2 * p) * prev.J;
  next.F = reciprocal_of_divisor(divisor, next.width);

  const RationalGF first_up = t1 * prev.F + tp * prev.H;    // irreducible [0 -> 1]
  const RationalGF last_down = t1 * prev.F + tp * prev.G;   // irreducible [1 -> 0]
  next.G = next.F * first_up;
  next.H = next.F * last_down;
  next.J = prev.F + next.G * last_down;
  return next;
}

std::vector<StripState> strip_chain(std::size_t w_max, unsigned p) {
  std::vector<StripState> chain;
  chain.reserve(w_max + 1);
  chain.push_back(base_state());
  for (std::size_t w = 1; w <= w_max; ++w) chain.push_back(step_width(chain.back(), p));
  return chain;
}

RationalGF soccer_step(const RationalGF& prev) {
  const RationalGF divisor = RationalGF::one() - IntPoly::z_power(1) * prev;
  if (divisor.is_zero()) throw Error(Errc::singular_system, "vanishing divisor in soccer step");
  return inverse(divisor);
}

std::vector<RationalGF> soccer_chain(std::size_t w_max) {
  std::vector<RationalGF> chain{RationalGF::one()};
  for (std::size_t w = 1; w <= w_max; ++w) chain.push_back(soccer_step(chain.back()));
  return chain;
}

RationalGF soccer_continued_fraction(std::size_t w) {
  const IntPoly z = IntPoly::z_power(1);
  if (w == 0) return RationalGF::one();
  if (w == 1) return RationalGF::normalize(IntPoly{1}, IntPoly{1} - z);
  // innermost z/(1 - z), then w - 2 levels of z/(1 - x), then 1/(1 - x)
  RationalGF level = RationalGF::normalize(z, IntPoly{1} - z);
  for (std::size_t k = 0; k + 2 < w; ++k) {
    level = RationalGF(z) / (RationalGF::one() - level);
  }
  return RationalGF::one() / (RationalGF::one() - level);
}

RationalGF g_closed_form(std::span<const RationalGF> f_chain) {
  if (f_chain.size() < 4) {
    throw Error(Errc::chain_too_short, "need F_{w-3} .. F_w, got " + std::to_string(f_chain.size()));
  }
  const auto window = f_chain.last(4);
  const RationalGF& f0 = window[3];
  const RationalGF p1 = f0 * window[2];
  const RationalGF p2 = p1 * window[1];
  const RationalGF p3 = p2 * window[0];

  const RationalGF rhs = f0 - RationalGF::one() + IntPoly::z_power(1) * p1 -
                         IntPoly::z_power(2) * p2 + IntPoly::z_power(4) * p3;
  return rhs / RationalGF(IntPoly::monomial(2, 1));
}

}  // namespace stripwalk
