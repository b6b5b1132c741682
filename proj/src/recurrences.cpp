#include "stripwalk/recurrences.hpp"

#include "stripwalk/errors.hpp"
#include "stripwalk/strip_system.hpp"

namespace stripwalk {

RationalGF DenomSequence::gf(std::size_t w) const {
  if (w >= entries.size()) throw Error(Errc::chain_too_short, "width beyond computed sequence");
  if (w == 0) return RationalGF::normalize(IntPoly{1}, entries[0]);
  return RationalGF::normalize(entries[w - 1], entries[w]);
}

BasketballSeed basketball_initial_denominators() {
  return {
      IntPoly::from_z({1}),
      IntPoly::from_z({1, -1}),
      IntPoly::from_z({1, -2, -3}),
      IntPoly::from_z({1, -3, -5, -2, 1}),
      IntPoly::from_z({1, -4, -6, 2}),
  };
}

BasketballSeed basketball_initial_numerators() {
  return {
      IntPoly::from_z({1}),
      IntPoly::from_z({1}),
      IntPoly::from_z({1, -1}),
      IntPoly::from_z({1, -2, -3}),
      IntPoly::from_z({1, -3, -5, -2, 1}),
  };
}

DenomSequence basketball_denominators(std::size_t w_max, const BasketballSeed& seed) {
  DenomSequence seq{Origin::basketball, {}};
  seq.entries.reserve(w_max + 1);
  for (std::size_t w = 0; w <= w_max && w < seed.size(); ++w) seq.entries.push_back(seed[w]);

  const IntPoly c1 = IntPoly::from_z({1, 1});
  const IntPoly c2 = IntPoly::from_z({0, -2});
  const IntPoly c3 = IntPoly::from_z({0, 0, -2});
  const IntPoly c4 = IntPoly::from_z({0, 0, 0, 1, 1});
  const IntPoly c5 = IntPoly::from_z({0, 0, 0, 0, 0, -1});
  for (std::size_t w = seed.size(); w <= w_max; ++w) {
    const auto& e = seq.entries;
    seq.entries.push_back(c1 * e[w - 1] + c2 * e[w - 2] + c3 * e[w - 3] + c4 * e[w - 4] + c5 * e[w - 5]);
  }
  return seq;
}

RationalGF basketball_gf_linear(std::size_t w) { return basketball_denominators(w).gf(w); }

DenomSequence soccer_linear(std::size_t w_max) {
  DenomSequence seq{Origin::soccer, {IntPoly{1}}};
  if (w_max >= 1) seq.entries.push_back(IntPoly::from_z({1, -1}));
  const IntPoly z = IntPoly::z_power(1);
  for (std::size_t w = 2; w <= w_max; ++w) {
    seq.entries.push_back(seq.entries[w - 1] - z * seq.entries[w - 2]);
  }
  return seq;
}

ProductRecurrence theorem1_recurrence() {
  return {{
      IntPoly::from_z({0, -1}),
      IntPoly::from_z({0, 2}),
      IntPoly::from_z({0, 0, 2}),
      IntPoly::from_z({0, 0, 0, -1, -1}),
      IntPoly::from_z({0, 0, 0, 0, 0, 1}),
  }};
}

ProductRecurrence theorem2_recurrence(unsigned p) {
  if (p == 0) throw Error(Errc::invalid_model, "step length p must be positive");
  const auto s = [p](std::size_t k) { return IntPoly::t_power(k * p); };
  const IntPoly z = IntPoly::z_power(1);
  return {{
      -s(1),
      z + s(1),
      z * s(1) + s(2),
      -(s(3) + s(4)),
      s(5),
  }};
}

RationalGF solve_product_recurrence(const ProductRecurrence& rec, std::span<const RationalGF> prev4) {
  if (prev4.size() < 4) {
    throw Error(Errc::chain_too_short, "need four predecessors, got " + std::to_string(prev4.size()));
  }
  const auto window = prev4.last(4);
  // X_w (1 - c_1 - c_2 X_{w-1} - c_3 X_{w-1} X_{w-2} - ...) = 1
  RationalGF divisor = RationalGF(IntPoly{1} - rec.coeffs[0]);
  RationalGF running = RationalGF::one();
  for (std::size_t k = 1; k < rec.coeffs.size(); ++k) {
    running = running * window[4 - k];
    divisor = divisor - rec.coeffs[k] * running;
  }
  if (divisor.is_zero()) throw Error(Errc::singular_system, "recurrence divisor vanishes");
  return inverse(divisor);
}

RationalGF theorem1_step(std::span<const RationalGF> prev4) {
  return solve_product_recurrence(theorem1_recurrence(), prev4);
}

RationalGF theorem2_step(std::span<const RationalGF> prev4, unsigned p) {
  return solve_product_recurrence(theorem2_recurrence(p), prev4);
}

IntPoly product_recurrence_residual(const ProductRecurrence& rec, std::span<const RationalGF> window5) {
  if (window5.size() < 5) {
    throw Error(Errc::chain_too_short, "need X_{w-4} .. X_w, got " + std::to_string(window5.size()));
  }
  const auto window = window5.last(5);
  // index i = 0 is X_w, i = 4 is X_{w-4}
  const auto num = [&](std::size_t i) -> const IntPoly& { return window[4 - i].num(); };
  const auto den = [&](std::size_t i) -> const IntPoly& { return window[4 - i].den(); };

  // den_suffix[k] = prod_{i >= k} den(i)
  std::array<IntPoly, 6> den_suffix;
  den_suffix[5] = IntPoly{1};
  for (std::size_t k = 5; k-- > 0;) den_suffix[k] = den(k) * den_suffix[k + 1];

  IntPoly residual = den_suffix[0] - num(0) * den_suffix[1];
  IntPoly num_prefix{1};
  for (std::size_t k = 1; k <= 5; ++k) {
    num_prefix = num_prefix * num(k - 1);
    residual = residual + rec.coeffs[k - 1] * num_prefix * den_suffix[k];
  }
  return residual;
}

IntPoly soccer_residual(const RationalGF& prev, const RationalGF& cur) {
  // P_w (Q_{w-1} - z P_{w-1}) - Q_w Q_{w-1}
  return cur.num() * (prev.den() - IntPoly::z_power(1) * prev.num()) - cur.den() * prev.den();
}

std::string RecurrenceKind::name() const {
  switch (tag) {
    case Tag::theorem1: return "theorem1";
    case Tag::theorem2: return "theorem2(p=" + std::to_string(p) + ")";
    case Tag::soccer: return "soccer";
  }
  return "unknown";
}

namespace {

IdentityCheck evaluate(const std::string& name, std::size_t w, const IntPoly& residual) {
  IdentityCheck c{name, w, true, residual.is_zero(), std::nullopt};
  if (!c.ok) c.residual_degree = residual.degree();
  return c;
}

}  // namespace

std::vector<IdentityCheck> verify_recurrence_identity(RecurrenceKind kind, std::span<const RationalGF> chain,
                                                      std::size_t w_lo, std::size_t w_hi) {
  const std::string name = kind.name();
  const std::size_t needed = kind.tag == RecurrenceKind::Tag::soccer ? 1 : 4;
  std::vector<IdentityCheck> out;
  for (std::size_t w = w_lo; w <= w_hi; ++w) {
    if (w < needed || w >= chain.size()) {
      out.push_back(IdentityCheck{name, w, false, false, std::nullopt});
      continue;
    }
    switch (kind.tag) {
      case RecurrenceKind::Tag::soccer:
        out.push_back(evaluate(name, w, soccer_residual(chain[w - 1], chain[w])));
        break;
      case RecurrenceKind::Tag::theorem1:
        out.push_back(evaluate(name, w, product_recurrence_residual(theorem1_recurrence(), chain.subspan(w - 4, 5))));
        break;
      case RecurrenceKind::Tag::theorem2:
        out.push_back(
            evaluate(name, w, product_recurrence_residual(theorem2_recurrence(kind.p), chain.subspan(w - 4, 5))));
        break;
    }
  }
  return out;
}

std::vector<IdentityCheck> verify_recurrence_identity(RecurrenceKind kind, std::size_t w_lo, std::size_t w_hi) {
  std::vector<RationalGF> chain;
  if (kind.tag == RecurrenceKind::Tag::soccer) {
    chain = soccer_chain(w_hi);
  } else {
    const unsigned p = kind.tag == RecurrenceKind::Tag::theorem1 ? 2 : kind.p;
    for (auto& s : strip_chain(w_hi, p)) chain.push_back(std::move(s.F));
  }
  return verify_recurrence_identity(kind, chain, w_lo, w_hi);
}

}  // namespace stripwalk
