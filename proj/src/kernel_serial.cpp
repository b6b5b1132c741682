#include <vector>

#include "stripwalk/oracle.hpp"

namespace stripwalk::kernels {

SeriesVec count_serial(const WalkModel& model, std::size_t width, std::size_t from, std::size_t to,
                       std::size_t max_xlen, CountMode mode) {
  const std::size_t ring = model.max_dx() + 1;
  const std::size_t floor_height = std::min(from, to);
  const bool irreducible = mode == CountMode::irreducible;

  // cols[x % ring][h]: walks reaching (x, h); pushed forward once column x is final
  std::vector<std::vector<BigInt>> cols(ring, std::vector<BigInt>(width + 1));
  cols[0][from] = 1;

  SeriesVec out{Var::t, std::vector<BigInt>(max_xlen + 1)};
  for (std::size_t x = 0; x <= max_xlen; ++x) {
    auto& col = cols[x % ring];
    if (x == 0) {
      out.coeffs[0] = (!irreducible && from == to) ? 1 : 0;
    } else {
      out.coeffs[x] = col[to];
      if (irreducible) col[floor_height] = 0;
    }
    // the slot that column x + max_dx will use held column x - 1, which is done
    for (auto& v : cols[(x + ring - 1) % ring]) v = 0;

    for (std::size_t h = 0; h <= width; ++h) {
      if (col[h] == 0) continue;
      for (const Step& s : model.steps()) {
        const long target = static_cast<long>(h) + s.dy;
        if (target < 0 || target > static_cast<long>(width)) continue;
        cols[(x + s.dx) % ring][static_cast<std::size_t>(target)] += col[h];
      }
    }
  }
  return out;
}

}  // namespace stripwalk::kernels
