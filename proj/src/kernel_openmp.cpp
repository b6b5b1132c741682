#include <vector>

#include "stripwalk/oracle.hpp"

namespace stripwalk::kernels {

namespace {
// Below this many heights a column is too cheap to split across threads.
constexpr long kMinParallelHeights = 64;
}  // namespace

SeriesVec count_openmp(const WalkModel& model, std::size_t width, std::size_t from, std::size_t to,
                       std::size_t max_xlen, CountMode mode) {
  const std::size_t ring = model.max_dx() + 1;
  const long floor_height = static_cast<long>(std::min(from, to));
  const bool irreducible = mode == CountMode::irreducible;
  const long heights = static_cast<long>(width) + 1;
  const auto& steps = model.steps();

  std::vector<std::vector<BigInt>> cols(ring, std::vector<BigInt>(width + 1));
  cols[0][from] = 1;

  SeriesVec out{Var::t, std::vector<BigInt>(max_xlen + 1)};
  out.coeffs[0] = (!irreducible && from == to) ? 1 : 0;

  for (std::size_t x = 1; x <= max_xlen; ++x) {
    auto& col = cols[x % ring];
#pragma omp parallel for schedule(static) if (heights >= kMinParallelHeights)
    for (long h = 0; h < heights; ++h) {
      BigInt arriving = 0;
      for (const Step& s : steps) {
        if (s.dx > x) continue;
        const long source = h - s.dy;
        if (source < 0 || source >= heights) continue;
        arriving += cols[(x - s.dx) % ring][static_cast<std::size_t>(source)];
      }
      if (h == static_cast<long>(to)) out.coeffs[x] = arriving;
      if (irreducible && h == floor_height) arriving = 0;
      col[static_cast<std::size_t>(h)] = std::move(arriving);
    }
  }
  return out;
}

}  // namespace stripwalk::kernels
