#include "stripwalk/errors.hpp"
#include "stripwalk/oracle.hpp"
#include "stripwalk/series_tools.hpp"

namespace stripwalk {

namespace {

void check_heights(std::size_t width, std::size_t i, std::size_t j) {
  if (i > width || j > width) {
    throw Error(Errc::height_out_of_strip, "endpoint heights " + std::to_string(i) + ", " + std::to_string(j) +
                                               " outside strip of width " + std::to_string(width));
  }
}

}  // namespace

SeriesVec count_walks(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                      std::size_t max_xlen) {
  check_heights(width, i, j);
  return kernels::count_openmp(model, width, i, j, max_xlen, CountMode::all);
}

SeriesVec count_irreducible(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                            std::size_t max_xlen) {
  check_heights(width, i, j);
  return kernels::count_openmp(model, width, i, j, max_xlen, CountMode::irreducible);
}

SeriesVec count_walks_or_zero(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                              std::size_t max_xlen) {
  if (i > width || j > width) return SeriesVec{Var::t, std::vector<BigInt>(max_xlen + 1)};
  return count_walks(model, width, i, j, max_xlen);
}

std::vector<DecompositionCheck> verify_decompositions(std::size_t w_max, std::size_t n_max, unsigned p) {
  const WalkModel model = p == 2 ? WalkModel::basketball() : WalkModel::general_p(p);
  const std::size_t xlen = 2 * n_max;
  const std::size_t len = xlen + 1;

  SeriesVec one{Var::t, std::vector<BigInt>(len)};
  one.coeffs[0] = 1;

  std::vector<DecompositionCheck> out;
  const auto record = [&](const char* identity, std::size_t w, const SeriesVec& lhs, const SeriesVec& rhs) {
    const CompareResult r = compare(lhs, rhs, xlen);
    out.push_back(DecompositionCheck{identity, w, r.equal(), r.first_mismatch});
  };

  for (std::size_t w = 1; w <= w_max; ++w) {
    const auto walks = [&](std::size_t width, std::size_t i, std::size_t j) {
      return count_walks_or_zero(model, width, i, j, xlen);
    };
    const SeriesVec f00 = walks(w, 0, 0), f01 = walks(w, 0, 1), f10 = walks(w, 1, 0), f11 = walks(w, 1, 1);
    const SeriesVec g00 = count_irreducible(model, w, 0, 0, xlen);
    const SeriesVec g01 = count_irreducible(model, w, 0, 1, xlen);
    const SeriesVec g10 = count_irreducible(model, w, 1, 0, xlen);
    // [00], [01], [10], [11] walks one level narrower, i.e. the part of a walk above y = 1
    const SeriesVec n00 = walks(w - 1, 0, 0), n01 = walks(w - 1, 0, 1), n10 = walks(w - 1, 1, 0),
                    n11 = walks(w - 1, 1, 1);

    record("f00_first_return", w, f00, series_add(one, series_mul(f00, g00, len), len));
    record("f10_split", w, f10, series_mul(g10, f00, len));
    record("f01_split", w, f01, series_mul(f00, g01, len));
    record("f11_split", w, f11, series_add(n00, series_mul(g10, f01, len), len));

    SeriesVec g00_rhs = series_shift(n00, 2, len);
    g00_rhs = series_add(g00_rhs, series_shift(n01, p + 1, len), len);
    g00_rhs = series_add(g00_rhs, series_shift(n10, p + 1, len), len);
    g00_rhs = series_add(g00_rhs, series_shift(n11, 2 * p, len), len);
    record("g00_by_end_steps", w, g00, g00_rhs);
    record("g01_by_first_step", w, g01, series_add(series_shift(n00, 1, len), series_shift(n10, p, len), len));
    record("g10_by_last_step", w, g10, series_add(series_shift(n00, 1, len), series_shift(n01, p, len), len));
  }
  return out;
}

}  // namespace stripwalk
