#pragma once

#include <cstddef>
#include <vector>

#include "stripwalk/poly.hpp"

namespace stripwalk {

/// Finite prefix of a power series. Entry k is the coefficient of var^k.
struct SeriesVec {
  Var var = Var::t;
  std::vector<BigInt> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }

  /// Even-indexed entries of a t-series, reindexed in z. Throws
  /// parity_violation if an odd entry is nonzero.
  SeriesVec z_view() const;

  friend bool operator==(const SeriesVec&, const SeriesVec&) = default;
};

}  // namespace stripwalk
