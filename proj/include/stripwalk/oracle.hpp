#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stripwalk/series_vec.hpp"

namespace stripwalk {

struct Step {
  unsigned dx = 1;
  int dy = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Finite step set; each step contributes t^dx to a walk's weight.
class WalkModel {
 public:
  /// Throws invalid_model for an empty list, dx == 0 or duplicates.
  WalkModel(std::string name, std::vector<Step> steps);

  static WalkModel soccer();
  static WalkModel basketball();
  /// (1,+-1), (p,+-2)
  static WalkModel general_p(unsigned p);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  unsigned max_dx() const noexcept;

  /// True when dx and dy have the same parity for every step, so closed
  /// walks only have even x-length and the z form applies.
  bool closed_walks_even() const noexcept;

 private:
  std::string name_;
  std::vector<Step> steps_;
};

enum class CountMode { all, irreducible };

namespace kernels {

/// Reference counter: forward (push) DP over x-columns, single thread.
SeriesVec count_serial(const WalkModel& model, std::size_t width, std::size_t from, std::size_t to,
                       std::size_t max_xlen, CountMode mode);

/// Backward (pull) DP; each x-column is filled in parallel over heights.
SeriesVec count_openmp(const WalkModel& model, std::size_t width, std::size_t from, std::size_t to,
                       std::size_t max_xlen, CountMode mode);

}  // namespace kernels

/// Entry L counts walks from height i to height j of x-length L that stay in
/// [0, width]. Entries 0..max_xlen. Throws height_out_of_strip.
SeriesVec count_walks(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                      std::size_t max_xlen);

/// Only walks visiting min(i, j) at the matching endpoint and nowhere else
/// (for i == j: at both ends and nowhere between). The empty walk does not
/// count.
SeriesVec count_irreducible(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                            std::size_t max_xlen);

/// count_walks, or the zero series when an endpoint lies outside the strip.
/// Walks between heights that do not exist are absent, not an error, in the
/// decomposition identities.
SeriesVec count_walks_or_zero(const WalkModel& model, std::size_t width, std::size_t i, std::size_t j,
                              std::size_t max_xlen);

struct DecompositionCheck {
  std::string identity;
  std::size_t w = 0;
  bool ok = false;
  std::optional<std::size_t> first_mismatch;  // t-exponent
};

/// Checks the first-passage decompositions of [00], [01], [10], [11] walks
/// and of the irreducible walks, coefficientwise on oracle series through
/// z^n_max, for widths 1..w_max. p selects the (p,+-2) step family.
std::vector<DecompositionCheck> verify_decompositions(std::size_t w_max, std::size_t n_max, unsigned p = 2);

}  // namespace stripwalk
