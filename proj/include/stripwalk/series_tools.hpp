#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "stripwalk/oracle.hpp"
#include "stripwalk/rational.hpp"
#include "stripwalk/series_vec.hpp"

namespace stripwalk {

struct ExpansionRequest {
  RationalGF gf;
  std::size_t terms = 24;
  Var var = Var::t;
};

/// First req.terms power-series coefficients of gf in req.var, using the
/// linear recurrence the denominator imposes on them:
///   c_k = num_k - sum_{i >= 1} den_i c_{k-i}
/// Throws parity_violation when the z form is requested for a function with
/// odd t-powers.
SeriesVec expand(const ExpansionRequest& req);

inline SeriesVec expand(const RationalGF& gf, std::size_t terms, Var var = Var::t) {
  return expand(ExpansionRequest{gf, terms, var});
}

struct CompareResult {
  std::optional<std::size_t> first_mismatch;

  bool equal() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares entries 0..upto. Throws insufficient_terms if either side is
/// shorter, or the two are in different variables.
CompareResult compare(const SeriesVec& a, const SeriesVec& b, std::size_t upto);

/// w = infinity sequence: the coefficient of z^n (or t^n) is taken at the
/// smallest width no closed walk of that length can exceed, which equals n
/// for the soccer and basketball models. Entries 0..n_max, in z when every
/// closed walk has even x-length.
SeriesVec stabilized_series(const WalkModel& model, std::size_t n_max);

/// Truncated series arithmetic on t-series; results have exactly len entries.
SeriesVec series_add(const SeriesVec& a, const SeriesVec& b, std::size_t len);
SeriesVec series_mul(const SeriesVec& a, const SeriesVec& b, std::size_t len);
/// Multiply by t^k.
SeriesVec series_shift(const SeriesVec& a, std::size_t k, std::size_t len);

/// "n a(n)" per line starting at n = 0.
std::string to_bfile(const SeriesVec& s);

}  // namespace stripwalk
