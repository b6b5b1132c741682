#include "stripwalk/series_tools.hpp"

#include <algorithm>
#include <sstream>

#include "stripwalk/errors.hpp"

namespace stripwalk {

SeriesVec SeriesVec::z_view() const {
  if (var == Var::z) return *this;
  SeriesVec out{Var::z, {}};
  out.coeffs.reserve((coeffs.size() + 1) / 2);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k % 2 == 0) {
      out.coeffs.push_back(coeffs[k]);
    } else if (coeffs[k] != 0) {
      throw Error(Errc::parity_violation, "t-series has nonzero odd entry at t^" + std::to_string(k));
    }
  }
  return out;
}

SeriesVec expand(const ExpansionRequest& req) {
  const IntPoly& num = req.gf.num();
  const IntPoly& den = req.gf.den();
  if (den.constant_term() != 1) throw Error(Errc::non_unit_constant_term, "expansion needs den(0) = 1");

  if (req.var == Var::z) {
    if (parity(num) == Parity::odd || parity(num) == Parity::mixed || parity(den) != Parity::even) {
      throw Error(Errc::parity_violation, "z expansion of a function with odd t-powers");
    }
    const std::size_t t_terms = req.terms == 0 ? 0 : 2 * req.terms - 1;
    return expand(ExpansionRequest{req.gf, t_terms, Var::t}).z_view();
  }

  SeriesVec out{Var::t, std::vector<BigInt>(req.terms)};
  const std::size_t dd = den.size();
  for (std::size_t k = 0; k < req.terms; ++k) {
    BigInt c = num[k];
    for (std::size_t i = 1; i < dd && i <= k; ++i) {
      if (den[i] != 0) mpz_submul(c.get_mpz_t(), den[i].get_mpz_t(), out.coeffs[k - i].get_mpz_t());
    }
    out.coeffs[k] = std::move(c);
  }
  return out;
}

CompareResult compare(const SeriesVec& a, const SeriesVec& b, std::size_t upto) {
  if (a.var != b.var) throw Error(Errc::insufficient_terms, "series are in different variables");
  if (a.size() <= upto || b.size() <= upto) {
    throw Error(Errc::insufficient_terms, "comparison up to index " + std::to_string(upto) + " needs " +
                                              std::to_string(upto + 1) + " terms on both sides");
  }
  for (std::size_t k = 0; k <= upto; ++k) {
    if (a.coeffs[k] != b.coeffs[k]) return CompareResult{k};
  }
  return {};
}

namespace {

// Largest height a closed walk of x-length len can reach: climbing to H
// costs at least H / up_slope, descending at least H / down_slope.
std::size_t reachable_height(const WalkModel& model, std::size_t len) {
  // slopes as fractions num/den; keep the steepest of each sign
  long up_n = 0, up_d = 1, down_n = 0, down_d = 1;
  for (const Step& s : model.steps()) {
    const long dy = s.dy, dx = s.dx;
    if (dy > 0 && dy * up_d > up_n * dx) up_n = dy, up_d = dx;
    if (dy < 0 && -dy * down_d > down_n * dx) down_n = -dy, down_d = dx;
  }
  if (up_n == 0 || down_n == 0) return 0;
  // H <= len / (up_d/up_n + down_d/down_n) = len * up_n * down_n / (up_d * down_n + down_d * up_n)
  const long numer = static_cast<long>(len) * up_n * down_n;
  const long denom = up_d * down_n + down_d * up_n;
  return static_cast<std::size_t>(numer / denom);
}

}  // namespace

SeriesVec stabilized_series(const WalkModel& model, std::size_t n_max) {
  const bool z_form = model.closed_walks_even();
  SeriesVec out{z_form ? Var::z : Var::t, std::vector<BigInt>(n_max + 1)};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t len = z_form ? 2 * n : n;
    const std::size_t width = reachable_height(model, len);
    out.coeffs[n] = count_walks(model, width, 0, 0, len).coeffs[len];
  }
  return out;
}

SeriesVec series_add(const SeriesVec& a, const SeriesVec& b, std::size_t len) {
  SeriesVec out{a.var, std::vector<BigInt>(len)};
  for (std::size_t k = 0; k < len; ++k) {
    if (k < a.size()) out.coeffs[k] += a.coeffs[k];
    if (k < b.size()) out.coeffs[k] += b.coeffs[k];
  }
  return out;
}

SeriesVec series_mul(const SeriesVec& a, const SeriesVec& b, std::size_t len) {
  SeriesVec out{a.var, std::vector<BigInt>(len)};
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      mpz_addmul(out.coeffs[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
  }
  return out;
}

SeriesVec series_shift(const SeriesVec& a, std::size_t k, std::size_t len) {
  SeriesVec out{a.var, std::vector<BigInt>(len)};
  for (std::size_t i = 0; i < a.size() && i + k < len; ++i) out.coeffs[i + k] = a.coeffs[i];
  return out;
}

std::string to_bfile(const SeriesVec& s) {
  std::ostringstream os;
  for (std::size_t n = 0; n < s.size(); ++n) os << n << ' ' << s.coeffs[n].get_str() << '\n';
  return os.str();
}

}  // namespace stripwalk
