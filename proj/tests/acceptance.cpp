// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every comparison is exact (arbitrary-precision integers, normalized
// rationals); there are no numeric tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stripwalk/oracle.hpp"
#include "stripwalk/recurrences.hpp"
#include "stripwalk/series_tools.hpp"
#include "stripwalk/strip_system.hpp"

using namespace stripwalk;

namespace {

constexpr std::size_t kMaxWidth = 12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

const std::vector<StripState>& states() {
  static const std::vector<StripState> s = strip_chain(kMaxWidth);
  return s;
}

std::vector<RationalGF> f_values() {
  std::vector<RationalGF> out;
  for (const auto& s : states()) out.push_back(s.F);
  return out;
}

BigInt catalan(unsigned n) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

Outcome tabulated_gfs() {
  Outcome o;
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> table{
      {{1}, {1}},
      {{1}, {1, -1}},
      {{1, -1}, {1, -2, -3}},
      {{1, -2, -3}, {1, -3, -5, -2, 1}},
      {{1, -3, -5, -2, 1}, {1, -4, -6, 2}},
  };
  for (std::size_t w = 0; w < table.size(); ++w) {
    const auto& f = states()[w].F;
    const auto to_big = [](const std::vector<long>& v) { return std::vector<BigInt>(v.begin(), v.end()); };
    if (f.num().z_coeffs() != to_big(table[w].first) || f.den().z_coeffs() != to_big(table[w].second)) {
      o.fail("F_" + std::to_string(w) + " = (" + render(f.num(), Var::z) + ")/(" + render(f.den(), Var::z) + ")");
    }
  }
  return o;
}

Outcome linear_recurrence_agreement() {
  Outcome o;
  const DenomSequence az = basketball_denominators(kMaxWidth);
  for (std::size_t w = 0; w <= kMaxWidth; ++w) {
    if (!(az.gf(w) == states()[w].F)) o.fail("w=" + std::to_string(w));
  }
  return o;
}

Outcome nonlinear_identity() {
  Outcome o;
  const auto fs = f_values();
  for (const auto& c : verify_recurrence_identity({RecurrenceKind::Tag::theorem1, 2}, fs, 4, kMaxWidth)) {
    if (!c.applicable || !c.ok) o.fail("w=" + std::to_string(c.w) + " residual degree " +
                                       std::to_string(c.residual_degree.value_or(-1)));
  }
  return o;
}

Outcome generalized_steps() {
  Outcome o;
  if (!(theorem2_recurrence(2) == theorem1_recurrence())) o.fail("p=2 coefficients differ from the basketball ones");
  for (unsigned p : {1u, 3u}) {
    std::vector<RationalGF> gen;
    for (auto& s : strip_chain(3, p)) gen.push_back(s.F);
    for (std::size_t w = 4; w <= 8; ++w) gen.push_back(theorem2_step(gen, p));
    for (std::size_t w = 4; w <= 8; ++w) {
      const CompareResult r = compare(expand(gen[w], 21), count_walks(WalkModel::general_p(p), w, 0, 0, 20), 20);
      if (!r.equal()) {
        o.fail("p=" + std::to_string(p) + " w=" + std::to_string(w) + " mismatch at t^" +
               std::to_string(*r.first_mismatch));
      }
    }
  }
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const WalkModel b = WalkModel::basketball();
  for (std::size_t w = 0; w <= 8; ++w) {
    const CompareResult r = compare(expand(states()[w].F, 13, Var::z), count_walks(b, w, 0, 0, 24).z_view(), 12);
    if (!r.equal()) o.fail("w=" + std::to_string(w) + " mismatch at z^" + std::to_string(*r.first_mismatch));
  }
  const SeriesVec w2 = count_walks(b, 2, 0, 0, 10).z_view();
  if (w2.coeffs != std::vector<BigInt>{1, 1, 5, 13, 41, 121}) o.fail("width-2 prefix");
  return o;
}

Outcome decompositions() {
  Outcome o;
  for (const auto& c : verify_decompositions(6, 10)) {
    if (!c.ok) o.fail(c.identity + " at w=" + std::to_string(c.w));
  }
  return o;
}

Outcome g_equals_h() {
  Outcome o;
  for (const auto& s : states()) {
    if (!(s.G == s.H)) o.fail("w=" + std::to_string(s.width));
  }
  return o;
}

Outcome g_from_f() {
  Outcome o;
  const auto fs = f_values();
  for (std::size_t w = 3; w <= kMaxWidth; ++w) {
    if (!(g_closed_form(std::span(fs).first(w + 1)) == states()[w].G)) o.fail("w=" + std::to_string(w));
  }
  return o;
}

Outcome shared_denominator() {
  Outcome o;
  for (std::size_t w = 1; w <= kMaxWidth; ++w) {
    const StripState& s = states()[w];
    for (const auto& [name, gf] : {std::pair{"G", &s.G}, std::pair{"H", &s.H}, std::pair{"J", &s.J}}) {
      if (!(gf->den() == s.F.den())) {
        o.fail("w=" + std::to_string(w) + ": den " + name + " = " + render(gf->den(), Var::z) + " vs den F = " +
               render(s.F.den(), Var::z));
      }
    }
  }
  return o;
}

Outcome soccer_baseline() {
  Outcome o;
  const auto chain = soccer_chain(kMaxWidth);
  const DenomSequence linear = soccer_linear(kMaxWidth);
  for (std::size_t w = 0; w <= kMaxWidth; ++w) {
    if (!(chain[w] == soccer_continued_fraction(w)) || !(chain[w] == linear.gf(w))) o.fail("w=" + std::to_string(w));
  }
  const SeriesVec stable = stabilized_series(WalkModel::soccer(), 8);
  for (unsigned n = 0; n <= 8; ++n) {
    if (stable.coeffs[n] != catalan(n)) o.fail("Catalan n=" + std::to_string(n));
  }
  return o;
}

Outcome stabilization() {
  Outcome o;
  const WalkModel b = WalkModel::basketball();
  std::vector<SeriesVec> rows;
  for (std::size_t w = 0; w <= kMaxWidth; ++w) rows.push_back(count_walks(b, w, 0, 0, 20));
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t w = n + 1; w <= kMaxWidth; ++w) {
      if (rows[w].coeffs[2 * n] != rows[n].coeffs[2 * n]) {
        o.fail("n=" + std::to_string(n) + " w=" + std::to_string(w));
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  F_0..F_4 equal the tabulated generating functions", tabulated_gfs},
      {"2  linear recurrence F_w = strip-system F_w, 0<=w<=12", linear_recurrence_agreement},
      {"3  fifth-order nonlinear recurrence residual is zero, 4<=w<=12", nonlinear_identity},
      {"4  generalized steps: p=2 reduces termwise; p=1,3 series match oracle to t^20, 4<=w<=8", generalized_steps},
      {"5  expanded F_w = DP counts, 0<=w<=8, z-degree<=12; width 2 begins 1 1 5 13 41 121", oracle_agreement},
      {"6  first-passage decompositions hold, 1<=w<=6, z-degree<=10", decompositions},
      {"7a G_w = H_w, 0<=w<=12", g_equals_h},
      {"7b G_w from F alone reproduces G_w, 3<=w<=12", g_from_f},
      {"7c F, G, H, J share one normalized denominator, 1<=w<=12", shared_denominator},
      {"8  soccer: iteration = continued fraction = linear recurrence; stabilized = Catalan, n<=8", soccer_baseline},
      {"9  basketball z^n coefficient constant for w>=n, n<=10, w<=12", stabilization},
  };

  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& [label, check] : criteria) {
    const Outcome o = check();
    std::printf("[%s] %s", o.pass ? "PASS" : "FAIL", label.c_str());
    if (!o.pass) std::printf("\n       %s", o.detail.c_str());
    std::printf("\n");
    failures += o.pass ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.2fs)\n", failures, criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
