#include "stripwalk/cli.hpp"

#include <algorithm>
#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "stripwalk/errors.hpp"
#include "stripwalk/recurrences.hpp"
#include "stripwalk/series_tools.hpp"
#include "stripwalk/strip_system.hpp"

namespace stripwalk::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WidthRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

std::size_t parse_count(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

WidthRange parse_width(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") {
    throw UsageError("--width inf is not supported; use the 'stabilized' command for the unbounded strip");
  }
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t w = parse_count(text, "--width");
    return {w, w};
  }
  WidthRange r{parse_count(text.substr(0, dots), "--width"), parse_count(text.substr(dots + 2), "--width")};
  if (r.lo > r.hi) throw UsageError("--width range " + text + " is empty");
  return r;
}

Model parse_model(const std::string& name, const std::optional<unsigned>& p) {
  Model m = Model::basketball;
  if (name == "soccer") {
    m = Model::soccer;
  } else if (name == "basketball") {
    m = Model::basketball;
  } else if (name == "general-p") {
    m = Model::general_p;
  } else {
    throw UsageError("unknown model '" + name + "'");
  }
  if (p && m != Model::general_p) throw UsageError("--p is only accepted with --model general-p");
  if (!p && m == Model::general_p) throw UsageError("--model general-p needs --p");
  if (p && *p == 0) throw UsageError("--p must be positive");
  return m;
}

unsigned step_length(Model m, const std::optional<unsigned>& p) { return m == Model::general_p ? *p : 2; }

WalkModel walk_model(Model m, const std::optional<unsigned>& p) {
  switch (m) {
    case Model::soccer: return WalkModel::soccer();
    case Model::basketball: return WalkModel::basketball();
    case Model::general_p: return WalkModel::general_p(*p);
  }
  return WalkModel::basketball();
}

std::string model_label(Model m, const std::optional<unsigned>& p) {
  switch (m) {
    case Model::soccer: return "soccer";
    case Model::basketball: return "basketball";
    case Model::general_p: return "general-p(p=" + std::to_string(*p) + ")";
  }
  return "";
}

std::string join(const SeriesVec& s) {
  std::string line;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) line += ' ';
    line += s.coeffs[k].get_str();
  }
  return line;
}

BasketballSeed read_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_array() || j.size() != 5) throw UsageError(path + ": expected an array of five polynomials");
  BasketballSeed seed;
  for (std::size_t k = 0; k < 5; ++k) seed[k] = poly_from_json(j[k]);
  return seed;
}

// ---------------------------------------------------------------------------
// verify

struct Report {
  json checks = json::array();
  json findings = json::array();
  json notes = json::array();

  void add(json entry) { checks.push_back(std::move(entry)); }
  void add(const std::string& kind, std::size_t w, bool ok) { checks.push_back({{"kind", kind}, {"w", w}, {"ok", ok}}); }
};

std::vector<RationalGF> f_chain(const std::vector<StripState>& states) {
  std::vector<RationalGF> out;
  for (const auto& s : states) out.push_back(s.F);
  return out;
}

std::size_t first_width(const std::optional<std::size_t>& min_width, std::size_t fallback) {
  return min_width.value_or(fallback);
}

void verify_theorem1(const VerifyOptions& o, std::optional<std::size_t> lo, Report& r) {
  const auto chain = f_chain(strip_chain(o.max_width));
  for (const auto& c :
       verify_recurrence_identity({RecurrenceKind::Tag::theorem1, 2}, chain, first_width(lo, 4), o.max_width)) {
    r.add(to_json(c));
  }
}

void verify_theorem2(const VerifyOptions& o, unsigned p, std::optional<std::size_t> lo, Report& r) {
  const RecurrenceKind kind{RecurrenceKind::Tag::theorem2, p};
  const auto states = strip_chain(o.max_width, p);
  const auto chain = f_chain(states);
  for (const auto& c : verify_recurrence_identity(kind, chain, first_width(lo, 4), o.max_width)) r.add(to_json(c));

  // X_0..X_3 from the strip system, the rest from the recurrence alone
  std::vector<RationalGF> generated(chain.begin(), chain.begin() + std::min<std::size_t>(4, chain.size()));
  for (std::size_t w = 4; w <= o.max_width; ++w) generated.push_back(theorem2_step(generated, p));

  const WalkModel model = p == 2 ? WalkModel::basketball() : WalkModel::general_p(p);
  const std::size_t xlen = 2 * o.terms;
  for (std::size_t w = 4; w <= o.max_width; ++w) {
    const SeriesVec got = expand(generated[w], xlen + 1);
    const SeriesVec want = count_walks(model, w, 0, 0, xlen);
    const CompareResult cmp = compare(got, want, xlen);
    json entry{{"kind", "theorem2_series(p=" + std::to_string(p) + ")"}, {"w", w}, {"ok", cmp.equal()}};
    entry["first_mismatch"] = cmp.first_mismatch ? json(*cmp.first_mismatch) : json(nullptr);
    r.add(std::move(entry));
  }
  if (p == 2) {
    const bool same = theorem2_recurrence(2) == theorem1_recurrence();
    r.add(json{{"kind", "theorem2_reduces_to_theorem1"}, {"w", nullptr}, {"ok", same}});
    if (same) r.notes.push_back("theorem2 at p=2 reduces to theorem1");
  }
}

void verify_theorem3(const VerifyOptions& o, Report& r) {
  const BasketballSeed seed = o.az_seed.value_or(basketball_initial_denominators());
  const DenomSequence az = basketball_denominators(o.max_width, seed);
  const auto states = strip_chain(o.max_width);
  for (std::size_t w = 0; w <= o.max_width; ++w) {
    bool ok = false;
    try {
      ok = az.gf(w) == states[w].F;
    } catch (const Error&) {
      ok = false;  // a seed that cannot be normalized is a failed check
    }
    r.add("theorem3", w, ok);
  }
  const BasketballSeed numerators = basketball_initial_numerators();
  for (std::size_t w = 1; w < numerators.size() && w <= o.max_width; ++w) {
    r.add("numerator_is_previous_denominator", w, numerators[w] == seed[w - 1]);
  }
}

void verify_soccer(const VerifyOptions& o, Report& r) {
  const auto chain = soccer_chain(o.max_width);
  for (const auto& c : verify_recurrence_identity({RecurrenceKind::Tag::soccer, 2}, chain, 1, o.max_width)) {
    r.add(to_json(c));
  }
  const DenomSequence linear = soccer_linear(o.max_width);
  for (std::size_t w = 0; w <= o.max_width; ++w) {
    r.add("soccer_three_way", w, chain[w] == soccer_continued_fraction(w) && chain[w] == linear.gf(w));
  }
}

void verify_decomposition_identities(const VerifyOptions& o, Report& r) {
  for (const auto& c : verify_decompositions(o.max_width, o.terms, o.p)) r.add(to_json(c));
}

bool divides(const IntPoly& d, const IntPoly& a) {
  try {
    exact_div(a, d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void verify_structure(const VerifyOptions& o, Report& r) {
  const auto states = strip_chain(o.max_width);
  const auto chain = f_chain(states);
  const DenomSequence az = basketball_denominators(o.max_width, o.az_seed.value_or(basketball_initial_denominators()));
  const IntPoly t = IntPoly::t_power(1);

  for (std::size_t w = 0; w <= o.max_width; ++w) {
    const StripState& s = states[w];
    r.add("g_equals_h", w, s.G == s.H);

    const bool parity_ok = s.F.parity() == Parity::even &&
                           (s.G.parity() == Parity::odd || s.G.is_zero()) &&
                           (s.H.parity() == Parity::odd || s.H.is_zero()) &&
                           (s.J.parity() == Parity::even || s.J.is_zero());
    r.add("parity", w, parity_ok);
    if (w >= 3) {
      r.add("g_closed_form", w, g_closed_form(std::span(chain).subspan(0, w + 1)) == s.G);
    }
    if (w >= 1) {
      const StripState& prev = states[w - 1];
      const RationalGF j_check = s.J - prev.F - s.G * (t * prev.F + IntPoly::z_power(1) * prev.G);
      r.add("j_consistency", w, j_check.is_zero());

      bool common = true;
      for (const RationalGF* x : {&s.F, &s.G, &s.H, &s.J}) common = common && divides(x->den(), az.entries[w]);
      r.add("common_denominator", w, common);

      const bool shared = s.G.den() == s.F.den() && s.H.den() == s.F.den() && s.J.den() == s.F.den();
      json f{{"kind", "shared_denominator"}, {"w", w}, {"holds", shared}};
      if (!shared) {
        f["den_F"] = render(s.F.den(), Var::z);
        f["den_G"] = render(s.G.den(), Var::z);
        f["den_J"] = render(s.J.den(), Var::z);
      }
      r.findings.push_back(std::move(f));

      const IntPoly g = gcd(az.entries[w - 1], az.entries[w]);
      r.findings.push_back({{"kind", "numerator_denominator_gcd_degree"}, {"w", w}, {"degree", g.degree()}});
    }
  }
}

void verify_oracle(const VerifyOptions& o, Report& r) {
  const auto states = strip_chain(o.max_width);
  const WalkModel model = WalkModel::basketball();
  for (std::size_t w = 0; w <= o.max_width; ++w) {
    const SeriesVec got = expand(states[w].F, o.terms, Var::z);
    const SeriesVec want = count_walks(model, w, 0, 0, 2 * (o.terms - 1)).z_view();
    r.add("oracle_agreement", w, compare(got, want, o.terms - 1).equal());
  }
}


json build_report(const VerifyOptions& o, std::optional<std::size_t> min_width, bool p_given) {
  static const std::vector<std::string> kinds{"theorem1", "theorem2",  "theorem3", "soccer",
                                              "decompositions", "structure", "oracle", "all"};
  if (std::find(kinds.begin(), kinds.end(), o.which) == kinds.end()) {
    throw UsageError("unknown --which '" + o.which + "'");
  }
  if (o.terms == 0) throw UsageError("--terms must be positive");
  const bool all = o.which == "all";
  Report r;
  if (all || o.which == "theorem1") verify_theorem1(o, min_width, r);
  if (all || o.which == "theorem2") {
    if (p_given) {
      verify_theorem2(o, o.p, min_width, r);
    } else {
      for (unsigned p : {1u, 2u, 3u}) verify_theorem2(o, p, min_width, r);
    }
  }
  if (all || o.which == "theorem3") verify_theorem3(o, r);
  if (all || o.which == "soccer") verify_soccer(o, r);
  if (all || o.which == "decompositions") verify_decomposition_identities(o, r);
  if (all || o.which == "structure") verify_structure(o, r);
  if (all || o.which == "oracle") verify_oracle(o, r);

  bool ok = true;
  for (const auto& c : r.checks) {
    if (c.contains("applicable") && !c["applicable"].get<bool>()) continue;
    ok = ok && c["ok"].get<bool>();
  }
  return json{{"command", "verify"}, {"which", o.which},   {"max_width", o.max_width}, {"terms", o.terms},
              {"ok", ok},            {"checks", r.checks}, {"findings", r.findings},   {"notes", r.notes}};
}

}  // namespace

json build_verify_report(const VerifyOptions& o) { return build_report(o, std::nullopt, true); }

namespace {

// ---------------------------------------------------------------------------
// gf / series / table / stabilized

struct GfResult {
  std::size_t w;
  RationalGF gf;
};

std::vector<GfResult> compute_gfs(Model m, const std::optional<unsigned>& p, const std::string& fn,
                                  const std::string& method, WidthRange range) {
  if (fn != "F" && fn != "G" && fn != "H" && fn != "J") throw UsageError("--function must be F, G, H or J");
  if (m == Model::soccer && fn != "F") throw UsageError("the soccer model only has F");
  if (method != "system" && method != "linear") throw UsageError("--method must be system or linear");
  if (method == "linear" && (m == Model::general_p || fn != "F")) {
    throw UsageError("--method linear is available for F of the soccer and basketball models");
  }

  std::vector<GfResult> out;
  if (m == Model::soccer) {
    const auto chain = soccer_chain(range.hi);
    const DenomSequence lin = soccer_linear(range.hi);
    for (std::size_t w = range.lo; w <= range.hi; ++w) out.push_back({w, method == "linear" ? lin.gf(w) : chain[w]});
    return out;
  }
  if (method == "linear") {
    const DenomSequence az = basketball_denominators(range.hi);
    for (std::size_t w = range.lo; w <= range.hi; ++w) out.push_back({w, az.gf(w)});
    return out;
  }
  const auto states = strip_chain(range.hi, step_length(m, p));
  for (std::size_t w = range.lo; w <= range.hi; ++w) {
    const StripState& s = states[w];
    const RationalGF& pick = fn == "F" ? s.F : fn == "G" ? s.G : fn == "H" ? s.H : s.J;
    out.push_back({w, pick});
  }
  return out;
}

Var pick_var(const std::string& requested, const RationalGF& gf, const std::string& label, std::ostream& err) {
  const bool even = natural_var(gf.num()) == Var::z && natural_var(gf.den()) == Var::z;
  if (requested == "t") return Var::t;
  if (requested == "z") {
    if (!even) throw UsageError(label + " has odd powers of t and has no z form");
    return Var::z;
  }
  if (requested != "auto") throw UsageError("--var must be auto, t or z");
  if (!even) err << "note: " << label << " has odd powers of t = z^(1/2); shown in t\n";
  return even ? Var::z : Var::t;
}

int cmd_gf(Model m, const std::optional<unsigned>& p, const std::string& width, const std::string& fn,
           const std::string& method, const std::string& var, const std::string& format, std::ostream& out,
           std::ostream& err) {
  const WidthRange range = parse_width(width);
  const auto results = compute_gfs(m, p, fn, method, range);
  json arr = json::array();
  std::ostringstream text;
  for (const auto& [w, gf] : results) {
    const std::string label = fn + "_" + std::to_string(w);
    const Var v = pick_var(var, gf, label, err);
    if (format == "json") {
      json j{{"model", model_label(m, p)}, {"function", fn}, {"width", w}};
      j["num"] = poly_to_json(gf.num(), v);
      j["den"] = poly_to_json(gf.den(), v);
      arr.push_back(std::move(j));
    } else {
      if (range.lo != range.hi) text << "w=" << w << '\n';
      text << "num: " << render(gf.num(), v) << '\n' << "den: " << render(gf.den(), v) << '\n';
    }
  }
  if (format == "json") {
    out << (range.lo == range.hi ? arr[0] : arr).dump(2) << '\n';
  } else if (format == "text") {
    out << text.str();
  } else {
    throw UsageError("gf supports --format text or json");
  }
  return 0;
}

void print_series(const SeriesVec& s, const std::string& format, const std::string& prefix, json extra,
                  std::ostream& out) {
  if (format == "json") {
    extra["series"] = series_to_json(s);
    out << extra.dump(2) << '\n';
  } else if (format == "bfile") {
    out << to_bfile(s);
  } else if (format == "text") {
    out << prefix << join(s) << '\n';
  } else {
    throw UsageError("--format must be text, json or bfile");
  }
}

int cmd_series(Model m, const std::optional<unsigned>& p, const std::string& width, std::size_t terms,
               const std::string& method, const std::string& format, std::ostream& out, std::ostream& err) {
  const WidthRange range = parse_width(width);
  if (terms == 0) throw UsageError("--terms must be positive");
  if (method != "expand" && method != "oracle") throw UsageError("--method must be expand or oracle");
  if (format == "bfile" && range.lo != range.hi) throw UsageError("bfile output needs a single width");
  const WalkModel model = walk_model(m, p);
  const bool z_form = model.closed_walks_even();
  if (!z_form) err << "note: " << model.name() << " has odd-length closed walks; series is in t = z^(1/2)\n";
  const std::size_t xlen = z_form ? 2 * (terms - 1) : terms - 1;

  const auto gfs = method == "expand" ? compute_gfs(m, p, "F", "system", range) : std::vector<GfResult>{};
  json arr = json::array();
  for (std::size_t w = range.lo; w <= range.hi; ++w) {
    SeriesVec s = method == "expand" ? expand(gfs[w - range.lo].gf, xlen + 1)
                                     : count_walks(model, w, 0, 0, xlen);
    if (z_form) s = s.z_view();
    const std::string prefix = range.lo == range.hi ? "" : "w=" + std::to_string(w) + ": ";
    if (format == "json" && range.lo != range.hi) {
      arr.push_back({{"model", model.name()}, {"width", w}, {"series", series_to_json(s)}});
    } else {
      print_series(s, format, prefix, {{"model", model.name()}, {"width", w}}, out);
    }
  }
  if (!arr.empty()) out << arr.dump(2) << '\n';
  return 0;
}

int cmd_table(Model m, const std::optional<unsigned>& p, std::size_t max_width, std::size_t terms,
              const std::string& format, std::ostream& out) {
  if (terms == 0) throw UsageError("--terms must be positive");
  const WalkModel model = walk_model(m, p);
  const bool z_form = model.closed_walks_even();
  const std::size_t xlen = z_form ? 2 * (terms - 1) : terms - 1;

  std::vector<SeriesVec> rows(max_width + 1);
  const long n_rows = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long w = 0; w < n_rows; ++w) {
    SeriesVec s = kernels::count_serial(model, static_cast<std::size_t>(w), 0, 0, xlen, CountMode::all);
    rows[static_cast<std::size_t>(w)] = z_form ? s.z_view() : std::move(s);
  }

  if (format == "json") {
    json j{{"model", model.name()}, {"var", z_form ? "z" : "t"}, {"rows", json::array()}};
    for (std::size_t w = 0; w < rows.size(); ++w) {
      json coeffs = json::array();
      for (const auto& c : rows[w].coeffs) coeffs.push_back(c.get_str());
      j["rows"].push_back({{"w", w}, {"coeffs", coeffs}});
    }
    out << j.dump(2) << '\n';
  } else if (format == "text") {
    out << "# " << model.name() << ": rows w = 0.." << max_width << ", columns n = 0.." << terms - 1 << '\n';
    for (std::size_t w = 0; w < rows.size(); ++w) out << "w=" << w << ": " << join(rows[w]) << '\n';
  } else {
    throw UsageError("table supports --format text or json");
  }
  return 0;
}

int cmd_stabilized(Model m, const std::optional<unsigned>& p, std::size_t terms, const std::string& format,
                   std::ostream& out) {
  if (terms == 0) throw UsageError("--terms must be positive");
  const WalkModel model = walk_model(m, p);
  print_series(stabilized_series(model, terms - 1), format, "", {{"model", model.name()}, {"width", "stabilized"}},
               out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions of walks confined to a horizontal strip"};
  app.require_subcommand(1);

  std::string model_name = "basketball";
  std::optional<unsigned> p;
  std::string format = "text";
  std::string width;
  std::string function = "F";
  std::string method;
  std::string var = "auto";
  std::size_t terms = 12;
  std::size_t max_width = 12;
  std::optional<std::size_t> min_width;
  std::string which = "all";
  std::string az_file;

  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_name, "soccer, basketball or general-p");
    sub->add_option("--p", p, "x-length of the (p,+-2) steps (general-p only)");
    sub->add_option("--format", format, "text, json or bfile");
  };

  CLI::App* gf = app.add_subcommand("gf", "normalized numerator and denominator");
  add_model(gf);
  gf->add_option("--width", width, "width w, or a range a..b")->required();
  gf->add_option("--function", function, "F, G, H or J");
  gf->add_option("--method", method, "system (default) or linear");
  gf->add_option("--var", var, "auto, t or z");

  CLI::App* series = app.add_subcommand("series", "coefficients of F_w");
  add_model(series);
  series->add_option("--width", width, "width w, or a range a..b")->required();
  series->add_option("--terms", terms, "number of coefficients");
  series->add_option("--method", method, "expand (default) or oracle");

  CLI::App* verify = app.add_subcommand("verify", "check the recurrences and identities; JSON report");
  verify->add_option("--which", which,
                     "theorem1, theorem2, theorem3, soccer, decompositions, structure, oracle or all");
  verify->add_option("--max-width", max_width, "largest width checked");
  verify->add_option("--min-width", min_width, "smallest width for recurrence checks");
  verify->add_option("--terms", terms, "z-terms compared in series checks");
  verify->add_option("--p", p, "step length for theorem2 / decompositions");
  verify->add_option("--az-initial", az_file, "JSON array of five replacement initial denominators");

  CLI::App* table = app.add_subcommand("table", "width x n matrix of [00] walk counts");
  add_model(table);
  table->add_option("--max-width", max_width, "rows 0..max-width");
  table->add_option("--terms", terms, "columns n = 0..terms-1");

  CLI::App* stabilized = app.add_subcommand("stabilized", "unbounded-strip counts via width n at order n");
  add_model(stabilized);
  stabilized->add_option("--terms", terms, "number of coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) {
      VerifyOptions o;
      o.which = which;
      o.max_width = max_width;
      o.terms = terms;
      if (p && *p == 0) throw UsageError("--p must be positive");
      o.p = p.value_or(2);
      if (!az_file.empty()) o.az_seed = read_seed(az_file);
      const json report = build_report(o, min_width, p.has_value());
      out << report.dump(2) << '\n';
      return report["ok"].get<bool>() ? 0 : 1;
    }
    const Model m = parse_model(model_name, p);
    if (gf->parsed()) {
      return cmd_gf(m, p, width, function, method.empty() ? "system" : method, var, format, out, err);
    }
    if (series->parsed()) return cmd_series(m, p, width, terms, method.empty() ? "expand" : method, format, out, err);
    if (table->parsed()) return cmd_table(m, p, max_width, terms, format, out);
    if (stabilized->parsed()) return cmd_stabilized(m, p, terms, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace stripwalk::cli
