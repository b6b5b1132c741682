#include "stripwalk/json_io.hpp"

#include "stripwalk/errors.hpp"

namespace stripwalk {

namespace {

json coeff_array(std::span<const BigInt> coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

std::pair<Var, std::vector<BigInt>> read_coeffs(const json& j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(Errc::bad_format, "expected {\"var\": ..., \"coeffs\": [...]}");
  }
  const std::string var = j["var"].is_string() ? j["var"].get<std::string>() : "";
  if (var != "t" && var != "z") throw Error(Errc::bad_format, "var must be \"t\" or \"z\"");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw Error(Errc::bad_format, "coefficients must be decimal strings");
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw Error(Errc::bad_format, "not a decimal integer: " + c.get<std::string>());
    }
    coeffs.push_back(std::move(v));
  }
  return {var == "t" ? Var::t : Var::z, std::move(coeffs)};
}

}  // namespace

json poly_to_json(const IntPoly& p, Var var) {
  if (var == Var::z) return json{{"var", "z"}, {"coeffs", coeff_array(p.z_coeffs())}};
  return json{{"var", "t"}, {"coeffs", coeff_array(p.coeffs())}};
}

IntPoly poly_from_json(const json& j) {
  auto [var, coeffs] = read_coeffs(j);
  return var == Var::z ? IntPoly::from_z(coeffs) : IntPoly(std::move(coeffs));
}

json series_to_json(const SeriesVec& s) {
  return json{{"var", std::string(to_string(s.var))}, {"coeffs", coeff_array(s.coeffs)}};
}

SeriesVec series_from_json(const json& j) {
  auto [var, coeffs] = read_coeffs(j);
  return SeriesVec{var, std::move(coeffs)};
}

json to_json(const IdentityCheck& c) {
  json out{{"kind", c.kind}, {"w", c.w}, {"ok", c.ok}};
  out["residual_degree"] = c.residual_degree ? json(*c.residual_degree) : json(nullptr);
  if (!c.applicable) out["applicable"] = false;
  return out;
}

json to_json(const DecompositionCheck& c) {
  json out{{"kind", c.identity}, {"w", c.w}, {"ok", c.ok}};
  out["first_mismatch"] = c.first_mismatch ? json(*c.first_mismatch) : json(nullptr);
  return out;
}

}  // namespace stripwalk
