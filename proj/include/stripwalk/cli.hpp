#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stripwalk/json_io.hpp"

namespace stripwalk::cli {

enum class Model { soccer, basketball, general_p };

struct VerifyOptions {
  std::string which = "all";  // theorem1 theorem2 theorem3 soccer decompositions structure oracle all
  std::size_t max_width = 12;
  std::size_t terms = 12;     // z-terms for series comparisons
  unsigned p = 2;
  std::optional<BasketballSeed> az_seed;
};

/// Runs the selected checks. "ok" at the top level is the conjunction of the
/// "ok" fields of every entry in "checks"; "findings" are informational.
json build_verify_report(const VerifyOptions& opts);

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stripwalk::cli
