#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stripwalk {

enum class Errc {
  not_divisible,
  both_zero,
  zero_denominator,
  non_unit_constant_term,
  singular_system,
  chain_too_short,
  height_out_of_strip,
  parity_violation,
  insufficient_terms,
  invalid_model,
  bad_format,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stripwalk
