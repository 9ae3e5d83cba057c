#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

enum class Errc {
  non_spherical,
  index_out_of_range,
  subset_not_spherical,
  syntax_error,
  unbound_name,
  cyclic_binding,
  duplicate_name,
  exponent_out_of_range,
  expansion_too_large,
  zero_vector,
  no_realization,
  no_compliant_labeling,
  bad_normal_form_text,
  invalid_argument,
};

const char* errc_name(Errc code);

/// All library failures are reported through this type.  `position` is a
/// byte offset into the offending input for syntax errors, `npos` otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        position_(position) {}

  Errc code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::size_t position = Error::npos) {
  throw Error(code, message, position);
}

}  // namespace artin
