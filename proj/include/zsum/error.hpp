#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsum {

enum class errc {
  invalid_spec,
  incompatible_elements,
  not_enumerable,
  invalid_alphabet,
  non_divisor,
  unsupported_alphabet,
  not_zero_sum,
  size_limit,
  incompatible_factorizations,
  invalid_target,
  invalid_instance,
  invalid_atom,
  unsupported_group,
  invalid_parameters,
  parse_error,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_spec: return "invalid-spec";
    case errc::incompatible_elements: return "incompatible-elements";
    case errc::not_enumerable: return "not-enumerable";
    case errc::invalid_alphabet: return "invalid-alphabet";
    case errc::non_divisor: return "non-divisor";
    case errc::unsupported_alphabet: return "unsupported-alphabet";
    case errc::not_zero_sum: return "not-zero-sum";
    case errc::size_limit: return "size-limit";
    case errc::incompatible_factorizations: return "incompatible-factorizations";
    case errc::invalid_target: return "invalid-target";
    case errc::invalid_instance: return "invalid-instance";
    case errc::invalid_atom: return "invalid-atom";
    case errc::unsupported_group: return "unsupported-group";
    case errc::invalid_parameters: return "invalid-parameters";
    case errc::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the `errc` codes so
/// callers (the CLI in particular) can map them onto exit codes.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace zsum
