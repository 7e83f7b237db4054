#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace procco {

enum class ErrorCode {
  invalid_term,
  invalid_relationship,
  invalid_attribute,
  invalid_id,
  duplicate_entity,
  missing_entity,
  invalid_composition,
  composition_cycle,
  wrong_kind,
  arity,
  config,
  canonical_parse,
};

std::string_view to_string(ErrorCode code);

// All contract violations raised by the library. `line` is set (>= 1) only for
// errors that originate from text input (canonical import, partition config).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace procco
