#include "procco/errors.hpp"

namespace procco {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_term: return "invalid-term";
    case ErrorCode::invalid_relationship: return "invalid-relationship";
    case ErrorCode::invalid_attribute: return "invalid-attribute";
    case ErrorCode::invalid_id: return "invalid-id";
    case ErrorCode::duplicate_entity: return "duplicate-entity";
    case ErrorCode::missing_entity: return "missing-entity";
    case ErrorCode::invalid_composition: return "invalid-composition";
    case ErrorCode::composition_cycle: return "composition-cycle";
    case ErrorCode::wrong_kind: return "wrong-kind";
    case ErrorCode::arity: return "arity";
    case ErrorCode::config: return "config";
    case ErrorCode::canonical_parse: return "canonical-parse";
  }
  return "unknown";
}

static std::string decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(to_string(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace procco
