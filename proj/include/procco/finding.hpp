#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace procco {

enum class Severity : std::uint8_t { warning, error };

std::string_view to_string(Severity s);

// One validation result. Codes are stable API:
//   T001/T002  relation source/target kind does not conform
//   T003/T004  unknown attribute / attribute value of the wrong type
//   M001/M002  too many targets per source / sources per target
//   M003/M004  too few targets per source / sources per target
//   P001       instance of the abstract parent of a complete partition
//   C001/C002  composite work entity without parts / node with several parents
//   A1..A6     axiom violation; subjects are the violating binding
//   R001/R002  refinement widens the ThingFO source / target card
struct Finding {
  std::string code;
  Severity severity = Severity::error;
  std::vector<std::string> subjects;
  std::string message;

  friend auto operator<=>(const Finding& a, const Finding& b) {
    if (auto c = a.code <=> b.code; c != 0) return c;
    if (auto c = a.subjects <=> b.subjects; c != 0) return c;
    if (auto c = a.message <=> b.message; c != 0) return c;
    return a.severity <=> b.severity;
  }
  friend bool operator==(const Finding&, const Finding&) = default;
};

}  // namespace procco
