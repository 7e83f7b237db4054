#pragma once

// Shape shared by A1..A6: for every (whole, object) with rel(whole, object),
// some direct part of the whole (reached through one of `part_flavors`)
// carries rel(part, object) as well.

#include <array>
#include <string_view>

#include "procco/graph.hpp"
#include "procco/schema.hpp"

namespace procco {

struct AxiomShape {
  AxiomId id;
  Term whole_kind;              // WorkProcess or Activity
  Term object_kind;             // ProductEntity, WorkProduct or Role
  std::string_view relation;    // consumes, produces, involves
  std::array<Flavor, 2> part_flavors;
  std::string_view description;
};

const AxiomShape& axiom_shape(AxiomId id);

// Direct parts (the default) or any transitive descendant.
enum class AxiomReading : std::uint8_t { direct, transitive };

}  // namespace procco
