#pragma once

// Read-only closure and witness queries over a graph that is no longer being
// mutated.

#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "procco/axioms.hpp"
#include "procco/graph.hpp"

namespace procco::query {

// Direct children or the full transitive closure through composition,
// sorted by id, root excluded. Throws missing_entity.
std::vector<EntityId> descendants(const InstanceGraph& graph, std::string_view id, bool transitive);

// Own `rel` targets plus those of every transitive descendant. `rel` must be
// consumes, produces or involves and `id` a work entity. Throws
// missing_entity, wrong_kind, invalid_relationship.
std::set<EntityId> closure(const InstanceGraph& graph, std::string_view id, std::string_view rel);

struct WitnessResult {
  bool satisfied = false;
  std::optional<EntityId> witness;  // present iff satisfied

  friend bool operator==(const WitnessResult&, const WitnessResult&) = default;
};

// Smallest-id part discharging the axiom's existential for subjects
// [whole, object]. The subjects must match the axiom's universal variables and
// the premise edge must exist. Throws arity, missing_entity, wrong_kind.
WitnessResult axiom_witness(const InstanceGraph& graph, AxiomId axiom,
                            std::span<const std::string> subjects,
                            AxiomReading reading = AxiomReading::direct);

}  // namespace procco::query
