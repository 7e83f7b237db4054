#pragma once

// ProcessCO -> ThingFO refinement: the verification matrix as data, a
// card-interval consistency check, and lifting instance edges to ThingFO.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "procco/finding.hpp"
#include "procco/graph.hpp"
#include "procco/schema.hpp"

namespace procco {

struct RefinementRow {
  const RelationshipSchema* pco;
  ThingFORelation tfo;
  Multiplicity pco_source_card;
  Multiplicity pco_target_card;
};

// 18 rows in table order.
const std::vector<RefinementRow>& builtin_matrix();
// Throws Error(invalid_relationship).
const RefinementRow& matrix_row(std::string_view relationship);

enum class CardComparison : std::uint8_t { equal, narrowing, widening };

std::string_view to_string(CardComparison c);

// widening when the child admits some count the parent forbids.
CardComparison compare_cards(const Multiplicity& child, const Multiplicity& parent);

struct RowCheck {
  const RefinementRow* row;
  CardComparison source;
  CardComparison target;
};

std::vector<RowCheck> classify_matrix();

// One warning per widened end: R001 source side, R002 target side.
std::vector<Finding> check_schema_refinement();

struct LiftedEdge {
  ThingFoRelationName relation;
  EntityId source;
  EntityId target;

  friend auto operator<=>(const LiftedEdge&, const LiftedEdge&) = default;
  friend bool operator==(const LiftedEdge&, const LiftedEdge&) = default;
};

// Sorted multiset, one entry per relation edge; composition is not lifted.
std::vector<LiftedEdge> lift(const InstanceGraph& graph);

// Header plus one tab-separated row per relationship, in matrix column order.
std::string render_matrix_text();
std::string render_matrix_canonical();
std::string render_refinement_check_text();
std::string render_refinement_check_canonical();

}  // namespace procco
