#pragma once

// A concrete process model: entities (particulars of some term kind) with
// attribute values, edges instantiating the non-taxonomic relationships, and
// composition edges forming the work-breakdown hierarchy.
//
// Mutation is single-writer. Validation and queries take `const
// InstanceGraph&` and may run concurrently on a graph nobody mutates.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "procco/schema.hpp"

namespace procco {

// Unique, case-sensitive entity identifier. Must match [A-Za-z_][A-Za-z0-9_.-]*.
class EntityId {
 public:
  EntityId() = default;
  // Throws Error(invalid_id).
  explicit EntityId(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const EntityId&, const EntityId&) = default;
  friend bool operator==(const EntityId&, const EntityId&) = default;

 private:
  std::string value_;
};

struct AttributeValue {
  enum class Kind : std::uint8_t { text, date, number };

  Kind kind = Kind::text;
  std::string lexeme;  // text content, or the literal date/number spelling

  static AttributeValue text(std::string s) { return {Kind::text, std::move(s)}; }
  // Throw Error(invalid_attribute) on malformed literals.
  static AttributeValue date(std::string s);
  static AttributeValue number(std::string s);

  bool conforms_to(ValueType t) const;

  friend bool operator==(const AttributeValue&, const AttributeValue&) = default;
};

std::string_view to_string(AttributeValue::Kind k);

using Attributes = std::map<std::string, AttributeValue>;

struct EntityRecord {
  EntityId id;
  Term kind;
  Attributes attributes;  // keyed by schema name ("start date") or as written if unknown

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

struct RelationEdge {
  std::string rel;  // schema name, e.g. "deals with work entity"
  EntityId source;
  EntityId target;

  friend auto operator<=>(const RelationEdge&, const RelationEdge&) = default;
  friend bool operator==(const RelationEdge&, const RelationEdge&) = default;
};

enum class Flavor : std::uint8_t { subProcessOf, activityPartOf, subActivityOf, taskPartOf };

std::string_view to_string(Flavor f);
std::optional<Flavor> parse_flavor(std::string_view s);

// The four legal (parent kind, child kind) pairs; anything else is nullopt.
std::optional<Flavor> infer_flavor(Term parent, Term child);

struct CompositionEdge {
  EntityId parent;
  EntityId child;
  Flavor flavor;

  friend auto operator<=>(const CompositionEdge&, const CompositionEdge&) = default;
  friend bool operator==(const CompositionEdge&, const CompositionEdge&) = default;
};

class InstanceGraph {
 public:
  // Throws duplicate_entity, invalid_id, invalid_term, invalid_attribute.
  // Unknown attribute names are kept; the validator reports them.
  const EntityRecord& add_entity(std::string_view id, Term kind, Attributes attributes = {});
  const EntityRecord& add_entity(std::string_view id, std::string_view kind,
                                 Attributes attributes = {});

  // Endpoint kinds are not checked here. Returns false when the identical
  // edge already exists. Throws invalid_relationship, missing_entity.
  bool add_relation(std::string_view rel, std::string_view source, std::string_view target);

  // Throws missing_entity, invalid_composition, composition_cycle.
  Flavor add_composition(std::string_view parent, std::string_view child);

  const std::map<EntityId, EntityRecord>& entities() const { return entities_; }
  const std::set<RelationEdge>& relations() const { return relations_; }
  const std::set<CompositionEdge>& composition() const { return composition_; }

  bool empty() const { return entities_.empty(); }
  const EntityRecord* find(std::string_view id) const;
  // Throws missing_entity.
  const EntityRecord& at(std::string_view id) const;

  bool has_relation(std::string_view rel, const EntityId& source, const EntityId& target) const;
  // Sorted targets of `rel` edges leaving `source`.
  std::vector<EntityId> targets(std::string_view rel, const EntityId& source) const;
  // Sorted direct composition children / parents.
  std::vector<EntityId> children(const EntityId& id) const;
  std::vector<EntityId> parents(const EntityId& id) const;

  friend bool operator==(const InstanceGraph& a, const InstanceGraph& b) {
    return a.entities_ == b.entities_ && a.relations_ == b.relations_ &&
           a.composition_ == b.composition_;
  }

 private:
  bool reaches(const EntityId& from, const EntityId& to) const;

  std::map<EntityId, EntityRecord> entities_;
  std::set<RelationEdge> relations_;
  std::set<CompositionEdge> composition_;
  std::map<EntityId, std::set<EntityId>> children_;
  std::map<EntityId, std::set<EntityId>> parents_;
};

// Canonical structured text, the golden-file medium:
//
//   procco-canonical 1
//   entity <id> <TermKind>
//     attr <name_with_underscores> <text|date|number> "<escaped value>"
//   rel <relationship_with_underscores> <source> <target>
//   comp <parent> <child> <flavor>
//
// Entities sorted by id (attributes by name), then rel lines, then comp lines,
// each sorted lexicographically. UTF-8, LF line endings.
std::string export_canonical(const InstanceGraph& graph);
// Throws Error(canonical_parse) carrying the offending line number.
InstanceGraph import_canonical(std::string_view text);

}  // namespace procco
