#pragma once

// The built-in ProcessCO v1.3 ontology: term kinds and their taxonomy,
// attribute schemas, the non-taxonomic relationships with their
// multiplicities and ThingFO parents, generalization-set partitions, and the
// axiom identifiers. Everything here is immutable after first use.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace procco {

enum class Term : std::uint8_t {
  Allocation,
  AllocationModel,
  Activity,
  Agent,
  Artifact,
  AutomatedAgent,
  Condition,
  HumanAgent,
  Method,
  Money,
  NaturalProduct,
  Outcome,
  ProcessCategory,
  ProcessModel,
  ProcessPerspective,
  ProductCategory,
  ProductEntity,
  ResourceCategory,
  ResourceEntity,
  Role,
  Service,
  Strategy,
  Task,
  Time,
  Tool,
  WorkEntity,
  WorkEntitySubCategory,
  WorkProcess,
  WorkProduct,
  WorkResource,
};

inline constexpr std::size_t kTermCount = 30;

// ThingFO enrichment of each term.
enum class Stereotype : std::uint8_t { Thing, ThingCategory, Assertion, AssertionOnParticulars };

std::string_view to_string(Stereotype s);

struct TermKind {
  Term term;
  std::string_view name;   // identifier form, e.g. "WorkProcess"
  std::string_view label;  // display form, e.g. "Work Process"
  std::optional<Term> parent;
  Stereotype tfo_stereotype;
  std::string_view stereotype_detail;
  std::vector<std::string_view> synonyms;
  std::string_view definition;
  std::vector<std::string_view> notes;
};

enum class ValueType : std::uint8_t { text, date, number_or_text };

std::string_view to_string(ValueType t);

struct AttributeSchema {
  Term owner;
  std::string_view name;  // schema form with spaces, e.g. "start date"
  ValueType value_type;
  std::string_view definition;
};

// Closed interval of link counts; an empty `upper` is unbounded.
struct Multiplicity {
  std::uint32_t lower = 0;
  std::optional<std::uint32_t> upper;

  static constexpr Multiplicity many() { return {0, std::nullopt}; }
  static constexpr Multiplicity one_or_more() { return {1, std::nullopt}; }
  static constexpr Multiplicity exactly_one() { return {1, 1u}; }

  bool admits(std::size_t count) const {
    return count >= lower && (!upper || count <= *upper);
  }

  // "*", "1..*", "1", or the general "l..u" / "l..*" forms.
  std::string str() const;
  static std::optional<Multiplicity> parse(std::string_view s);

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

enum class ThingFoRelationName : std::uint8_t {
  interacts_with_other,
  deals_with_particulars,
  defines,
  relates_with,
  belongs_to,
};

std::string_view to_string(ThingFoRelationName n);     // "interacts_with_other"
std::string_view display_name(ThingFoRelationName n);  // "interacts with other"

// A ThingFO relationship as it appears on the right side of the verification
// matrix. `source_term` keeps qualifiers such as "(Power of) Thing" verbatim;
// they carry no semantics here.
struct ThingFORelation {
  ThingFoRelationName name;
  Multiplicity source_card;
  Multiplicity target_card;
  std::string_view source_term;
  std::string_view target_term;
};

// source_mult: how many sources may link to one target.
// target_mult: how many targets each source links to.
struct RelationshipSchema {
  std::string_view name;  // schema form, e.g. "deals with work entity"
  Term source_kind;
  Term target_kind;
  Multiplicity source_mult;
  Multiplicity target_mult;
  std::string_view definition;
  ThingFORelation tfo_parent;
  // Term columns as printed in the verification matrix.
  std::string_view source_label;
  std::string_view target_label;
};

struct Partition {
  Term parent;
  std::vector<Term> children;
  bool disjoint = true;
  bool complete = true;

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class AxiomId : std::uint8_t { A1, A2, A3, A4, A5, A6 };

inline constexpr std::array<AxiomId, 6> kAllAxioms{AxiomId::A1, AxiomId::A2, AxiomId::A3,
                                                   AxiomId::A4, AxiomId::A5, AxiomId::A6};

std::string_view to_string(AxiomId a);
std::optional<AxiomId> parse_axiom(std::string_view s);

class OntologySchema {
 public:
  std::span<const TermKind> terms() const { return terms_; }
  std::span<const AttributeSchema> attributes() const { return attributes_; }
  std::span<const RelationshipSchema> relationships() const { return relationships_; }
  std::span<const Partition> partitions() const { return partitions_; }
  std::span<const AxiomId> axiom_ids() const { return kAllAxioms; }

  const TermKind& term(Term t) const { return terms_[static_cast<std::size_t>(t)]; }
  std::string_view name(Term t) const { return term(t).name; }

  std::optional<Term> find_term(std::string_view name) const;
  // Throws Error(invalid_term).
  Term term_named(std::string_view name) const;

  // Reflexive, transitive taxonomic descent.
  bool is_subkind(Term kind, Term ancestor) const;
  bool is_subkind(std::string_view kind, std::string_view ancestor) const;

  std::vector<Term> children_of(Term parent) const;

  // Ancestors first, then declaration order. A descendant re-declaring a name
  // keeps both entries (owners differ).
  std::vector<AttributeSchema> attributes_for(Term kind) const;
  std::vector<AttributeSchema> attributes_for(std::string_view kind) const;
  std::vector<AttributeSchema> own_attributes(Term kind) const;
  // Most-derived attribute with this name; accepts "start_date" or "start date".
  const AttributeSchema* find_attribute(Term kind, std::string_view name) const;

  // Accepts "deals with work entity" or "deals_with_work_entity".
  const RelationshipSchema* find_relationship(std::string_view name) const;
  // Throws Error(invalid_relationship) listing the valid names.
  const RelationshipSchema& relationship_schema(std::string_view name) const;

 private:
  OntologySchema();
  void self_check() const;

  std::vector<TermKind> terms_;
  std::vector<AttributeSchema> attributes_;
  std::vector<RelationshipSchema> relationships_;
  std::vector<Partition> partitions_;
  std::unordered_map<std::string_view, Term> term_index_;
  std::unordered_map<std::string, std::size_t> relationship_index_;

  friend const OntologySchema& builtin_schema();
};

const OntologySchema& builtin_schema();

// Generalization-set constraints in effect for validation. Starts from the
// built-in defaults; any term with taxonomic children may be overridden.
class PartitionConfig {
 public:
  static PartitionConfig defaults();

  // Lines of `<ParentTerm> = <disjoint|overlapping> <complete|incomplete>`;
  // '#' starts a comment, commas/braces are ignored. Throws Error(config).
  static PartitionConfig parse(std::string_view text);
  static PartitionConfig load(const std::filesystem::path& path);

  void set(Term parent, bool disjoint, bool complete);
  const Partition* find(Term parent) const;
  std::span<const Partition> partitions() const { return partitions_; }

  friend bool operator==(const PartitionConfig&, const PartitionConfig&) = default;

 private:
  std::vector<Partition> partitions_;  // ordered by parent
};

}  // namespace procco
