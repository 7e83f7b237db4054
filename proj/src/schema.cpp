#include "procco/schema.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "procco/errors.hpp"
#include "procco/text.hpp"

namespace procco {

std::string_view to_string(Stereotype s) {
  switch (s) {
    case Stereotype::Thing: return "Thing";
    case Stereotype::ThingCategory: return "ThingCategory";
    case Stereotype::Assertion: return "Assertion";
    case Stereotype::AssertionOnParticulars: return "AssertionOnParticulars";
  }
  return "?";
}

std::string_view to_string(ValueType t) {
  switch (t) {
    case ValueType::text: return "text";
    case ValueType::date: return "date";
    case ValueType::number_or_text: return "number_or_text";
  }
  return "?";
}

std::string_view to_string(ThingFoRelationName n) {
  switch (n) {
    case ThingFoRelationName::interacts_with_other: return "interacts_with_other";
    case ThingFoRelationName::deals_with_particulars: return "deals_with_particulars";
    case ThingFoRelationName::defines: return "defines";
    case ThingFoRelationName::relates_with: return "relates_with";
    case ThingFoRelationName::belongs_to: return "belongs_to";
  }
  return "?";
}

std::string_view display_name(ThingFoRelationName n) {
  switch (n) {
    case ThingFoRelationName::interacts_with_other: return "interacts with other";
    case ThingFoRelationName::deals_with_particulars: return "deals with particulars";
    case ThingFoRelationName::defines: return "defines";
    case ThingFoRelationName::relates_with: return "relates with";
    case ThingFoRelationName::belongs_to: return "belongs to";
  }
  return "?";
}

std::string_view to_string(AxiomId a) {
  static constexpr std::array<std::string_view, 6> names{"A1", "A2", "A3", "A4", "A5", "A6"};
  return names[static_cast<std::size_t>(a)];
}

std::optional<AxiomId> parse_axiom(std::string_view s) {
  for (AxiomId a : kAllAxioms) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

std::string Multiplicity::str() const {
  if (lower == 0 && !upper) return "*";
  if (!upper) return std::to_string(lower) + "..*";
  if (lower == *upper) return std::to_string(lower);
  return std::to_string(lower) + ".." + std::to_string(*upper);
}

std::optional<Multiplicity> Multiplicity::parse(std::string_view s) {
  auto number = [](std::string_view d) -> std::optional<std::uint32_t> {
    if (d.empty() || d.size() > 9) return std::nullopt;
    std::uint32_t v = 0;
    for (char c : d) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
  };
  if (s == "*") return many();
  auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    auto v = number(s);
    if (!v || *v == 0) return std::nullopt;
    return Multiplicity{*v, *v};
  }
  auto lo = number(s.substr(0, dots));
  auto hi_text = s.substr(dots + 2);
  if (!lo) return std::nullopt;
  if (hi_text == "*") return Multiplicity{*lo, std::nullopt};
  auto hi = number(hi_text);
  if (!hi || *hi == 0 || *hi < *lo) return std::nullopt;
  return Multiplicity{*lo, *hi};
}

namespace {

using T = Term;
using S = Stereotype;
constexpr auto kMany = Multiplicity::many();
constexpr auto kSome = Multiplicity::one_or_more();
constexpr auto kOne = Multiplicity::exactly_one();

constexpr std::string_view kParticular = "Thing (a particular)";
constexpr std::string_view kUniversal = "Thing Category (a universal)";

std::vector<TermKind> make_terms() {
  return {
      {T::Allocation, "Allocation", "Allocation", std::nullopt, S::AssertionOnParticulars,
       "Allotment-related Assertion", {"Allotment"},
       "Assignment of a work resource to a work entity in a particular situation.", {}},
      {T::AllocationModel, "AllocationModel", "Allocation Model", T::Artifact, S::Thing, kParticular,
       {"Allotment Model"}, "Artifact that models zero or more allocations of work resources.",
       {"Placed under Artifact, so it inherits state and version."}},
      {T::Activity, "Activity", "Activity", T::WorkEntity, S::Thing, kParticular, {},
       "Work entity made up of sub-activities and tasks.", {}},
      {T::Agent, "Agent", "Agent", T::WorkResource, S::Thing, kParticular, {},
       "Work resource that performs tasks while fulfilling a role.", {}},
      {T::Artifact, "Artifact", "Artifact", T::WorkProduct, S::Thing, kParticular, {},
       "Versionable and deliverable work product, tangible or intangible.",
       {"Owns the state and version attributes."}},
      {T::AutomatedAgent, "AutomatedAgent", "Automated Agent", T::Agent, S::Thing, kParticular, {},
       "Non-human agent such as a software bot or a robot.", {}},
      {T::Condition, "Condition", "Condition", std::nullopt, S::Assertion,
       "Constraint-related Assertion", {},
       "Restriction evaluated when a work entity starts (pre) or finishes (post).", {}},
      {T::HumanAgent, "HumanAgent", "Human Agent", T::Agent, S::Thing, kParticular, {},
       "Agent embodied by a person.", {}},
      {T::Method, "Method", "Method", T::WorkResource, S::Thing, kParticular, {},
       "Work resource giving the procedure and rules for carrying out described steps.", {}},
      {T::Money, "Money", "Money", T::WorkResource, S::Thing, kParticular, {},
       "Work resource used as a medium of exchange.", {}},
      {T::NaturalProduct, "NaturalProduct", "Natural Product", T::ProductEntity, S::Thing,
       kParticular, {}, "Product entity of natural origin; consumable by work, never produced by it.",
       {}},
      {T::Outcome, "Outcome", "Outcome", T::WorkProduct, S::Thing, kParticular, {},
       "Intangible work product that can be stored and processed.", {}},
      {T::ProcessCategory, "ProcessCategory", "Process Category", std::nullopt, S::ThingCategory,
       kUniversal, {}, "Universal grouping work entities through sub-categories.",
       {"Only the work entity sub-category is modelled beneath it."}},
      {T::ProcessModel, "ProcessModel", "Process Model", T::Artifact, S::Thing, kParticular, {},
       "Artifact that models one or more related process perspectives.",
       {"Placed under Artifact, so it inherits state and version."}},
      {T::ProcessPerspective, "ProcessPerspective", "Process Perspective", std::nullopt,
       S::AssertionOnParticulars, "Assertion on Particulars", {"Process View"},
       "Functional, behavioral, informational, methodological or organizational view of work.", {}},
      {T::ProductCategory, "ProductCategory", "Product Category", std::nullopt, S::ThingCategory,
       kUniversal, {}, "Universal to which product entities belong.", {}},
      {T::ProductEntity, "ProductEntity", "Product Entity", std::nullopt, S::Thing, kParticular, {},
       "Particular that arises naturally or results from work.", {}},
      {T::ResourceCategory, "ResourceCategory", "Resource Category", std::nullopt,
       S::ThingCategory, kUniversal, {}, "Universal to which resource entities belong.", {}},
      {T::ResourceEntity, "ResourceEntity", "Resource Entity", std::nullopt, S::Thing, kParticular,
       {}, "Asset available for use or allocation.", {}},
      {T::Role, "Role", "Role", std::nullopt, S::Assertion, "Behavior-related Assertion", {},
       "Skills an agent needs in order to perform a work entity.", {}},
      {T::Service, "Service", "Service", T::WorkProduct, S::Thing, kParticular, {},
       "Intangible, non-storable, deliverable work product.", {}},
      {T::Strategy, "Strategy", "Strategy", T::WorkResource, S::Thing, kParticular, {},
       "Work resource bundling principles and capabilities toward a project goal.", {}},
      {T::Task, "Task", "Task", T::WorkEntity, S::Thing, kParticular, {},
       "Atomic work entity; it has no parts.", {}},
      {T::Time, "Time", "Time", T::WorkResource, S::Thing, kParticular, {},
       "Work resource spent when scheduling the duration of work.", {}},
      {T::Tool, "Tool", "Tool", T::WorkResource, S::Thing, kParticular, {"Instrument"},
       "Work resource that automates method procedures and rules.",
       {"Owns its own description and references attributes."}},
      {T::WorkEntity, "WorkEntity", "Work Entity", std::nullopt, S::Thing, kParticular, {},
       "Particular describing work via products, conditions and roles.", {}},
      {T::WorkEntitySubCategory, "WorkEntitySubCategory", "Work Entity sub-Category",
       T::ProcessCategory, S::ThingCategory, kUniversal, {},
       "Process sub-category to which work entities belong.", {}},
      {T::WorkProcess, "WorkProcess", "Work Process", T::WorkEntity, S::Thing, kParticular,
       {"Process"}, "Coarse-grained work entity made of sub-processes and activities.", {}},
      {T::WorkProduct, "WorkProduct", "Work Product", T::ProductEntity, S::Thing, kParticular, {},
       "Product entity consumed or produced by work.", {}},
      {T::WorkResource, "WorkResource", "Work Resource", T::ResourceEntity, S::Thing, kParticular,
       {}, "Resource entity that can be allotted to work entities.",
       {"Owns the level attribute."}},
  };
}

std::vector<AttributeSchema> make_attributes() {
  using V = ValueType;
  return {
      {T::Allocation, "name", V::text, "Name of the allocation."},
      {T::Allocation, "statement", V::text, "Textual statement of the allocation."},
      {T::AllocationModel, "specification", V::text, "Model of the allocations in some language."},
      {T::Agent, "capabilities", V::text, "Abilities the agent brings as a performer."},
      {T::Artifact, "state", V::text, "Current state of the artifact."},
      {T::Artifact, "version", V::text, "Evolution level identifier of the artifact."},
      {T::Condition, "specification", V::text, "Opaque specification of the constraint."},
      {T::Method, "procedure", V::text, "Ordered instructions for performing task steps."},
      {T::Method, "rules", V::text, "Principles and heuristics tied to the procedure."},
      {T::Method, "references", V::text, "Where to read more about the method."},
      {T::Outcome, "value", V::number_or_text, "Numerical or categorical result."},
      {T::ProcessModel, "specification", V::text, "Model of the process perspective in some language."},
      {T::ProcessPerspective, "name", V::text, "Name of the perspective."},
      {T::ProcessPerspective, "statement", V::text, "Textual statement of the perspective."},
      {T::ProductEntity, "name", V::text, "Name of the product entity."},
      {T::ProductEntity, "description", V::text, "Textual description of the product entity."},
      {T::ResourceEntity, "name", V::text, "Name of the resource entity."},
      {T::ResourceEntity, "description", V::text, "Textual description of the resource entity."},
      {T::Role, "name", V::text, "Name of the role."},
      {T::Role, "skills", V::text, "Capabilities and responsibilities of the role."},
      {T::Task, "steps specification", V::text, "Steps that reach the task objective."},
      {T::Tool, "description", V::text, "Textual description of the tool."},
      {T::Tool, "references", V::text, "Where to read more about the tool."},
      {T::WorkEntity, "name", V::text, "Name of the work entity."},
      {T::WorkEntity, "objective", V::text, "Goal the work aims at."},
      {T::WorkEntity, "description", V::text, "What has to be done, not how."},
      {T::WorkEntity, "status", V::text, "Current status of the work entity."},
      {T::WorkEntity, "start date", V::date, "When the work entity starts."},
      {T::WorkEntity, "end date", V::date, "When the work entity ends."},
      {T::WorkResource, "level", V::text, "Level the resource is assigned to (strategic, project, task)."},
  };
}

// Rows in verification-matrix order. The left cards are the ProcessCO cards,
// the ThingFORelation carries the right half of each row.
std::vector<RelationshipSchema> make_relationships() {
  using N = ThingFoRelationName;
  const ThingFORelation interacts{N::interacts_with_other, kSome, kSome, "(Power of) Thing", "Thing"};
  const ThingFORelation deals{N::deals_with_particulars, kSome, kSome, "Assertion on Particulars",
                              "Thing"};
  const ThingFORelation defines{N::defines, kMany, kMany, "Thing", "Assertion"};
  const ThingFORelation relates_things{N::relates_with, kSome, kSome, "Thing", "Thing"};
  const ThingFORelation belongs{N::belongs_to, kSome, kMany, "Thing", "Thing Category"};
  const ThingFORelation relates_assertions{N::relates_with, kMany, kMany,
                                           "Assertion on Particulars", "Assertion on Particulars"};
  return {
      {"consumes", T::WorkEntity, T::ProductEntity, kMany, kSome,
       "A work entity consumes one or more product entities to reach its objective.", interacts,
       "Work Entity", "Product Entity"},
      {"deals with", T::Allocation, T::WorkResource, kSome, kSome,
       "An allocation deals with one or more work resources.", deals, "Allocation",
       "Work Resource"},
      {"deals with work entity", T::ProcessPerspective, T::WorkEntity, kSome, kSome,
       "A process perspective deals with one or more work entities.", deals,
       "Process Perspective", "Work Entity"},
      {"involves", T::WorkEntity, T::Role, kSome, kSome,
       "A work entity involves roles; a role participates in work entities.", defines,
       "Work Entity", "Role"},
      {"is applicable", T::Method, T::Task, kSome, kOne,
       "A method applies to the description of one task; a task may have several methods.",
       relates_things, "Method", "Task"},
      {"is assigned to", T::Allocation, T::WorkEntity, kSome, kMany,
       "A scheduled allocation is assigned to work entities for enactment.", deals, "Allocation",
       "Work Entity"},
      {"is played by", T::Role, T::Agent, kSome, kSome,
       "A role is played by agents; an agent plays roles.", deals, "Role", "Agent"},
      {"is related with", T::ProductEntity, T::ProductEntity, kSome, kMany,
       "A product entity relates to zero or more product entities.", relates_things,
       "Product Entity", "Product Entity"},
      {"is required by", T::Tool, T::Method, kMany, kSome,
       "A tool is required by zero or more methods.", interacts, "Tool", "Method"},
      {"performs", T::Agent, T::Task, kSome, kSome,
       "An agent performs assigned tasks; a task is performed by agents.", interacts, "Agent",
       "Task"},
      {"pertains to category", T::WorkEntity, T::WorkEntitySubCategory, kSome, kOne,
       "Work entities pertain to a work entity sub-category.", belongs, "Work Entity",
       "Work Entity sub-Category"},
      {"pertains to product category", T::ProductEntity, T::ProductCategory, kSome, kOne,
       "Product entities pertain to a product category.", belongs, "Product Entity",
       "Product Category"},
      {"pertains to resource category", T::ResourceEntity, T::ResourceCategory, kSome, kOne,
       "Resource entities pertain to a resource category.", belongs, "Resource Entity",
       "Resource Entity Category"},
      {"produces", T::WorkEntity, T::WorkProduct, kSome, kSome,
       "A work entity produces (creates or modifies) work products.", interacts, "Work Entity",
       "Work Product"},
      {"relates", T::ProcessPerspective, T::ProcessPerspective, kMany, kMany,
       "A process perspective relates to zero or more process perspectives.", relates_assertions,
       "Process Perspective", "Process Perspective"},
      {"sets postcondition", T::WorkEntity, T::Condition, kSome, kMany,
       "Conditions that must hold when the work entity finishes.", defines, "Work Entity",
       "Condition"},
      {"sets precondition", T::WorkEntity, T::Condition, kSome, kMany,
       "Conditions that must hold before the work entity starts.", defines, "Work Entity",
       "Condition"},
      {"uses", T::Agent, T::WorkResource, kSome, kSome,
       "An agent uses work resources to perform a task.", interacts, "Agent", "Work Resource"},
  };
}

}  // namespace

static std::vector<Partition> default_partitions() {
  return {
      {T::WorkEntity, {T::WorkProcess, T::Activity, T::Task}, true, true},
      {T::ProductEntity, {T::NaturalProduct, T::WorkProduct}, true, true},
      {T::Agent, {T::HumanAgent, T::AutomatedAgent}, true, true},
      {T::WorkResource, {T::Agent, T::Method, T::Tool, T::Strategy, T::Time, T::Money}, true, false},
      {T::WorkProduct, {T::Artifact, T::Outcome, T::Service}, true, false},
  };
}

OntologySchema::OntologySchema()
    : terms_(make_terms()),
      attributes_(make_attributes()),
      relationships_(make_relationships()),
      partitions_(default_partitions()) {
  for (const auto& t : terms_) term_index_.emplace(t.name, t.term);
  for (std::size_t i = 0; i < relationships_.size(); ++i) {
    relationship_index_.emplace(std::string(relationships_[i].name), i);
  }
  self_check();
}

void OntologySchema::self_check() const {
  auto fail = [](const std::string& what) {
    throw std::logic_error("built-in schema is inconsistent: " + what);
  };
  if (terms_.size() != kTermCount) fail("term count");
  if (attributes_.size() != 30) fail("attribute count");
  if (relationships_.size() != 18) fail("relationship count");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (static_cast<std::size_t>(terms_[i].term) != i) fail("term order");
    // acyclic: every chain reaches a root within the term count
    auto cur = terms_[i].parent;
    std::size_t steps = 0;
    while (cur) {
      if (++steps > kTermCount) fail("taxonomy cycle at " + std::string(terms_[i].name));
      cur = term(*cur).parent;
    }
  }
  std::set<std::pair<Term, std::string_view>> seen;
  for (const auto& a : attributes_) {
    if (!seen.emplace(a.owner, a.name).second) fail("duplicate attribute " + std::string(a.name));
  }
  if (relationship_index_.size() != relationships_.size()) fail("duplicate relationship name");
  for (const auto& p : partitions_) {
    if (p.children.empty()) fail("empty partition");
    for (Term c : p.children) {
      if (term(c).parent != p.parent) fail("partition child " + std::string(name(c)));
    }
  }
}

std::optional<Term> OntologySchema::find_term(std::string_view name) const {
  auto it = term_index_.find(name);
  if (it == term_index_.end()) return std::nullopt;
  return it->second;
}

Term OntologySchema::term_named(std::string_view name) const {
  if (auto t = find_term(name)) return *t;
  throw Error(ErrorCode::invalid_term, "unknown term kind '" + std::string(name) + "'");
}

bool OntologySchema::is_subkind(Term kind, Term ancestor) const {
  std::optional<Term> cur = kind;
  while (cur) {
    if (*cur == ancestor) return true;
    cur = term(*cur).parent;
  }
  return false;
}

bool OntologySchema::is_subkind(std::string_view kind, std::string_view ancestor) const {
  return is_subkind(term_named(kind), term_named(ancestor));
}

std::vector<Term> OntologySchema::children_of(Term parent) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.parent == parent) out.push_back(t.term);
  }
  return out;
}

std::vector<AttributeSchema> OntologySchema::own_attributes(Term kind) const {
  std::vector<AttributeSchema> out;
  std::copy_if(attributes_.begin(), attributes_.end(), std::back_inserter(out),
               [&](const AttributeSchema& a) { return a.owner == kind; });
  return out;
}

std::vector<AttributeSchema> OntologySchema::attributes_for(Term kind) const {
  std::vector<Term> chain;
  for (std::optional<Term> cur = kind; cur; cur = term(*cur).parent) chain.push_back(*cur);
  std::vector<AttributeSchema> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    auto own = own_attributes(*it);
    out.insert(out.end(), own.begin(), own.end());
  }
  return out;
}

std::vector<AttributeSchema> OntologySchema::attributes_for(std::string_view kind) const {
  return attributes_for(term_named(kind));
}

const AttributeSchema* OntologySchema::find_attribute(Term kind, std::string_view name) const {
  const std::string wanted = text::spaced(name);
  for (std::optional<Term> cur = kind; cur; cur = term(*cur).parent) {
    for (const auto& a : attributes_) {
      if (a.owner == *cur && a.name == wanted) return &a;
    }
  }
  return nullptr;
}

const RelationshipSchema* OntologySchema::find_relationship(std::string_view name) const {
  auto it = relationship_index_.find(text::spaced(name));
  if (it == relationship_index_.end()) return nullptr;
  return &relationships_[it->second];
}

const RelationshipSchema& OntologySchema::relationship_schema(std::string_view name) const {
  if (const auto* r = find_relationship(name)) return *r;
  std::string valid;
  for (const auto& r : relationships_) {
    if (!valid.empty()) valid += ", ";
    valid += r.name;
  }
  throw Error(ErrorCode::invalid_relationship,
              "unknown relationship '" + std::string(name) + "'; valid names: " + valid);
}

const OntologySchema& builtin_schema() {
  static const OntologySchema schema;
  return schema;
}

}  // namespace procco
