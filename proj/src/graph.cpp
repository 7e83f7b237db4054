#include "procco/graph.hpp"

#include <algorithm>
#include <vector>

#include "procco/errors.hpp"
#include "procco/text.hpp"

namespace procco {

EntityId::EntityId(std::string value) : value_(std::move(value)) {
  if (!text::is_identifier(value_)) {
    throw Error(ErrorCode::invalid_id, "'" + value_ + "' is not a valid entity identifier");
  }
}

AttributeValue AttributeValue::date(std::string s) {
  if (!text::is_iso_datetime(s)) {
    throw Error(ErrorCode::invalid_attribute, "'" + s + "' is not an ISO-8601 date-time");
  }
  return {Kind::date, std::move(s)};
}

AttributeValue AttributeValue::number(std::string s) {
  if (!text::is_decimal(s)) {
    throw Error(ErrorCode::invalid_attribute, "'" + s + "' is not a decimal number");
  }
  return {Kind::number, std::move(s)};
}

bool AttributeValue::conforms_to(ValueType t) const {
  switch (t) {
    case ValueType::text: return kind == Kind::text;
    case ValueType::date: return kind == Kind::date;
    case ValueType::number_or_text: return kind == Kind::number || kind == Kind::text;
  }
  return false;
}

std::string_view to_string(AttributeValue::Kind k) {
  switch (k) {
    case AttributeValue::Kind::text: return "text";
    case AttributeValue::Kind::date: return "date";
    case AttributeValue::Kind::number: return "number";
  }
  return "?";
}

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::subProcessOf: return "subProcessOf";
    case Flavor::activityPartOf: return "activityPartOf";
    case Flavor::subActivityOf: return "subActivityOf";
    case Flavor::taskPartOf: return "taskPartOf";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view s) {
  for (auto f : {Flavor::subProcessOf, Flavor::activityPartOf, Flavor::subActivityOf,
                 Flavor::taskPartOf}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::optional<Flavor> infer_flavor(Term parent, Term child) {
  if (parent == Term::WorkProcess && child == Term::WorkProcess) return Flavor::subProcessOf;
  if (parent == Term::WorkProcess && child == Term::Activity) return Flavor::activityPartOf;
  if (parent == Term::Activity && child == Term::Activity) return Flavor::subActivityOf;
  if (parent == Term::Activity && child == Term::Task) return Flavor::taskPartOf;
  return std::nullopt;
}

const EntityRecord& InstanceGraph::add_entity(std::string_view id, Term kind,
                                              Attributes attributes) {
  EntityId key{std::string(id)};
  if (entities_.contains(key)) {
    throw Error(ErrorCode::duplicate_entity, "entity '" + key.str() + "' already exists");
  }
  const auto& schema = builtin_schema();
  Attributes normalized;
  for (auto& [name, value] : attributes) {
    std::string stored;
    if (const auto* a = schema.find_attribute(kind, name)) {
      stored = std::string(a->name);
    } else if (text::is_identifier(name)) {
      stored = name;
    } else {
      throw Error(ErrorCode::invalid_attribute, "'" + name + "' is not a valid attribute name");
    }
    if (!normalized.emplace(stored, std::move(value)).second) {
      throw Error(ErrorCode::invalid_attribute, "attribute '" + stored + "' given twice");
    }
  }
  auto [it, inserted] =
      entities_.emplace(key, EntityRecord{key, kind, std::move(normalized)});
  return it->second;
}

const EntityRecord& InstanceGraph::add_entity(std::string_view id, std::string_view kind,
                                              Attributes attributes) {
  return add_entity(id, builtin_schema().term_named(kind), std::move(attributes));
}

const EntityRecord* InstanceGraph::find(std::string_view id) const {
  if (!text::is_identifier(id)) return nullptr;
  auto it = entities_.find(EntityId{std::string(id)});
  return it == entities_.end() ? nullptr : &it->second;
}

const EntityRecord& InstanceGraph::at(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw Error(ErrorCode::missing_entity, "no entity '" + std::string(id) + "'");
}

bool InstanceGraph::add_relation(std::string_view rel, std::string_view source,
                                 std::string_view target) {
  const auto& schema = builtin_schema().relationship_schema(rel);
  const auto& s = at(source);
  const auto& t = at(target);
  return relations_.insert(RelationEdge{std::string(schema.name), s.id, t.id}).second;
}

bool InstanceGraph::reaches(const EntityId& from, const EntityId& to) const {
  std::vector<EntityId> stack{from};
  std::set<EntityId> seen{from};
  while (!stack.empty()) {
    EntityId cur = stack.back();
    stack.pop_back();
    if (cur == to) return true;
    auto it = children_.find(cur);
    if (it == children_.end()) continue;
    for (const auto& c : it->second) {
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return false;
}

Flavor InstanceGraph::add_composition(std::string_view parent, std::string_view child) {
  const auto& p = at(parent);
  const auto& c = at(child);
  const auto& schema = builtin_schema();
  if (p.id == c.id || reaches(c.id, p.id)) {
    throw Error(ErrorCode::composition_cycle,
                "'" + p.id.str() + "' contains '" + c.id.str() + "' would close a cycle");
  }
  auto flavor = infer_flavor(p.kind, c.kind);
  if (!flavor) {
    std::string why = p.kind == Term::Task ? " (a Task is atomic and has no parts)" : "";
    throw Error(ErrorCode::invalid_composition,
                std::string(schema.name(p.kind)) + " '" + p.id.str() + "' cannot contain " +
                    std::string(schema.name(c.kind)) + " '" + c.id.str() + "'" + why);
  }
  if (composition_.insert(CompositionEdge{p.id, c.id, *flavor}).second) {
    children_[p.id].insert(c.id);
    parents_[c.id].insert(p.id);
  }
  return *flavor;
}

bool InstanceGraph::has_relation(std::string_view rel, const EntityId& source,
                                 const EntityId& target) const {
  return relations_.contains(RelationEdge{std::string(rel), source, target});
}

std::vector<EntityId> InstanceGraph::targets(std::string_view rel, const EntityId& source) const {
  std::vector<EntityId> out;
  RelationEdge probe{std::string(rel), source, EntityId{}};
  for (auto it = relations_.lower_bound(probe);
       it != relations_.end() && it->rel == rel && it->source == source; ++it) {
    out.push_back(it->target);
  }
  return out;
}

std::vector<EntityId> InstanceGraph::children(const EntityId& id) const {
  auto it = children_.find(id);
  if (it == children_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<EntityId> InstanceGraph::parents(const EntityId& id) const {
  auto it = parents_.find(id);
  if (it == parents_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

}  // namespace procco
