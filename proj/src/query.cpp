#include "procco/query.hpp"

#include <algorithm>

#include "procco/errors.hpp"

namespace procco {

const AxiomShape& axiom_shape(AxiomId id) {
  using F = Flavor;
  static const std::array<AxiomShape, 6> shapes{{
      {AxiomId::A1, Term::WorkProcess, Term::ProductEntity, "consumes",
       {F::subProcessOf, F::activityPartOf},
       "a work process consuming a product entity has a sub-process or activity consuming it"},
      {AxiomId::A2, Term::Activity, Term::ProductEntity, "consumes",
       {F::subActivityOf, F::taskPartOf},
       "an activity consuming a product entity has a sub-activity or task consuming it"},
      {AxiomId::A3, Term::WorkProcess, Term::WorkProduct, "produces",
       {F::subProcessOf, F::activityPartOf},
       "a work process producing a work product has a sub-process or activity producing it"},
      {AxiomId::A4, Term::Activity, Term::WorkProduct, "produces",
       {F::subActivityOf, F::taskPartOf},
       "an activity producing a work product has a sub-activity or task producing it"},
      {AxiomId::A5, Term::WorkProcess, Term::Role, "involves",
       {F::subProcessOf, F::activityPartOf},
       "a work process involving a role has a sub-process or activity involving it"},
      {AxiomId::A6, Term::Activity, Term::Role, "involves", {F::subActivityOf, F::taskPartOf},
       "an activity involving a role has a sub-activity or task involving it"},
  }};
  return shapes[static_cast<std::size_t>(id)];
}

namespace query {

std::vector<EntityId> descendants(const InstanceGraph& graph, std::string_view id,
                                  bool transitive) {
  const auto& root = graph.at(id);
  if (!transitive) return graph.children(root.id);
  std::set<EntityId> seen;
  std::vector<EntityId> frontier{root.id};
  while (!frontier.empty()) {
    EntityId cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto& c : graph.children(cur)) {
      if (seen.insert(c).second) frontier.push_back(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

std::set<EntityId> closure(const InstanceGraph& graph, std::string_view id, std::string_view rel) {
  const auto& root = graph.at(id);
  const auto& schema = builtin_schema();
  if (rel != "consumes" && rel != "produces" && rel != "involves") {
    throw Error(ErrorCode::invalid_relationship,
                "closure is defined for consumes, produces and involves, not '" + std::string(rel) +
                    "'");
  }
  if (!schema.is_subkind(root.kind, Term::WorkEntity)) {
    throw Error(ErrorCode::wrong_kind, "'" + root.id.str() + "' is a " +
                                           std::string(schema.name(root.kind)) +
                                           ", not a WorkEntity");
  }
  std::set<EntityId> out;
  auto collect = [&](const EntityId& e) {
    for (auto& t : graph.targets(rel, e)) out.insert(std::move(t));
  };
  collect(root.id);
  for (const auto& d : descendants(graph, id, true)) collect(d);
  return out;
}

WitnessResult axiom_witness(const InstanceGraph& graph, AxiomId axiom,
                            std::span<const std::string> subjects, AxiomReading reading) {
  const auto& shape = axiom_shape(axiom);
  const auto& schema = builtin_schema();
  const std::string ax(to_string(axiom));
  if (subjects.size() != 2) {
    throw Error(ErrorCode::arity, ax + " takes 2 subjects, got " + std::to_string(subjects.size()));
  }
  const auto& whole = graph.at(subjects[0]);
  const auto& object = graph.at(subjects[1]);
  auto require_kind = [&](const EntityRecord& e, Term kind) {
    if (!schema.is_subkind(e.kind, kind)) {
      throw Error(ErrorCode::wrong_kind, ax + " expects a " + std::string(schema.name(kind)) +
                                             ", '" + e.id.str() + "' is a " +
                                             std::string(schema.name(e.kind)));
    }
  };
  require_kind(whole, shape.whole_kind);
  require_kind(object, shape.object_kind);
  if (!graph.has_relation(shape.relation, whole.id, object.id)) {
    throw Error(ErrorCode::wrong_kind, ax + " premise does not hold: no " +
                                           std::string(shape.relation) + " edge from '" +
                                           whole.id.str() + "' to '" + object.id.str() + "'");
  }

  std::vector<EntityId> candidates;
  if (reading == AxiomReading::direct) {
    for (auto& c : graph.children(whole.id)) {
      auto flavor = infer_flavor(whole.kind, graph.at(c.str()).kind);
      if (flavor && std::find(shape.part_flavors.begin(), shape.part_flavors.end(), *flavor) !=
                        shape.part_flavors.end()) {
        candidates.push_back(std::move(c));
      }
    }
  } else {
    candidates = descendants(graph, whole.id.str(), true);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    if (graph.has_relation(shape.relation, c, object.id)) return {true, c};
  }
  return {false, std::nullopt};
}

}  // namespace query
}  // namespace procco
