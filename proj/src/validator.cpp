#include "procco/validator.hpp"

#include <algorithm>
#include <stdexcept>

#include "procco/query.hpp"

namespace procco {

std::string_view to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

std::string_view to_string(Mode m) { return m == Mode::strict ? "strict" : "lenient"; }

bool ValidationReport::has_errors() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::error; });
}

void canonicalize(std::vector<Finding>& findings) {
  std::sort(findings.begin(), findings.end());
  findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
}

namespace {

Severity soft(Mode mode) { return mode == Mode::strict ? Severity::error : Severity::warning; }

std::string quoted(const EntityId& id) { return "'" + id.str() + "'"; }

// Relationship ends whose lenient lower bound follows the relationship
// definition rather than the matrix card.
struct LenientLowerBound {
  std::string_view relation;
  bool target_side;
  std::uint32_t lower;
};
constexpr std::array<LenientLowerBound, 1> kLenientLowerBounds{{
    {"is required by", true, 0},  // "none or several Methods"
}};

std::uint32_t lower_bound(const RelationshipSchema& r, bool target_side, Mode mode) {
  const auto& m = target_side ? r.target_mult : r.source_mult;
  if (mode == Mode::lenient) {
    for (const auto& l : kLenientLowerBounds) {
      if (l.relation == r.name && l.target_side == target_side) return l.lower;
    }
  }
  return m.lower;
}

}  // namespace

std::vector<Finding> check_types(const InstanceGraph& graph, Mode mode) {
  const auto& schema = builtin_schema();
  std::vector<Finding> out;
  for (const auto& edge : graph.relations()) {
    const auto& r = schema.relationship_schema(edge.rel);
    const auto& src = graph.at(edge.source.str());
    const auto& dst = graph.at(edge.target.str());
    if (!schema.is_subkind(src.kind, r.source_kind)) {
      out.push_back({"T001", Severity::error, {edge.source.str(), edge.target.str()},
                     "'" + std::string(r.name) + "' needs a " + std::string(schema.name(r.source_kind)) +
                         " source, " + quoted(src.id) + " is a " + std::string(schema.name(src.kind))});
    }
    if (!schema.is_subkind(dst.kind, r.target_kind)) {
      out.push_back({"T002", Severity::error, {edge.source.str(), edge.target.str()},
                     "'" + std::string(r.name) + "' needs a " + std::string(schema.name(r.target_kind)) +
                         " target, " + quoted(dst.id) + " is a " + std::string(schema.name(dst.kind))});
    }
  }
  for (const auto& [id, e] : graph.entities()) {
    for (const auto& [name, value] : e.attributes) {
      const auto* a = schema.find_attribute(e.kind, name);
      if (!a) {
        out.push_back({"T003", soft(mode), {id.str()},
                       "unknown attribute '" + name + "' for " + std::string(schema.name(e.kind))});
      } else if (!value.conforms_to(a->value_type)) {
        out.push_back({"T004", soft(mode), {id.str()},
                       "attribute '" + name + "' expects " + std::string(to_string(a->value_type)) +
                           ", got " + std::string(to_string(value.kind))});
      }
    }
  }
  return out;
}

std::vector<Finding> check_multiplicities(const InstanceGraph& graph, Mode mode) {
  const auto& schema = builtin_schema();
  std::vector<Finding> out;
  for (const auto& r : schema.relationships()) {
    // per-entity counts of conforming partners in each direction
    std::map<EntityId, std::size_t> out_degree, in_degree;
    for (const auto& [id, e] : graph.entities()) {
      if (schema.is_subkind(e.kind, r.source_kind)) out_degree[id] = 0;
      if (schema.is_subkind(e.kind, r.target_kind)) in_degree[id] = 0;
    }
    for (const auto& edge : graph.relations()) {
      if (edge.rel != r.name) continue;
      if (out_degree.contains(edge.source) && in_degree.contains(edge.target)) {
        ++out_degree[edge.source];
        ++in_degree[edge.target];
      }
    }
    const std::string rel(r.name);
    const std::string source_kind(schema.name(r.source_kind));
    const std::string target_kind(schema.name(r.target_kind));

    const auto target_lower = lower_bound(r, true, mode);
    for (const auto& [id, n] : out_degree) {
      if (r.target_mult.upper && n > *r.target_mult.upper) {
        out.push_back({"M001", Severity::error, {id.str()},
                       quoted(id) + " has " + std::to_string(n) + " '" + rel + "' " + target_kind +
                           " targets, at most " + std::to_string(*r.target_mult.upper) + " allowed"});
      }
      if (n < target_lower) {
        out.push_back({"M003", soft(mode), {id.str()},
                       quoted(id) + " has " + std::to_string(n) + " '" + rel + "' " + target_kind +
                           " targets, at least " + std::to_string(target_lower) + " required"});
      }
    }
    const auto source_lower = lower_bound(r, false, mode);
    for (const auto& [id, n] : in_degree) {
      if (r.source_mult.upper && n > *r.source_mult.upper) {
        out.push_back({"M002", Severity::error, {id.str()},
                       quoted(id) + " is the '" + rel + "' target of " + std::to_string(n) + " " +
                           source_kind + " sources, at most " +
                           std::to_string(*r.source_mult.upper) + " allowed"});
      }
      if (n < source_lower) {
        out.push_back({"M004", soft(mode), {id.str()},
                       quoted(id) + " is the '" + rel + "' target of " + std::to_string(n) + " " +
                           source_kind + " sources, at least " + std::to_string(source_lower) +
                           " required"});
      }
    }
  }
  return out;
}

std::vector<Finding> check_partitions(const InstanceGraph& graph, const PartitionConfig& config,
                                      Mode mode) {
  const auto& schema = builtin_schema();
  std::vector<Finding> out;
  for (const auto& p : config.partitions()) {
    if (!p.complete) continue;
    // Disjointness needs no instance check: every entity carries exactly one kind.
    for (const auto& [id, e] : graph.entities()) {
      if (e.kind != p.parent) continue;
      std::string options;
      for (Term c : p.children) {
        if (!options.empty()) options += ", ";
        options += schema.name(c);
      }
      out.push_back({"P001", soft(mode), {id.str()},
                     quoted(id) + " instantiates " + std::string(schema.name(p.parent)) +
                         " directly; its partition is complete, use one of " + options});
    }
  }
  return out;
}

std::vector<Finding> check_composition(const InstanceGraph& graph, Mode mode) {
  const auto& schema = builtin_schema();
  for (const auto& c : graph.composition()) {
    if (infer_flavor(graph.at(c.parent.str()).kind, graph.at(c.child.str()).kind) != c.flavor) {
      throw std::logic_error("composition edge with inconsistent flavor");
    }
  }
  std::vector<Finding> out;
  for (const auto& [id, e] : graph.entities()) {
    if ((e.kind == Term::WorkProcess || e.kind == Term::Activity) && graph.children(id).empty()) {
      out.push_back({"C001", soft(mode), {id.str()},
                     std::string(schema.name(e.kind)) + " " + quoted(id) + " has no parts"});
    }
    if (mode == Mode::strict) {
      auto parents = graph.parents(id);
      if (parents.size() > 1) {
        std::string names;
        for (const auto& p : parents) names += (names.empty() ? "" : ", ") + p.str();
        out.push_back({"C002", Severity::warning, {id.str()},
                       quoted(id) + " is shared by " + std::to_string(parents.size()) +
                           " parents: " + names});
      }
    }
  }
  return out;
}

std::vector<Finding> check_axiom(const InstanceGraph& graph, AxiomId axiom, AxiomReading reading) {
  const auto& schema = builtin_schema();
  const auto& shape = axiom_shape(axiom);
  std::vector<Finding> out;
  for (const auto& [id, e] : graph.entities()) {
    if (!schema.is_subkind(e.kind, shape.whole_kind)) continue;
    for (const auto& object : graph.targets(shape.relation, id)) {
      if (!schema.is_subkind(graph.at(object.str()).kind, shape.object_kind)) continue;
      const std::array<std::string, 2> subjects{id.str(), object.str()};
      if (!query::axiom_witness(graph, axiom, subjects, reading).satisfied) {
        out.push_back({std::string(to_string(axiom)), Severity::error, {id.str(), object.str()},
                       "no part of " + quoted(id) + " " + std::string(shape.relation) + " " +
                           quoted(object) + " (" + std::string(shape.description) + ")"});
      }
    }
  }
  canonicalize(out);
  return out;
}

ValidationReport validate(const InstanceGraph& graph, const ValidationOptions& options) {
  ValidationReport report;
  report.mode = options.mode;
  auto append = [&](std::vector<Finding> more) {
    report.findings.insert(report.findings.end(), std::make_move_iterator(more.begin()),
                           std::make_move_iterator(more.end()));
  };
  append(check_types(graph, options.mode));
  append(check_multiplicities(graph, options.mode));
  append(check_partitions(graph, options.partitions, options.mode));
  append(check_composition(graph, options.mode));
  for (AxiomId a : kAllAxioms) append(check_axiom(graph, a, options.reading));
  canonicalize(report.findings);
  for (const auto& f : report.findings) ++report.counts[f.code];
  return report;
}

}  // namespace procco
