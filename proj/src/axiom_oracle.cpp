// Brute-force evaluation of A1..A6. Written directly from the quantifier
// structure, without the axiom shape table or the query module, so that it
// can cross-check check_axiom.

#include <vector>

#include "procco/validator.hpp"

namespace procco {

namespace {

struct Formula {
  Term whole;   // universally quantified, first variable
  Term object;  // universally quantified, second variable
  const char* rel;
  Term part_a;  // first existential disjunct
  Flavor link_a;
  Term part_b;  // second existential disjunct
  Flavor link_b;
};

Formula formula(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::A1:
      return {Term::WorkProcess, Term::ProductEntity, "consumes", Term::WorkProcess,
              Flavor::subProcessOf, Term::Activity, Flavor::activityPartOf};
    case AxiomId::A2:
      return {Term::Activity, Term::ProductEntity, "consumes", Term::Activity,
              Flavor::subActivityOf, Term::Task, Flavor::taskPartOf};
    case AxiomId::A3:
      return {Term::WorkProcess, Term::WorkProduct, "produces", Term::WorkProcess,
              Flavor::subProcessOf, Term::Activity, Flavor::activityPartOf};
    case AxiomId::A4:
      return {Term::Activity, Term::WorkProduct, "produces", Term::Activity,
              Flavor::subActivityOf, Term::Task, Flavor::taskPartOf};
    case AxiomId::A5:
      return {Term::WorkProcess, Term::Role, "involves", Term::WorkProcess, Flavor::subProcessOf,
              Term::Activity, Flavor::activityPartOf};
    case AxiomId::A6:
      return {Term::Activity, Term::Role, "involves", Term::Activity, Flavor::subActivityOf,
              Term::Task, Flavor::taskPartOf};
  }
  return {};
}

}  // namespace

std::vector<Finding> naive_axiom_oracle(const InstanceGraph& graph, AxiomId axiom,
                                        AxiomReading reading) {
  const auto& schema = builtin_schema();
  const Formula f = formula(axiom);

  std::vector<const EntityRecord*> domain;
  for (const auto& [id, e] : graph.entities()) domain.push_back(&e);
  const std::size_t n = domain.size();

  auto holds = [&](const char* rel, std::size_t x, std::size_t y) {
    return graph.relations().contains(RelationEdge{rel, domain[x]->id, domain[y]->id});
  };
  auto linked = [&](std::size_t part, std::size_t whole, Flavor flavor) {
    return graph.composition().contains(CompositionEdge{domain[whole]->id, domain[part]->id, flavor});
  };
  auto is = [&](std::size_t x, Term kind) { return schema.is_subkind(domain[x]->kind, kind); };

  // below[w][z]: z is reachable from w through one or more composition edges
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  if (reading == AxiomReading::transitive) {
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t z = 0; z < n; ++z) {
        for (Flavor fl : {Flavor::subProcessOf, Flavor::activityPartOf, Flavor::subActivityOf,
                          Flavor::taskPartOf}) {
          if (linked(z, w, fl)) below[w][z] = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (below[i][k] && below[k][j]) below[i][j] = true;
        }
      }
    }
  }

  std::vector<Finding> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool premise = is(x, f.whole) && is(y, f.object) && holds(f.rel, x, y);
      if (!premise) continue;
      bool witnessed = false;
      for (std::size_t z = 0; z < n && !witnessed; ++z) {
        if (reading == AxiomReading::direct) {
          witnessed = (is(z, f.part_a) && holds(f.rel, z, y) && linked(z, x, f.link_a)) ||
                      (is(z, f.part_b) && holds(f.rel, z, y) && linked(z, x, f.link_b));
        } else {
          witnessed = is(z, Term::WorkEntity) && holds(f.rel, z, y) && below[x][z];
        }
      }
      if (!witnessed) {
        out.push_back({std::string(to_string(axiom)), Severity::error,
                       {domain[x]->id.str(), domain[y]->id.str()},
                       "formula " + std::string(to_string(axiom)) + " is false for this binding"});
      }
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace procco
