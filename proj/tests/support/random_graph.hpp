#pragma once
// Seeded random instance graphs for the property tests and the acceptance
// gate. Everything is driven by std::mt19937 so a failing seed reproduces.

#include <cstdint>
#include <random>
#include <string>

#include "procco/axioms.hpp"
#include "procco/graph.hpp"

namespace procco::testing {

struct GraphShape {
  int max_entities = 12;
  int min_entities = 1;
  double edge_density = 0.35;       // expected relation edges per entity pair, scaled
  double ill_typed_ratio = 0.15;    // share of relation edges with arbitrary endpoints
  double composition_ratio = 0.5;   // probability of trying a composition edge per entity
  double attribute_ratio = 0.4;     // probability each schema attribute is filled
  bool work_heavy = true;           // bias kinds towards axiom-relevant terms
};

// A graph with mixed kinds, random relation edges (mostly well-typed) and an
// acyclic composition hierarchy. Attribute values always conform to their
// schema type so the graph survives format/parse unchanged.
InstanceGraph random_graph(std::mt19937& rng, const GraphShape& shape = {});

// Random text that exercises escaping: quotes, backslashes, tabs, newlines and
// multi-byte UTF-8.
std::string random_text(std::mt19937& rng);

// Adds composition children and edges until no axiom reports a violation
// under `reading`. Existing children are reused where the kinds fit, else a
// fresh Activity or Task is created. Returns the number of repairs.
int repair_axioms(InstanceGraph& graph, std::mt19937& rng,
                  AxiomReading reading = AxiomReading::direct);

}  // namespace procco::testing
