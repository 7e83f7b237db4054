#pragma once

#include <map>
#include <string>
#include <vector>

#include "procco/axioms.hpp"
#include "procco/finding.hpp"
#include "procco/graph.hpp"
#include "procco/schema.hpp"

namespace procco {

// lenient: lower-bound participation, missing parts and attribute problems are
// warnings, and "is required by" takes its lower bound from the relationship
// definition (0). strict: those become errors, the matrix card applies, and
// multi-parent composition is reported.
enum class Mode : std::uint8_t { lenient, strict };

std::string_view to_string(Mode m);

struct ValidationOptions {
  Mode mode = Mode::lenient;
  PartitionConfig partitions = PartitionConfig::defaults();
  AxiomReading reading = AxiomReading::direct;
};

struct ValidationReport {
  Mode mode = Mode::lenient;
  std::vector<Finding> findings;  // sorted by code, then subjects
  std::map<std::string, int> counts;

  bool clean() const { return findings.empty(); }
  bool has_errors() const;
};

ValidationReport validate(const InstanceGraph& graph, const ValidationOptions& options = {});

std::vector<Finding> check_types(const InstanceGraph& graph, Mode mode);
std::vector<Finding> check_multiplicities(const InstanceGraph& graph, Mode mode);
std::vector<Finding> check_partitions(const InstanceGraph& graph, const PartitionConfig& config,
                                      Mode mode = Mode::lenient);
std::vector<Finding> check_composition(const InstanceGraph& graph, Mode mode);
std::vector<Finding> check_axiom(const InstanceGraph& graph, AxiomId axiom,
                                 AxiomReading reading = AxiomReading::direct);

// Exhaustive evaluation of the axiom's first-order formula over every binding
// of its variables. Cubic in the entity count; meant for small graphs and as a
// cross-check of check_axiom.
std::vector<Finding> naive_axiom_oracle(const InstanceGraph& graph, AxiomId axiom,
                                        AxiomReading reading = AxiomReading::direct);

// Sorts findings canonically and removes exact duplicates.
void canonicalize(std::vector<Finding>& findings);

// Report writers. Text: one `CODE severity subjects: message` per line.
std::string render_text(const ValidationReport& report);
std::string render_canonical(const ValidationReport& report);
std::string render_findings_text(const std::vector<Finding>& findings);

}  // namespace procco
