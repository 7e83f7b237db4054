#include "procco/refinement.hpp"

#include <algorithm>
#include <sstream>

#include "procco/errors.hpp"
#include "procco/text.hpp"
#include "procco/validator.hpp"

namespace procco {

const std::vector<RefinementRow>& builtin_matrix() {
  static const std::vector<RefinementRow> rows = [] {
    std::vector<RefinementRow> out;
    for (const auto& r : builtin_schema().relationships()) {
      out.push_back({&r, r.tfo_parent, r.source_mult, r.target_mult});
    }
    return out;
  }();
  return rows;
}

const RefinementRow& matrix_row(std::string_view relationship) {
  const auto& schema = builtin_schema().relationship_schema(relationship);
  for (const auto& row : builtin_matrix()) {
    if (row.pco == &schema) return row;
  }
  throw Error(ErrorCode::invalid_relationship,
              "no matrix row for '" + std::string(relationship) + "'");
}

std::string_view to_string(CardComparison c) {
  switch (c) {
    case CardComparison::equal: return "equal";
    case CardComparison::narrowing: return "narrowing";
    case CardComparison::widening: return "widening";
  }
  return "?";
}

CardComparison compare_cards(const Multiplicity& child, const Multiplicity& parent) {
  if (child == parent) return CardComparison::equal;
  bool lower_ok = child.lower >= parent.lower;
  bool upper_ok = !parent.upper || (child.upper && *child.upper <= *parent.upper);
  return lower_ok && upper_ok ? CardComparison::narrowing : CardComparison::widening;
}

std::vector<RowCheck> classify_matrix() {
  std::vector<RowCheck> out;
  for (const auto& row : builtin_matrix()) {
    out.push_back({&row, compare_cards(row.pco_source_card, row.tfo.source_card),
                   compare_cards(row.pco_target_card, row.tfo.target_card)});
  }
  return out;
}

std::vector<Finding> check_schema_refinement() {
  std::vector<Finding> out;
  for (const auto& check : classify_matrix()) {
    const auto& row = *check.row;
    const std::string rel(row.pco->name);
    auto report = [&](const char* code, const char* side, const Multiplicity& child,
                      const Multiplicity& parent) {
      out.push_back({code, Severity::warning, {rel},
                     std::string(side) + " card " + child.str() + " widens ThingFO '" +
                         std::string(display_name(row.tfo.name)) + "' card " + parent.str()});
    };
    if (check.source == CardComparison::widening) {
      report("R001", "source", row.pco_source_card, row.tfo.source_card);
    }
    if (check.target == CardComparison::widening) {
      report("R002", "target", row.pco_target_card, row.tfo.target_card);
    }
  }
  canonicalize(out);
  return out;
}

std::vector<LiftedEdge> lift(const InstanceGraph& graph) {
  std::vector<LiftedEdge> out;
  out.reserve(graph.relations().size());
  for (const auto& edge : graph.relations()) {
    out.push_back({matrix_row(edge.rel).tfo.name, edge.source, edge.target});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_matrix_text() {
  std::ostringstream out;
  out << "card\tTerm 1\trelationship name\tcard\tTerm 2\tcard\tTerm 1\trelationship name\tcard\tTerm 2\n";
  for (const auto& row : builtin_matrix()) {
    out << row.pco_source_card.str() << '\t' << row.pco->source_label << '\t' << row.pco->name
        << '\t' << row.pco_target_card.str() << '\t' << row.pco->target_label << '\t'
        << row.tfo.source_card.str() << '\t' << row.tfo.source_term << '\t'
        << display_name(row.tfo.name) << '\t' << row.tfo.target_card.str() << '\t'
        << row.tfo.target_term << '\n';
  }
  return out.str();
}

std::string render_matrix_canonical() {
  const auto& schema = builtin_schema();
  std::ostringstream out;
  out << "procco-matrix 1\n";
  for (const auto& row : builtin_matrix()) {
    out << "row " << text::underscored(row.pco->name) << ' ' << row.pco_source_card.str() << ' '
        << schema.name(row.pco->source_kind) << ' ' << row.pco_target_card.str() << ' '
        << schema.name(row.pco->target_kind) << ' ' << to_string(row.tfo.name) << ' '
        << row.tfo.source_card.str() << ' ' << row.tfo.target_card.str() << ' '
        << text::quote(row.tfo.source_term) << ' ' << text::quote(row.tfo.target_term) << '\n';
  }
  return out.str();
}

std::string render_refinement_check_text() {
  std::ostringstream out;
  out << "\nrefinement check\n";
  for (const auto& c : classify_matrix()) {
    const auto& row = *c.row;
    out << row.pco->name << "\tsource " << to_string(c.source) << " (" << row.pco_source_card.str()
        << " vs " << row.tfo.source_card.str() << ")\ttarget " << to_string(c.target) << " ("
        << row.pco_target_card.str() << " vs " << row.tfo.target_card.str() << ")\n";
  }
  auto findings = check_schema_refinement();
  if (!findings.empty()) out << '\n' << render_findings_text(findings);
  return out.str();
}

std::string render_refinement_check_canonical() {
  std::ostringstream out;
  for (const auto& c : classify_matrix()) {
    out << "check " << text::underscored(c.row->pco->name) << " source " << to_string(c.source)
        << " target " << to_string(c.target) << '\n';
  }
  for (const auto& f : check_schema_refinement()) {
    out << "finding " << f.code << ' ' << to_string(f.severity) << ' '
        << text::underscored(f.subjects.front()) << ' ' << text::quote(f.message) << '\n';
  }
  return out.str();
}

}  // namespace procco
