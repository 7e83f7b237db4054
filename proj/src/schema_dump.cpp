#include "procco/schema_dump.hpp"

#include <sstream>

#include "procco/axioms.hpp"
#include "procco/schema.hpp"
#include "procco/text.hpp"

namespace procco {

namespace {

std::string parent_name(const OntologySchema& schema, const TermKind& t) {
  return t.parent ? std::string(schema.name(*t.parent)) : "-";
}

std::string children_list(const OntologySchema& schema, const Partition& p, const char* sep) {
  std::string out;
  for (Term c : p.children) {
    if (!out.empty()) out += sep;
    out += schema.name(c);
  }
  return out;
}

}  // namespace

std::string render_schema_text() {
  const auto& schema = builtin_schema();
  std::ostringstream out;
  out << "TERMS (" << schema.terms().size() << ")\n";
  for (const auto& t : schema.terms()) {
    out << t.name << "\tparent=" << parent_name(schema, t) << "\tstereotype="
        << to_string(t.tfo_stereotype) << "\tdetail=" << t.stereotype_detail << "\tsynonyms=";
    if (t.synonyms.empty()) out << '-';
    for (std::size_t i = 0; i < t.synonyms.size(); ++i) out << (i ? ", " : "") << t.synonyms[i];
    out << '\n';
  }
  out << "\nATTRIBUTES (" << schema.attributes().size() << ")\n";
  for (const auto& a : schema.attributes()) {
    out << schema.name(a.owner) << '\t' << a.name << '\t' << to_string(a.value_type) << '\n';
  }
  out << "\nRELATIONSHIPS (" << schema.relationships().size() << ")\n";
  for (const auto& r : schema.relationships()) {
    out << r.name << '\t' << schema.name(r.source_kind) << " -> " << schema.name(r.target_kind)
        << "\tsource " << r.source_mult.str() << "\ttarget " << r.target_mult.str() << "\tthingfo "
        << display_name(r.tfo_parent.name) << '\n';
  }
  out << "\nPARTITIONS (" << schema.partitions().size() << ")\n";
  for (const auto& p : schema.partitions()) {
    out << schema.name(p.parent) << "\t{" << (p.disjoint ? "disjoint" : "overlapping") << ", "
        << (p.complete ? "complete" : "incomplete") << "}\t" << children_list(schema, p, ", ")
        << '\n';
  }
  out << "\nAXIOMS (" << schema.axiom_ids().size() << ")\n";
  for (AxiomId a : schema.axiom_ids()) {
    const auto& s = axiom_shape(a);
    out << to_string(a) << '\t' << s.description << '\n';
  }
  out << "\nNOTES\n";
  for (const auto& t : schema.terms()) {
    for (const auto& n : t.notes) out << t.name << ": " << n << '\n';
  }
  return out.str();
}

std::string render_schema_canonical() {
  const auto& schema = builtin_schema();
  std::ostringstream out;
  out << "procco-schema 1\n";
  for (const auto& t : schema.terms()) {
    out << "term " << t.name << ' ' << parent_name(schema, t) << ' ' << to_string(t.tfo_stereotype)
        << ' ' << text::quote(t.stereotype_detail) << '\n';
    for (const auto& s : t.synonyms) out << "  synonym " << text::quote(s) << '\n';
  }
  for (const auto& a : schema.attributes()) {
    out << "attribute " << schema.name(a.owner) << ' ' << text::underscored(a.name) << ' '
        << to_string(a.value_type) << '\n';
  }
  for (const auto& r : schema.relationships()) {
    out << "relationship " << text::underscored(r.name) << ' ' << schema.name(r.source_kind) << ' '
        << schema.name(r.target_kind) << ' ' << r.source_mult.str() << ' ' << r.target_mult.str()
        << ' ' << to_string(r.tfo_parent.name) << '\n';
  }
  for (const auto& p : schema.partitions()) {
    out << "partition " << schema.name(p.parent) << ' ' << (p.disjoint ? "disjoint" : "overlapping")
        << ' ' << (p.complete ? "complete" : "incomplete") << ' ' << children_list(schema, p, ",")
        << '\n';
  }
  for (AxiomId a : schema.axiom_ids()) {
    const auto& s = axiom_shape(a);
    out << "axiom " << to_string(a) << ' ' << schema.name(s.whole_kind) << ' ' << s.relation << ' '
        << schema.name(s.object_kind) << '\n';
  }
  return out.str();
}

}  // namespace procco
