#pragma once

// The procco DSL (.pco):
//
//   document  = { statement } ;
//   statement = entity | rel | comp ;
//   entity    = "entity" id ":" TermKind "{" { attr [","] } "}" ;
//   attr      = name "=" ( string | date | number ) ;
//   rel       = "rel" relationship id "->" id ;
//   comp      = "comp" id "contains" id ;
//
// One statement per line (an entity block may span lines). `#` starts a line
// comment. Multi-word schema names are written with underscores
// (deals_with_work_entity, start_date). References may point forward.

#include <optional>
#include <string>
#include <vector>

#include "procco/finding.hpp"
#include "procco/graph.hpp"

namespace procco {

// Parser diagnostic codes.
//   P000 invalid UTF-8 (fatal)      P005 dangling reference
//   P001 unknown keyword            P006 malformed attribute / type mismatch (warning)
//   P002 unknown term kind          P007 illegal composition
//   P003 duplicate id               P008 syntax error
//   P004 unknown relationship
struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  int line = 1;
  int column = 1;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct SourceDocument {
  std::string text;
  std::string origin = "<stdin>";
};

struct ParseResult {
  std::optional<InstanceGraph> graph;  // absent iff an error diagnostic exists
  std::vector<Diagnostic> diagnostics;  // sorted by (line, column)

  bool ok() const { return graph.has_value(); }
};

ParseResult parse(const SourceDocument& source);

// Canonical DSL; parse(format(g)) reproduces g with no diagnostics.
SourceDocument format(const InstanceGraph& graph);

// "origin:line:column: severity CODE: message"
std::string render(const Diagnostic& d, std::string_view origin);

}  // namespace procco
