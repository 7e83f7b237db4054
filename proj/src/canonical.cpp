#include <sstream>

#include "procco/errors.hpp"
#include "procco/graph.hpp"
#include "procco/text.hpp"

namespace procco {

namespace {

constexpr std::string_view kHeader = "procco-canonical 1";

// Splits a canonical line into bare words and at most one trailing quoted
// string (returned unescaped).
struct LineTokens {
  std::vector<std::string> words;
  std::optional<std::string> quoted;
};

LineTokens tokenize(std::string_view line, int lineno) {
  LineTokens out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw Error(ErrorCode::canonical_parse, msg, lineno); };
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    if (out.quoted) fail("unexpected text after quoted value");
    if (line[i] == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char c = line[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c != '\\') {
          value.push_back(c);
          continue;
        }
        if (i >= line.size()) fail("dangling escape");
        switch (char e = line[i++]) {
          case '\\': value.push_back('\\'); break;
          case '"': value.push_back('"'); break;
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          case 'r': value.push_back('\r'); break;
          default: fail(std::string("unknown escape \\") + e);
        }
      }
      if (!closed) fail("unterminated string");
      out.quoted = std::move(value);
      continue;
    }
    auto end = line.find(' ', i);
    if (end == std::string_view::npos) end = line.size();
    out.words.emplace_back(line.substr(i, end - i));
    i = end;
  }
  return out;
}

}  // namespace

std::string export_canonical(const InstanceGraph& graph) {
  const auto& schema = builtin_schema();
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& [id, e] : graph.entities()) {
    out << "entity " << id.str() << ' ' << schema.name(e.kind) << '\n';
    for (const auto& [name, value] : e.attributes) {
      out << "  attr " << text::underscored(name) << ' ' << to_string(value.kind) << ' '
          << text::quote(value.lexeme) << '\n';
    }
  }
  for (const auto& r : graph.relations()) {
    out << "rel " << text::underscored(r.rel) << ' ' << r.source.str() << ' ' << r.target.str()
        << '\n';
  }
  for (const auto& c : graph.composition()) {
    out << "comp " << c.parent.str() << ' ' << c.child.str() << ' ' << to_string(c.flavor) << '\n';
  }
  return out.str();
}

InstanceGraph import_canonical(std::string_view input) {
  InstanceGraph graph;
  struct Pending {
    std::string id;
    std::string kind;
    Attributes attributes;
    int line;
  };
  std::optional<Pending> pending;

  auto flush = [&] {
    if (!pending) return;
    try {
      graph.add_entity(pending->id, pending->kind, std::move(pending->attributes));
    } catch (const Error& e) {
      throw Error(ErrorCode::canonical_parse, e.what(), pending->line);
    }
    pending.reset();
  };

  int lineno = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < input.size()) {
    auto nl = input.find('\n', pos);
    if (nl == std::string_view::npos) {
      throw Error(ErrorCode::canonical_parse, "missing final newline", lineno + 1);
    }
    std::string_view line = input.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::canonical_parse, msg, lineno);
    };
    if (!saw_header) {
      if (line != kHeader) fail("expected header '" + std::string(kHeader) + "'");
      saw_header = true;
      continue;
    }
    if (line.empty()) fail("blank line");
    auto tokens = tokenize(line, lineno);
    const auto& w = tokens.words;
    if (w.empty()) fail("empty record");

    try {
      if (w[0] == "attr") {
        if (!line.starts_with("  attr ")) fail("attr must be indented by two spaces");
        if (!pending) fail("attr outside an entity group");
        if (w.size() != 3 || !tokens.quoted) fail("expected: attr <name> <type> \"value\"");
        AttributeValue value;
        if (w[2] == "text") {
          value = AttributeValue::text(*tokens.quoted);
        } else if (w[2] == "date") {
          value = AttributeValue::date(*tokens.quoted);
        } else if (w[2] == "number") {
          value = AttributeValue::number(*tokens.quoted);
        } else {
          fail("unknown value type '" + w[2] + "'");
        }
        if (!pending->attributes.emplace(w[1], std::move(value)).second) {
          fail("attribute '" + w[1] + "' repeated");
        }
        continue;
      }
      flush();
      if (line.starts_with(" ")) fail("unexpected indentation");
      if (tokens.quoted) fail("unexpected quoted value");
      if (w[0] == "entity") {
        if (w.size() != 3) fail("expected: entity <id> <TermKind>");
        if (!graph.relations().empty() || !graph.composition().empty()) {
          fail("entity records must precede rel and comp records");
        }
        pending = Pending{w[1], w[2], {}, lineno};
      } else if (w[0] == "rel") {
        if (w.size() != 4) fail("expected: rel <relationship> <source> <target>");
        if (!graph.composition().empty()) fail("rel records must precede comp records");
        if (w[1].find(' ') != std::string::npos) fail("relationship names use underscores");
        if (!graph.add_relation(w[1], w[2], w[3])) fail("duplicate rel record");
      } else if (w[0] == "comp") {
        if (w.size() != 4) fail("expected: comp <parent> <child> <flavor>");
        auto declared = parse_flavor(w[3]);
        if (!declared) fail("unknown flavor '" + w[3] + "'");
        auto before = graph.composition().size();
        if (graph.add_composition(w[1], w[2]) != *declared) {
          fail("flavor '" + w[3] + "' does not match the endpoint kinds");
        }
        if (graph.composition().size() == before) fail("duplicate comp record");
      } else {
        fail("unknown record '" + w[0] + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::canonical_parse) throw;
      throw Error(ErrorCode::canonical_parse, e.what(), lineno);
    }
  }
  if (!saw_header) throw Error(ErrorCode::canonical_parse, "empty document", 1);
  flush();
  return graph;
}

}  // namespace procco
