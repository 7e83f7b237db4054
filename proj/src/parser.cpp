#include "procco/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "procco/errors.hpp"
#include "procco/text.hpp"

namespace procco {

namespace {

// `bad` stands in for a string the lexer already reported.
enum class Tok : std::uint8_t { ident, string, literal, lbrace, rbrace, colon, equals, arrow, comma, bad, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;  // identifier / literal spelling, or unescaped string content
  int line = 1;
  int column = 1;
  int end_column = 1;       // one past the last character
  bool line_start = false;  // first token on its line
};

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
}
bool digit(char c) { return c >= '0' && c <= '9'; }
bool literal_char(char c) {
  return digit(c) || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == ':' || c == '.' ||
         c == '+' || c == '-';
}

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_begin_ = pos_;
        at_line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      Token t;
      t.line = line_;
      t.column = column();
      t.line_start = at_line_start;
      at_line_start = false;
      std::size_t start = pos_;
      if (ident_start(c)) {
        while (pos_ < src_.size() && ident_char(src_[pos_]) &&
               !(src_[pos_] == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>')) {
          ++pos_;
        }
        t.kind = Tok::ident;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
        while (pos_ < src_.size() && literal_char(src_[pos_])) ++pos_;
        t.kind = Tok::literal;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '"') {
        if (!lex_string(t)) t.kind = Tok::bad;
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        t.kind = Tok::arrow;
        t.text = "->";
      } else {
        ++pos_;
        t.text = std::string(1, c);
        switch (c) {
          case '{': t.kind = Tok::lbrace; break;
          case '}': t.kind = Tok::rbrace; break;
          case ':': t.kind = Tok::colon; break;
          case '=': t.kind = Tok::equals; break;
          case ',': t.kind = Tok::comma; break;
          default: {
            // swallow the rest of a multi-byte character
            while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) {
              t.text.push_back(src_[pos_++]);
            }
            diags_.push_back({Severity::error, "P008", "unexpected character '" + t.text + "'",
                              t.line, t.column});
            continue;
          }
        }
      }
      t.end_column = column();
      out.push_back(std::move(t));
    }
    Token eof;
    eof.line = line_;
    eof.column = column();
    eof.line_start = true;
    out.push_back(eof);
    return out;
  }

 private:
  int column() const {
    return static_cast<int>(text::utf8_length(src_.substr(line_begin_, pos_ - line_begin_))) + 1;
  }

  // On failure reports P006 and skips to the end of the line.
  bool lex_string(Token& t) {
    ++pos_;  // opening quote
    std::string value;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') break;
      ++pos_;
      if (c == '"') {
        t.kind = Tok::string;
        t.text = std::move(value);
        return true;
      }
      if (c != '\\') {
        value.push_back(c);
        continue;
      }
      char e = pos_ < src_.size() ? src_[pos_] : '\0';
      switch (e) {
        case '\\': value.push_back('\\'); break;
        case '"': value.push_back('"'); break;
        case 'n': value.push_back('\n'); break;
        case 't': value.push_back('\t'); break;
        case 'r': value.push_back('\r'); break;
        default: {
          diags_.push_back({Severity::error, "P006",
                            std::string("unknown escape sequence '\\") + e + "' in string",
                            t.line, t.column});
          skip_line();
          return false;
        }
      }
      ++pos_;
    }
    diags_.push_back({Severity::error, "P008", "unterminated string", t.line, t.column});
    skip_line();
    return false;
  }

  void skip_line() {
    while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
  }

  std::string_view src_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  std::size_t line_begin_ = 0;
  int line_ = 1;
};

struct AttrDecl {
  Token name;
  Token value;
};
struct EntityDecl {
  Token id;
  Token kind;
  std::vector<AttrDecl> attrs;
};
struct RelDecl {
  Token name;
  Token source;
  Token target;
};
struct CompDecl {
  Token parent;
  Token child;
};

bool is_keyword(const Token& t) {
  return t.kind == Tok::ident && (t.text == "entity" || t.text == "rel" || t.text == "comp");
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::string:
    case Tok::bad: return "string";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  void run() {
    while (peek().kind != Tok::end) {
      const Token& head = peek();
      if (head.kind == Tok::bad) {
        recover();
        continue;
      }
      if (!head.line_start) {
        error(head, "P008", "expected end of line before " + describe(head));
        recover();
        continue;
      }
      if (head.kind == Tok::ident && head.text == "entity") {
        parse_entity();
      } else if (head.kind == Tok::ident && head.text == "rel") {
        parse_rel();
      } else if (head.kind == Tok::ident && head.text == "comp") {
        parse_comp();
      } else {
        error(head, "P001", "unknown keyword " + describe(head) + " (expected entity, rel or comp)");
        recover();
      }
    }
  }

  std::vector<EntityDecl> entities;
  std::vector<RelDecl> rels;
  std::vector<CompDecl> comps;

 private:
  struct SyntaxError {};

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }

  void error(const Token& at, std::string code, std::string message) {
    diags_.push_back({Severity::error, std::move(code), std::move(message), at.line, at.column});
  }

  // Something is missing before `found`. When `found` already sits on a later
  // line, point just past the last token of the statement instead.
  void missing(const Token& found, std::string message) {
    if (found.line_start && pos_ > 0) {
      const Token& prev = toks_[pos_ - 1];
      diags_.push_back({Severity::error, "P008", std::move(message), prev.line, prev.end_column});
    } else {
      error(found, "P008", std::move(message));
    }
  }

  // Consumes one token of kind `k` on the current line or raises P008.
  const Token& expect(Tok k, std::string_view what) {
    const Token& t = peek();
    if (t.kind == Tok::bad && !t.line_start) throw SyntaxError{};
    if (t.kind != k || t.line_start) {
      missing(t, "expected " + std::string(what) + ", found " +
                     (t.line_start ? "end of line" : describe(t)));
      throw SyntaxError{};
    }
    return next();
  }

  void expect_line_end() {
    if (peek().kind == Tok::bad) throw SyntaxError{};
    if (!peek().line_start) {
      error(peek(), "P008", "expected end of line before " + describe(peek()));
      throw SyntaxError{};
    }
  }

  // Skip to the next token that starts a line.
  void recover() {
    next();
    while (!peek().line_start) next();
  }

  void parse_rel() {
    next();
    try {
      RelDecl r;
      r.name = expect(Tok::ident, "relationship name");
      r.source = expect(Tok::ident, "source id");
      expect(Tok::arrow, "'->'");
      r.target = expect(Tok::ident, "target id");
      expect_line_end();
      rels.push_back(std::move(r));
    } catch (const SyntaxError&) {
      while (!peek().line_start) next();
    }
  }

  void parse_comp() {
    next();
    try {
      CompDecl c;
      c.parent = expect(Tok::ident, "parent id");
      const Token& kw = expect(Tok::ident, "'contains'");
      if (kw.text != "contains") {
        error(kw, "P008", "expected 'contains', found " + describe(kw));
        throw SyntaxError{};
      }
      c.child = expect(Tok::ident, "child id");
      expect_line_end();
      comps.push_back(std::move(c));
    } catch (const SyntaxError&) {
      while (!peek().line_start) next();
    }
  }

  void parse_entity() {
    next();
    EntityDecl e;
    try {
      e.id = expect(Tok::ident, "entity id");
      expect(Tok::colon, "':'");
      e.kind = expect(Tok::ident, "term kind");
      expect(Tok::lbrace, "'{'");
    } catch (const SyntaxError&) {
      // drop the rest of the header and any block it opened
      bool open = false;
      while (!peek().line_start) {
        if (peek().kind == Tok::lbrace) open = true;
        if (peek().kind == Tok::rbrace) open = false;
        next();
      }
      while (open && peek().kind != Tok::end && !(peek().line_start && is_keyword(peek()))) {
        open = next().kind != Tok::rbrace;
      }
      while (!peek().line_start) next();
      return;
    }
    bool ok = true;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::end) {
        if (ok) error(t, "P008", "unterminated entity block for '" + e.id.text + "'");
        ok = false;
        break;
      }
      if (t.kind == Tok::rbrace) {
        next();
        if (!peek().line_start) {
          error(peek(), "P008", "expected end of line before " + describe(peek()));
          while (!peek().line_start) next();
          ok = false;
        }
        break;
      }
      if (t.line_start && is_keyword(t)) {
        // an error already reported in this block usually explains the missing brace
        if (ok) missing(t, "missing '}' before " + describe(t));
        ok = false;
        break;
      }
      if (t.kind == Tok::comma && !e.attrs.empty()) {
        next();
        continue;
      }
      const std::size_t attempt = pos_;
      try {
        AttrDecl a;
        if (t.kind == Tok::bad) throw SyntaxError{};
        if (t.kind != Tok::ident) {
          error(t, "P008", "expected attribute name, found " + describe(t));
          throw SyntaxError{};
        }
        a.name = next();
        if (peek().kind != Tok::equals || peek().line_start) {
          missing(peek(), "expected '=' after attribute '" + a.name.text + "'");
          throw SyntaxError{};
        }
        next();
        const Token& v = peek();
        if (v.kind == Tok::bad && !v.line_start) throw SyntaxError{};
        if (v.line_start || (v.kind != Tok::string && v.kind != Tok::literal)) {
          if (v.line_start) {
            const Token& eq = toks_[pos_ - 1];
            diags_.push_back({Severity::error, "P006",
                              "missing value for attribute '" + a.name.text + "'", eq.line,
                              eq.end_column});
          } else {
            error(v, "P006", "malformed value for attribute '" + a.name.text + "'");
          }
          throw SyntaxError{};
        }
        a.value = next();
        e.attrs.push_back(std::move(a));
      } catch (const SyntaxError&) {
        ok = false;
        // resynchronise at the next line inside the block
        if (pos_ == attempt) next();
        while (!peek().line_start && peek().kind != Tok::rbrace) next();
      }
    }
    if (ok) entities.push_back(std::move(e));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

}  // namespace

ParseResult parse(const SourceDocument& source) {
  ParseResult result;
  auto& diags = result.diagnostics;
  const std::string_view src = source.text;

  if (auto bad = text::first_invalid_utf8(src)) {
    auto line_begin = src.rfind('\n', *bad == 0 ? 0 : *bad - 1);
    line_begin = (line_begin == std::string_view::npos || *bad == 0) ? 0 : line_begin + 1;
    int line = 1 + static_cast<int>(std::count(src.begin(), src.begin() + *bad, '\n'));
    int column = 1 + static_cast<int>(text::utf8_length(src.substr(line_begin, *bad - line_begin)));
    diags.push_back({Severity::error, "P000", "input is not valid UTF-8", line, column});
    return result;
  }

  Lexer lexer(src, diags);
  Parser parser(lexer.run(), diags);
  parser.run();

  const auto& schema = builtin_schema();
  InstanceGraph graph;
  std::set<std::string> declared;  // including entities rejected for other reasons

  auto warn = [&](const Token& at, std::string code, std::string msg) {
    diags.push_back({Severity::warning, std::move(code), std::move(msg), at.line, at.column});
  };
  auto fail = [&](const Token& at, std::string code, std::string msg) {
    diags.push_back({Severity::error, std::move(code), std::move(msg), at.line, at.column});
  };

  for (auto& e : parser.entities) {
    bool fresh = declared.insert(e.id.text).second;
    auto kind = schema.find_term(e.kind.text);
    if (!fresh) {
      fail(e.id, "P003", "duplicate entity id '" + e.id.text + "'");
    }
    if (!kind) {
      fail(e.kind, "P002", "unknown term kind '" + e.kind.text + "'");
    }
    Attributes attrs;
    std::set<std::string> seen;
    bool attrs_ok = true;
    for (const auto& a : e.attrs) {
      const AttributeSchema* schema_attr = kind ? schema.find_attribute(*kind, a.name.text) : nullptr;
      std::string key = schema_attr ? std::string(schema_attr->name) : a.name.text;
      if (!seen.insert(key).second) {
        fail(a.name, "P006", "attribute '" + a.name.text + "' given twice");
        attrs_ok = false;
        continue;
      }
      AttributeValue value;
      if (a.value.kind == Tok::string) {
        value = AttributeValue::text(a.value.text);
      } else if (text::is_decimal(a.value.text)) {
        value = AttributeValue{AttributeValue::Kind::number, a.value.text};
      } else if (text::is_iso_datetime(a.value.text)) {
        value = AttributeValue{AttributeValue::Kind::date, a.value.text};
      } else {
        fail(a.value, "P006",
             "malformed value '" + a.value.text + "' (expected string, date-time or number)");
        attrs_ok = false;
        continue;
      }
      if (schema_attr && !value.conforms_to(schema_attr->value_type)) {
        warn(a.value, "P006",
             "attribute '" + a.name.text + "' expects " +
                 std::string(to_string(schema_attr->value_type)) + ", got " +
                 std::string(to_string(value.kind)));
      }
      attrs.emplace(a.name.text, std::move(value));
    }
    if (fresh && kind && attrs_ok) graph.add_entity(e.id.text, *kind, std::move(attrs));
  }

  auto resolve = [&](const Token& ref) {
    if (graph.find(ref.text)) return true;
    if (!declared.contains(ref.text)) {
      fail(ref, "P005", "reference to undeclared entity '" + ref.text + "'");
    }
    return false;
  };

  for (const auto& r : parser.rels) {
    bool ok = true;
    if (!schema.find_relationship(r.name.text) || r.name.text.find(' ') != std::string::npos) {
      fail(r.name, "P004", "unknown relationship '" + r.name.text + "'");
      ok = false;
    }
    ok = resolve(r.source) && ok;
    ok = resolve(r.target) && ok;
    if (ok) graph.add_relation(r.name.text, r.source.text, r.target.text);
  }

  for (const auto& c : parser.comps) {
    bool ok = resolve(c.parent);
    ok = resolve(c.child) && ok;
    if (!ok) continue;
    try {
      graph.add_composition(c.parent.text, c.child.text);
    } catch (const Error& err) {
      const Token& at = err.code() == ErrorCode::composition_cycle ? c.child : c.parent;
      fail(at, "P007", err.what());
    }
  }

  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::pair(a.line, a.column) < std::pair(b.line, b.column);
  });
  bool failed = std::any_of(diags.begin(), diags.end(),
                            [](const Diagnostic& d) { return d.severity == Severity::error; });
  if (!failed) result.graph = std::move(graph);
  return result;
}

SourceDocument format(const InstanceGraph& graph) {
  const auto& schema = builtin_schema();
  std::ostringstream out;
  for (const auto& [id, e] : graph.entities()) {
    out << "entity " << id.str() << " : " << schema.name(e.kind) << " {";
    if (e.attributes.empty()) {
      out << "}\n";
      continue;
    }
    out << '\n';
    for (const auto& [name, value] : e.attributes) {
      out << "  " << text::underscored(name) << " = "
          << (value.kind == AttributeValue::Kind::text ? text::quote(value.lexeme) : value.lexeme)
          << '\n';
    }
    out << "}\n";
  }
  if (!graph.relations().empty()) {
    if (!graph.empty()) out << '\n';
    for (const auto& r : graph.relations()) {
      out << "rel " << text::underscored(r.rel) << ' ' << r.source.str() << " -> "
          << r.target.str() << '\n';
    }
  }
  if (!graph.composition().empty()) {
    out << '\n';
    for (const auto& c : graph.composition()) {
      out << "comp " << c.parent.str() << " contains " << c.child.str() << '\n';
    }
  }
  return {out.str(), "<formatted>"};
}

std::string render(const Diagnostic& d, std::string_view origin) {
  std::ostringstream out;
  out << origin << ':' << d.line << ':' << d.column << ": " << to_string(d.severity) << ' '
      << d.code << ": " << d.message;
  return out.str();
}

}  // namespace procco
