#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "procco/parser.hpp"
#include "random_graph.hpp"

using namespace procco;

namespace {

ParseResult P(std::string text) { return parse({std::move(text), "t.pco"}); }

std::vector<std::string> codes(const ParseResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.diagnostics) out.push_back(d.code);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse a small model") {
  auto r = P(
      "# bicycle\n"
      "entity wp1 : WorkProcess { name = \"Build \\\"fast\\\"\", start_date = 2024-03-01 }\n"
      "entity a1 : Activity {\n"
      "  name = \"Frame\",\n"
      "  end_date = 2024-03-02T17:00:00Z\n"
      "}\n"
      "entity o1 : Outcome { value = -3.5 }\n"
      "rel produces wp1 -> o1\n"
      "rel produces a1 -> o1   # trailing comment\n"
      "comp wp1 contains a1\n");
  REQUIRE(r.ok());
  CHECK(r.diagnostics.empty());
  const auto& g = *r.graph;
  CHECK(g.entities().size() == 3);
  CHECK(g.at("wp1").attributes.at("name").lexeme == "Build \"fast\"");
  CHECK(g.at("wp1").attributes.at("start date") == AttributeValue::date("2024-03-01"));
  CHECK(g.at("a1").attributes.at("end date").lexeme == "2024-03-02T17:00:00Z");
  CHECK(g.at("o1").attributes.at("value") == AttributeValue::number("-3.5"));
  CHECK(g.relations().size() == 2);
  CHECK(g.composition().begin()->flavor == Flavor::activityPartOf);
}

TEST_CASE("forward references resolve") {
  auto r = P("rel consumes t1 -> pe1\ncomp a1 contains t1\nentity t1 : Task {}\n"
             "entity a1 : Activity {}\nentity pe1 : NaturalProduct {}\n");
  REQUIRE(r.ok());
  CHECK(r.graph->relations().size() == 1);
}

TEST_CASE("empty and comment-only documents") {
  CHECK(P("").ok());
  CHECK(P("# nothing\n\n   \n").graph->empty());
}

TEST_CASE("each diagnostic code") {
  struct Case {
    std::string text;
    std::string code;
    int line, column;
  };
  const Case cases[] = {
      {"entty x : Task {}\n", "P001", 1, 1},
      {"entity t1 : Tsk {}\n", "P002", 1, 13},
      {"entity a1 : Task {}\nentity a1 : Task {}\n", "P003", 2, 8},
      {"entity a1 : Task {}\nrel consume a1 -> a1\n", "P004", 2, 5},
      {"entity a1 : Task {}\nrel consumes a1 -> ghost\n", "P005", 2, 20},
      {"entity o2 : Outcome { value = 12abc }\n", "P006", 1, 31},
      {"entity t1 : Task { name = \"a\", name = \"b\" }\n", "P006", 1, 32},
      {"entity a1 : Activity {}\nentity o1 : Outcome {}\ncomp a1 contains o1\n", "P007", 3, 6},
      {"entity t1 : Task {}\ncomp t1 contains t1\n", "P007", 2, 18},
      {"entity a1 : Task {}\nrel consumes a1 a1\n", "P008", 2, 17},
      {"entity a1 Task {}\n", "P008", 1, 11},
      {"entity t1 : Task { name = \"open\n", "P008", 1, 27},
      {"entity a1 : Task {}\nrel consumes a1\nentity b : Task {}\n", "P008", 2, 16},
      {"entity t1 : Task { name =\n}\n", "P006", 1, 26},
      {"ab\xff", "P000", 1, 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto r = P(c.text);
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() >= 1);
    const auto& d = r.diagnostics.front();
    CHECK(d.code == c.code);
    CHECK(d.severity == Severity::error);
    CHECK(d.line == c.line);
    CHECK(d.column == c.column);
  }
}

TEST_CASE("a broken string is reported once") {
  auto r = P("entity t1 : Task { name = \"open\nentity t2 : Task {}\n");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "P008");
  auto esc = P("entity t1 : Task { name = \"a\\qb\" }\nentity t2 : Task {}\n");
  REQUIRE(esc.diagnostics.size() == 1);
  CHECK(esc.diagnostics[0].code == "P006");
  CHECK(esc.diagnostics[0].line == 1);
}

TEST_CASE("type mismatches are warnings and keep the value") {
  auto r = P("entity t1 : Task { start_date = \"soon\", name = 7 }\n");
  REQUIRE(r.ok());
  CHECK(codes(r) == std::vector<std::string>{"P006", "P006"});
  CHECK(r.diagnostics[0].severity == Severity::warning);
  CHECK(r.graph->at("t1").attributes.at("start date") == AttributeValue::text("soon"));
}

TEST_CASE("columns count code points") {
  // two-byte and three-byte characters before the error
  auto r = P("entity t1 : Task { name = \"\xc3\xa9\xe6\x97\xa5\", end_date = 99abc }\n");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].column == 44);
  auto bad = P("entity t1 : Task {}\n# caf\xc3\xa9 \xff\n");
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].code == "P000");
  CHECK(bad.diagnostics[0].line == 2);
  CHECK(bad.diagnostics[0].column == 8);
}

TEST_CASE("diagnostics are sorted and rendered") {
  auto r = P("rel consumes a -> b\nentty x\nentity t1 : Tsk {}\n");
  REQUIRE(r.diagnostics.size() >= 3);
  CHECK(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end(), [](auto& a, auto& b) {
    return std::pair(a.line, a.column) < std::pair(b.line, b.column);
  }));
  CHECK(render(r.diagnostics[0], "m.pco") ==
        "m.pco:1:14: error P005: reference to undeclared entity 'a'");
}

TEST_CASE("recovery reports every independent error") {
  // one broken statement per line, each on a line of its own
  const std::vector<std::string> breakers{
      "bogus line here",
      "entity zz : Robot {}",
      "rel frobnicates a1 -> t1",
      "rel consumes a1 -> nowhere",
      "entity q : Task { name = }",
      "comp t1 contains a1",
      "rel consumes a1",
  };
  const std::string base =
      "entity a1 : Activity { name = \"A\" }\n"
      "entity t1 : Task {}\n"
      "entity pe1 : NaturalProduct {}\n"
      "rel consumes a1 -> pe1\n"
      "comp a1 contains t1\n";
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto lines = lines_of(base);
    std::vector<std::string> chosen = breakers;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    int k = std::uniform_int_distribution<int>(1, static_cast<int>(chosen.size()))(rng);
    std::set<int> expected_lines;
    for (int i = 0; i < k; ++i) {
      auto at = std::uniform_int_distribution<std::size_t>(0, lines.size())(rng);
      lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(at), chosen[i]);
    }
    std::string text;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      text += lines[i] + "\n";
      if (std::find(chosen.begin(), chosen.begin() + k, lines[i]) != chosen.begin() + k) {
        expected_lines.insert(static_cast<int>(i) + 1);
      }
    }
    CAPTURE(text);
    auto r = P(text);
    CHECK_FALSE(r.ok());
    std::set<int> error_lines;
    int errors = 0;
    for (const auto& d : r.diagnostics) {
      if (d.severity == Severity::error) {
        ++errors;
        error_lines.insert(d.line);
      }
    }
    CHECK(errors == k);
    CHECK(error_lines == expected_lines);
  }
}

TEST_CASE("format writes the canonical DSL") {
  InstanceGraph g;
  g.add_entity("wp1", Term::WorkProcess, {{"name", AttributeValue::text("a\tb")}});
  g.add_entity("a1", Term::Activity);
  g.add_relation("deals_with_work_entity", "wp1", "a1");
  g.add_composition("wp1", "a1");
  CHECK(format(g).text ==
        "entity a1 : Activity {}\n"
        "entity wp1 : WorkProcess {\n"
        "  name = \"a\\tb\"\n"
        "}\n"
        "\n"
        "rel deals_with_work_entity wp1 -> a1\n"
        "\n"
        "comp wp1 contains a1\n");
}

TEST_CASE("parse(format(g)) reproduces random graphs") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    auto g = testing::random_graph(rng);
    auto doc = format(g);
    auto r = parse(doc);
    CAPTURE(doc.text);
    REQUIRE(r.ok());
    CHECK(r.diagnostics.empty());
    CHECK(*r.graph == g);
  }
}

TEST_CASE("fixtures parse cleanly") {
  for (const char* f : {"fixtures/clean_model.pco", "fixtures/required_by.pco",
                        "fixtures/a1_violation.pco"}) {
    CAPTURE(f);
    auto r = parse({testing::read_file(f), f});
    CHECK(r.ok());
    CHECK(r.diagnostics.empty());
  }
}

TEST_CASE("mutated documents never escape as exceptions") {
  static const std::string alphabet = "{}:=,->\"\\#\n abc1-.\xc3\xa9";
  std::mt19937 rng(55);
  for (int i = 0; i < 1000; ++i) {
    auto text = format(testing::random_graph(rng)).text;
    int edits = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      auto at = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: text.erase(at, 1); break;
        case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
        default: text[at] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    CAPTURE(text);
    ParseResult r;
    CHECK_NOTHROW(r = P(text));
    bool has_error = std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                                 [](const Diagnostic& d) { return d.severity == Severity::error; });
    CHECK(r.ok() != has_error);
    for (const auto& d : r.diagnostics) {
      CHECK(d.line >= 1);
      CHECK(d.column >= 1);
    }
  }
}
