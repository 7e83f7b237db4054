#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "procco/cli.hpp"

using namespace procco;
using procco::cli::ExitCode;

namespace {

struct Run {
  ExitCode code;
  std::string out;
  std::string err;
};

Run procco_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  auto code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return testing::data_path(std::string("fixtures/") + name); }

int count_lines(const std::string& s, std::string_view prefix) {
  int n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += line.starts_with(prefix);
  return n;
}

}  // namespace

TEST_CASE("matrix") {
  auto r = procco_cli({"matrix"});
  CHECK(r.code == ExitCode::clean);
  CHECK(r.out == testing::read_file("golden/matrix.tsv"));
  CHECK(count_lines(r.out, "") == 19);

  auto checked = procco_cli({"matrix", "--check"});
  CHECK(checked.out.starts_with(r.out));
  CHECK(count_lines(checked.out, "R00") == 4);

  auto canonical = procco_cli({"matrix", "--format", "canonical", "--check"});
  CHECK(canonical.out.starts_with("procco-matrix 1\n"));
  CHECK(count_lines(canonical.out, "row ") == 18);
}

TEST_CASE("validate") {
  auto clean = procco_cli({"validate", fixture("clean_model.pco")});
  CHECK(clean.code == ExitCode::clean);
  CHECK(clean.out.empty());
  CHECK(clean.err.empty());
  CHECK(procco_cli({"validate", "--strict", fixture("clean_model.pco")}).code == ExitCode::clean);

  auto a1 = procco_cli({"validate", fixture("a1_violation.pco")});
  CHECK(a1.code == ExitCode::findings);
  CHECK(a1.err.empty());
  CHECK(count_lines(a1.out, "A1 error wp1,pe1: ") == 1);
  CHECK(count_lines(a1.out, "A") == 1);

  auto canonical = procco_cli({"validate", "--format", "canonical", fixture("a1_violation.pco")});
  CHECK(canonical.out.starts_with("procco-report 1\nmode lenient\n"));
  CHECK(count_lines(canonical.out, "finding A1 error wp1,pe1 ") == 1);
}

TEST_CASE("validate modes and options") {
  auto lenient = procco_cli({"validate", fixture("required_by.pco")});
  CHECK(lenient.code == ExitCode::clean);
  auto strict = procco_cli({"validate", "--strict", fixture("required_by.pco")});
  CHECK(strict.code == ExitCode::findings);
  CHECK(count_lines(strict.out, "M003 error tool1:") == 1);

  const std::string direct_entity = "entity we : WorkEntity {}\n";
  CHECK(count_lines(procco_cli({"validate", "-"}, direct_entity).out, "P001") == 1);
  auto relaxed = procco_cli({"validate", "--partitions", fixture("relaxed.cfg"), "-"}, direct_entity);
  CHECK(count_lines(relaxed.out, "P001") == 0);
  auto missing_cfg = procco_cli({"validate", "--partitions", "/nonexistent.cfg", "-"}, direct_entity);
  CHECK(missing_cfg.code == ExitCode::usage);

  const std::string chain =
      "entity wp1 : WorkProcess {}\nentity a1 : Activity {}\nentity t1 : Task {}\n"
      "entity pe1 : NaturalProduct {}\nrel consumes wp1 -> pe1\nrel consumes t1 -> pe1\n"
      "comp wp1 contains a1\ncomp a1 contains t1\n";
  CHECK(procco_cli({"validate", "-"}, chain).code == ExitCode::findings);
  CHECK(count_lines(procco_cli({"validate", "--transitive", "-"}, chain).out, "A1") == 0);
}

TEST_CASE("lint never fails on findings") {
  auto r = procco_cli({"lint", fixture("a1_violation.pco")});
  CHECK(r.code == ExitCode::clean);
  CHECK(count_lines(r.out, "A1 warning wp1,pe1") == 1);
  CHECK(r.out.find(" error ") == std::string::npos);
}

TEST_CASE("several files keep argument order") {
  auto r = procco_cli({"validate", fixture("clean_model.pco"), fixture("a1_violation.pco")});
  CHECK(r.code == ExitCode::findings);
  auto first = r.out.find("== " + fixture("clean_model.pco") + " ==");
  auto second = r.out.find("== " + fixture("a1_violation.pco") + " ==");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  CHECK(first < second);

  auto broken = procco_cli({"validate", fixture("a1_violation.pco"), "-"}, "entty\n");
  CHECK(broken.code == ExitCode::parse_failure);
}

TEST_CASE("parse failures") {
  auto r = procco_cli({"validate", "-"}, "entity wp1 : Workflow {}\n");
  CHECK(r.code == ExitCode::parse_failure);
  CHECK(r.out.empty());
  CHECK(r.err == "<stdin>:1:14: error P002: unknown term kind 'Workflow'\n");

  auto missing = procco_cli({"validate", "/no/such/file.pco"});
  CHECK(missing.code == ExitCode::parse_failure);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  // warnings alone do not stop validation
  auto warned = procco_cli({"export", "-"}, "entity t1 : Task { start_date = \"soon\" }\n");
  CHECK(warned.code == ExitCode::clean);
  CHECK(warned.err.find("warning P006") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(procco_cli({}).code == ExitCode::usage);
  CHECK(procco_cli({"frobnicate"}).code == ExitCode::usage);
  CHECK(procco_cli({"validate"}).code == ExitCode::usage);
  CHECK(procco_cli({"validate", "--format", "xml", "x.pco"}).code == ExitCode::usage);
  CHECK(procco_cli({"query", fixture("clean_model.pco"), "--op", "descendants"}).code ==
        ExitCode::usage);
  CHECK(procco_cli({"query", fixture("clean_model.pco"), "--op", "witness", "--axiom", "A9"}).code ==
        ExitCode::usage);
  CHECK(procco_cli({"--help"}).code == ExitCode::clean);
}

TEST_CASE("query") {
  auto d = procco_cli({"query", fixture("clean_model.pco"), "--op", "descendants", "--id", "wp1",
                       "--transitive"});
  CHECK(d.code == ExitCode::clean);
  CHECK(d.out == "a1\nt1\n");

  auto c = procco_cli({"query", fixture("clean_model.pco"), "--op", "closure", "--id", "wp1", "--rel",
                       "involves"});
  CHECK(c.out == "r1\n");

  auto w = procco_cli({"query", fixture("clean_model.pco"), "--op", "witness", "--axiom", "A5",
                       "--subjects", "wp1,r1"});
  CHECK(w.out == "satisfied a1\n");

  auto u = procco_cli({"query", fixture("a1_violation.pco"), "--op", "witness", "--axiom", "A1",
                       "--subjects", "wp1,pe1"});
  CHECK(u.out == "unsatisfied\n");

  auto bad = procco_cli({"query", fixture("a1_violation.pco"), "--op", "witness", "--axiom", "A1",
                         "--subjects", "wp1"});
  CHECK(bad.code == ExitCode::usage);
  CHECK(bad.err.find("arity") != std::string::npos);
}

TEST_CASE("export, schema and stats") {
  auto e1 = procco_cli({"export", fixture("clean_model.pco")});
  auto e2 = procco_cli({"export", fixture("clean_model.pco")});
  CHECK(e1.code == ExitCode::clean);
  CHECK(e1.out.starts_with("procco-canonical 1\n"));
  CHECK(e1.out == e2.out);

  auto dsl = procco_cli({"export", "--format", "dsl", fixture("clean_model.pco")});
  auto again = procco_cli({"export", "-"}, dsl.out);
  CHECK(again.out == e1.out);

  auto schema = procco_cli({"schema"});
  CHECK(schema.out.starts_with("TERMS (30)\n"));
  CHECK(schema.out.find("\nATTRIBUTES (30)\n") != std::string::npos);
  CHECK(schema.out.find("\nRELATIONSHIPS (18)\n") != std::string::npos);
  CHECK(schema.out.find("\nAXIOMS (6)\n") != std::string::npos);
  auto canonical = procco_cli({"schema", "--format", "canonical"});
  CHECK(canonical.out == testing::read_file("golden/schema.canonical"));

  auto stats = procco_cli({"stats", fixture("a1_violation.pco")});
  CHECK(stats.out ==
        "entities 3\n"
        "entity Activity 1\n"
        "entity NaturalProduct 1\n"
        "entity WorkProcess 1\n"
        "relations 1\n"
        "relation consumes 1\n"
        "composition 1\n"
        "composition activityPartOf 1\n");
}
