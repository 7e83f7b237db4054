#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "procco/errors.hpp"
#include "procco/refinement.hpp"
#include "random_graph.hpp"

using namespace procco;

namespace {

// Classifies by listing admitted counts; every printed bound is at most 1, so
// counts up to 8 separate all cases.
CardComparison enumerate(const Multiplicity& child, const Multiplicity& parent) {
  bool child_extra = false, parent_extra = false;
  for (std::size_t n = 0; n <= 8; ++n) {
    child_extra |= child.admits(n) && !parent.admits(n);
    parent_extra |= parent.admits(n) && !child.admits(n);
  }
  if (child_extra) return CardComparison::widening;
  return parent_extra ? CardComparison::narrowing : CardComparison::equal;
}

}  // namespace

TEST_CASE("matrix rows") {
  const auto& m = builtin_matrix();
  REQUIRE(m.size() == 18);
  std::set<std::string_view> names;
  for (const auto& row : m) names.insert(row.pco->name);
  CHECK(names.size() == 18);

  const auto& uses = matrix_row("uses");
  CHECK(uses.tfo.name == ThingFoRelationName::interacts_with_other);
  CHECK(uses.pco_source_card == Multiplicity::one_or_more());

  const auto& relates = matrix_row("relates");
  CHECK(relates.tfo.name == ThingFoRelationName::relates_with);
  CHECK(relates.tfo.source_card == Multiplicity::many());
  CHECK(relates.tfo.target_card == Multiplicity::many());

  CHECK(matrix_row("involves").tfo.name == ThingFoRelationName::defines);
  CHECK(matrix_row("pertains_to_product_category").tfo.name == ThingFoRelationName::belongs_to);
  CHECK_THROWS_AS(matrix_row("consume"), Error);
}

TEST_CASE("card comparison examples") {
  CHECK(compare_cards(Multiplicity::many(), Multiplicity::many()) == CardComparison::equal);
  CHECK(compare_cards(Multiplicity::one_or_more(), Multiplicity::many()) ==
        CardComparison::narrowing);
  CHECK(compare_cards(Multiplicity::many(), Multiplicity::one_or_more()) ==
        CardComparison::widening);
  CHECK(compare_cards(Multiplicity::exactly_one(), Multiplicity::one_or_more()) ==
        CardComparison::narrowing);
  CHECK(compare_cards(Multiplicity{0, 1u}, Multiplicity::exactly_one()) == CardComparison::widening);
  CHECK(compare_cards(Multiplicity{2, 4u}, Multiplicity{3, std::nullopt}) ==
        CardComparison::widening);
}

TEST_CASE("card comparison matches enumeration") {
  std::vector<Multiplicity> cards{Multiplicity::many(), Multiplicity::one_or_more(),
                                  Multiplicity::exactly_one(), Multiplicity{0, 1u},
                                  Multiplicity{1, 2u}, Multiplicity{2, std::nullopt},
                                  Multiplicity{0, 3u}, Multiplicity{2, 2u}};
  for (const auto& a : cards) {
    for (const auto& b : cards) {
      CAPTURE(a.str());
      CAPTURE(b.str());
      CHECK(compare_cards(a, b) == enumerate(a, b));
    }
  }
}

TEST_CASE("schema refinement check") {
  int widenings = 0;
  for (const auto& rc : classify_matrix()) {
    CHECK(rc.source == enumerate(rc.row->pco_source_card, rc.row->tfo.source_card));
    CHECK(rc.target == enumerate(rc.row->pco_target_card, rc.row->tfo.target_card));
    widenings += (rc.source == CardComparison::widening) + (rc.target == CardComparison::widening);
  }
  auto fs = check_schema_refinement();
  CHECK(static_cast<int>(fs.size()) == widenings);
  REQUIRE(fs.size() == 4);
  for (const auto& f : fs) CHECK(f.severity == Severity::warning);
  CHECK(fs[0].code == "R001");
  CHECK(fs[0].subjects == std::vector<std::string>{"consumes"});
  CHECK(fs[1].subjects == std::vector<std::string>{"is required by"});
  CHECK(fs[2].code == "R002");
  CHECK(fs[2].subjects == std::vector<std::string>{"is assigned to"});
  CHECK(fs[3].subjects == std::vector<std::string>{"is related with"});
  CHECK(check_schema_refinement() == fs);

  // involves is a narrowing of defines, relates equals relates with
  for (const auto& rc : classify_matrix()) {
    if (rc.row->pco->name == "involves") {
      CHECK(rc.source == CardComparison::narrowing);
      CHECK(rc.target == CardComparison::narrowing);
    }
    if (rc.row->pco->name == "relates") {
      CHECK(rc.source == CardComparison::equal);
      CHECK(rc.target == CardComparison::equal);
    }
  }
}

TEST_CASE("matrix text matches the transcribed table") {
  CHECK(render_matrix_text() == testing::read_file("golden/matrix.tsv"));
}

TEST_CASE("lift") {
  CHECK(lift(InstanceGraph{}).empty());

  InstanceGraph g;
  g.add_entity("h1", Term::HumanAgent);
  g.add_entity("tool1", Term::Tool);
  g.add_relation("uses", "h1", "tool1");
  CHECK(lift(g) == std::vector<LiftedEdge>{
                       {ThingFoRelationName::interacts_with_other, EntityId("h1"), EntityId("tool1")}});

  InstanceGraph p;
  p.add_entity("pe", Term::Outcome);
  p.add_entity("cat", Term::ProductCategory);
  p.add_relation("pertains to product category", "pe", "cat");
  CHECK(lift(p) == std::vector<LiftedEdge>{
                       {ThingFoRelationName::belongs_to, EntityId("pe"), EntityId("cat")}});
}

TEST_CASE("lift preserves every edge") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto g = testing::random_graph(rng);
    auto lifted = lift(g);
    CHECK(lifted.size() == g.relations().size());
    CHECK(std::is_sorted(lifted.begin(), lifted.end()));
    for (const auto& r : g.relations()) {
      LiftedEdge e{matrix_row(r.rel).tfo.name, r.source, r.target};
      CHECK(std::binary_search(lifted.begin(), lifted.end(), e));
    }
  }
}
