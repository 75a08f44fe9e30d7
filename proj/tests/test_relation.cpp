#include <doctest.h>

#include "galois_kit/error.hpp"
#include "helpers.hpp"

using namespace galois_kit;
using namespace testing;

TEST_CASE("index sets") {
  const IndexSet s = IndexSet::numbered("t", 3);
  CHECK(s.names() == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(s.position("t2") == std::optional<std::size_t>(1));
  CHECK_FALSE(s.position("t4").has_value());
  CHECK_THROWS_AS(IndexSet({"a", "a"}), PreconditionError);
  CHECK_THROWS_AS(IndexSet(std::vector<std::string>{}), PreconditionError);
}

TEST_CASE("build_relation fills missing entries with zero") {
  const Lattice A = make_lukasiewicz_chain(3);
  const IndexSet I = IndexSet::numbered("i", 2), J = IndexSet::numbered("j", 2);
  const FuzzyRelation zero = build_relation(A, I, J, {});
  for (Element e : zero.values()) CHECK(e == A->bottom());

  const Lattice B = boolean();
  std::vector<RelationEntry> entries = {{"i1", "j1", "1"}, {"i2", "j1", "0"}};
  const FuzzyRelation crisp = build_relation(B, I, IndexSet::numbered("j", 1), entries);
  CHECK(crisp.at(0, 0) == B->top());
  CHECK(crisp.at(1, 0) == B->bottom());
  CHECK(relation_properties(crisp, false).boolean_valued);
}

TEST_CASE("build_relation rejects bad names and labels") {
  const Lattice A = make_lukasiewicz_chain(3);
  const IndexSet I = IndexSet::numbered("i", 1), J = IndexSet::numbered("j", 1);
  std::vector<RelationEntry> label = {{"i1", "j1", "0.3"}};
  CHECK_THROWS_AS(build_relation(A, I, J, label), PreconditionError);
  std::vector<RelationEntry> name = {{"i9", "j1", "1"}};
  CHECK_THROWS_AS(build_relation(A, I, J, name), PreconditionError);
}

TEST_CASE("transpose swaps shape and is an involution") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"0"}, {"1/2"}});
  const FuzzyRelation T = transpose(R);
  CHECK(T.domain() == R.codomain());
  CHECK(T.codomain() == R.domain());
  CHECK(T.at(0, 1) == el(A, "1/2"));
  for (const FuzzyRelation& S : all_relations(A, 2, 2)) CHECK(transpose(transpose(S)) == S);
}

TEST_CASE("relation property examples") {
  const Lattice A = make_lukasiewicz_chain(3);
  const RelationReport id = relation_properties(frame_grid(A, {{"1", "0"}, {"0", "1"}}));
  CHECK(id.reflexive);
  CHECK(id.symmetric);
  CHECK(id.transitive);
  CHECK(id.boolean_valued);
  CHECK(id.fuzzy_equivalence);

  const RelationReport half = relation_properties(frame_grid(A, {{"1", "1/2"}, {"1/2", "1"}}));
  CHECK(half.fuzzy_equivalence);
  CHECK_FALSE(half.boolean_valued);

  const RelationReport asym = relation_properties(frame_grid(A, {{"1", "1"}, {"1/2", "1"}}));
  CHECK_FALSE(asym.symmetric);
  CHECK(asym.witnesses.at("symmetric") == std::vector<std::string>{"t1", "t2"});
}

TEST_CASE("square properties on a non-square relation are an error") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"1", "0"}});
  CHECK_THROWS_AS(relation_properties(R), PreconditionError);
  CHECK_NOTHROW(relation_properties(R, false));
}

TEST_CASE("transpose preserves every property flag") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2, "t", "t")) {
    const RelationReport a = relation_properties(R), b = relation_properties(transpose(R));
    CHECK(a.reflexive == b.reflexive);
    CHECK(a.symmetric == b.symmetric);
    CHECK(a.transitive == b.transitive);
    CHECK(a.boolean_valued == b.boolean_valued);
  }
}

TEST_CASE("crisp transitivity is classical transitivity") {
  const Lattice B = boolean();
  std::size_t seen = 0;
  for (const FuzzyRelation& R : all_relations(B, 2, 2, "t", "t")) {
    bool classical = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          if (R.at(i, j) == B->top() && R.at(j, k) == B->top() && R.at(i, k) != B->top())
            classical = false;
    CHECK(relation_properties(R).transitive == classical);
    ++seen;
  }
  CHECK(seen == 16);
}

TEST_CASE("relation enumeration respects its budget") {
  const Lattice A = make_lukasiewicz_chain(3);
  CHECK(all_relations(A, 2, 2).size() == 81);
  CHECK_THROWS_AS(for_each_relation(A, IndexSet::numbered("i", 2), IndexSet::numbered("j", 2),
                                    [](const FuzzyRelation&) {}, 80),
                  BudgetExceeded);
}
