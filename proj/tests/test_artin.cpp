#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylbraid/artin.hpp"
#include "weylbraid/errors.hpp"

using namespace weylbraid;

namespace {

DynkinDiagram diagram(const std::string& label) {
  return build_diagram(parse_type_label(label));
}

BraidWord bw(std::vector<int> letters) { return BraidWord{std::move(letters)}; }

}  // namespace

TEST_CASE("braid word text form") {
  CHECK(parse_braid_word("1 2 -1").letters == std::vector<int>{1, 2, -1});
  CHECK(parse_braid_word("  3   -2 ").letters == std::vector<int>{3, -2});
  CHECK(parse_braid_word("").letters.empty());
  CHECK(to_string(bw({1, 2, -1})) == "1 2 -1");
  CHECK_THROWS_AS(parse_braid_word("0"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_braid_word("1 x"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_braid_word("1.5"), InvalidArgumentError);
}

TEST_CASE("normal forms over the rank-2 chain") {
  const auto a2 = diagram("A2");

  CHECK(normal_form(a2, bw({})).is_identity());

  auto nf = normal_form(a2, bw({1}));
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors == std::vector<std::vector<int>>{{1}});

  // The half twist.
  nf = normal_form(a2, bw({1, 2, 1}));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());
  CHECK(normal_form(a2, bw({2, 1, 2})) == nf);

  // Its square is central and collects as Delta^2.
  nf = normal_form(a2, bw({1, 2, 1, 1, 2, 1}));
  CHECK(nf.delta_power == 2);
  CHECK(nf.factors.empty());

  // A square of a generator does not merge into one factor.
  nf = normal_form(a2, bw({1, 1}));
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors == std::vector<std::vector<int>>{{1}, {1}});

  // Words that happen to be simple collapse to a single factor.
  nf = normal_form(a2, bw({2, 1}));
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors == std::vector<std::vector<int>>{{2, 1}});

  // An inverse generator costs one Delta.
  nf = normal_form(a2, bw({-1}));
  CHECK(nf.delta_power == -1);
  CHECK(nf.factors == std::vector<std::vector<int>>{{1, 2}});

  CHECK(normal_form(a2, bw({1, -1})).is_identity());
  CHECK(normal_form(a2, bw({-1, 1})).is_identity());
  CHECK(normal_form(a2, bw({1, 2, -2, -2, 2, -1})).is_identity());
}

TEST_CASE("normal form round trips") {
  for (const char* label : {"A2", "A3", "C2", "G2"}) {
    const auto d = diagram(label);
    const std::vector<BraidWord> samples = {
        bw({}),           bw({1}),         bw({-1}),          bw({1, 2}),
        bw({2, -1, 2}),   bw({1, 1, 2}),   bw({-2, -1}),      bw({1, 2, 1, 2}),
        bw({1, -2, 1, 2}), bw({2, 2, 1, -1, 2}), bw({-1, -1, 2, 1, 1, -2}),
    };
    for (const auto& w : samples) {
      const auto nf = normal_form(d, w);
      CHECK(words_equal(d, w, normal_form_to_word(d, nf)));
      // Normal form of the spelled-out form is stable.
      CHECK(normal_form(d, normal_form_to_word(d, nf)) == nf);
    }
  }
}

TEST_CASE("word problem") {
  const auto a2 = diagram("A2");
  CHECK(words_equal(a2, bw({1, 2, 1}), bw({2, 1, 2})));
  CHECK(words_equal(a2, bw({1, 2, -2, 1}), bw({1, 1})));
  CHECK_FALSE(words_equal(a2, bw({1}), bw({2})));
  CHECK_FALSE(words_equal(a2, bw({1}), bw({-1})));
  CHECK_FALSE(words_equal(a2, bw({1}), bw({1, 1, 1})));
  CHECK_FALSE(words_equal(a2, bw({1, 2}), bw({2, 1})));

  const auto c2 = diagram("C2");
  CHECK(words_equal(c2, bw({1, 2, 1, 2}), bw({2, 1, 2, 1})));
  CHECK_FALSE(words_equal(c2, bw({1, 2, 1}), bw({2, 1, 2})));

  const auto g2 = diagram("G2");
  CHECK(words_equal(g2, bw({1, 2, 1, 2, 1, 2}), bw({2, 1, 2, 1, 2, 1})));
  CHECK_FALSE(words_equal(g2, bw({1, 2, 1, 2, 1}), bw({2, 1, 2, 1, 2})));

  // Inverses in context: conjugating preserves equality.
  CHECK(words_equal(a2, bw({-1, 2, 1}), bw({2, 1, -2})));
}

TEST_CASE("projection to the Weyl group") {
  const auto a2 = diagram("A2");
  const auto w = project_to_weyl(a2, bw({1, -2, 1}));
  CHECK(equal(w, word_to_element(a2, {1, 2, 1})));
  CHECK(project_to_weyl(a2, bw({1, -1})).is_identity());
}

TEST_CASE("budgets and domain limits") {
  CHECK_THROWS_AS(normal_form(affinize(diagram("A2")), bw({1})), UnsupportedError);
  CHECK_THROWS_AS(normal_form(diagram("A9"), bw({1})), BudgetError);
  BraidWord big;
  big.letters.assign(10001, 1);
  CHECK_THROWS_AS(normal_form(diagram("A2"), big), BudgetError);
  CHECK_THROWS_AS(normal_form(diagram("A2"), bw({3})), NodeIndexError);
}

TEST_CASE("defining relations hold") {
  for (const char* label : {"A1", "A2", "A3", "A4", "C2", "C3", "B3", "D4", "F4", "G2"}) {
    const auto report = verify_braid_relations(diagram(label));
    CHECK(report.all_hold);
  }
  CHECK(verify_braid_relations(diagram("A3")).checks.size() == 3);

  // Affine diagrams go through the matrix route; the rank-1 bond is
  // unbounded and vacuous.
  for (const char* label : {"A1", "A2", "A3"}) {
    const auto report = verify_braid_relations(affinize(diagram(label)));
    CHECK(report.all_hold);
  }
  const auto a1t = verify_braid_relations(affinize(diagram("A1")));
  REQUIRE(a1t.checks.size() == 1);
  CHECK(a1t.checks[0].bond == kInfiniteBond);
}

TEST_CASE("folded generators of the even chain") {
  const auto g1 = michel_generators(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == bw({1, 2, 1}));

  const auto g2 = michel_generators(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == bw({1, 4}));
  CHECK(g2[1] == bw({2, 3, 2}));

  const auto g3 = michel_generators(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0] == bw({1, 6}));
  CHECK(g3[1] == bw({2, 5}));
  CHECK(g3[2] == bw({3, 4, 3}));

  CHECK_THROWS_AS(michel_generators(0), InvalidArgumentError);
}

TEST_CASE("folded generators satisfy the smaller braid relations") {
  CHECK(verify_folded_braid_relations(1).all_hold);  // vacuous
  CHECK(verify_folded_braid_relations(1).checks.empty());

  const auto r2 = verify_folded_braid_relations(2);
  CHECK(r2.all_hold);
  REQUIRE(r2.checks.size() == 1);
  CHECK(r2.checks[0].bond == 4);

  const auto r3 = verify_folded_braid_relations(3);
  CHECK(r3.all_hold);
  CHECK(r3.checks.size() == 3);

  CHECK_THROWS_AS(verify_folded_braid_relations(5), BudgetError);
}

TEST_CASE("two commuting distant generators") {
  const auto a3 = diagram("A3");
  CHECK(words_equal(a3, bw({1, 3}), bw({3, 1})));
  CHECK_FALSE(words_equal(a3, bw({1, 2}), bw({2, 1})));
}
