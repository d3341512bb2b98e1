#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylbraid/dynkin.hpp"
#include "weylbraid/errors.hpp"

using namespace weylbraid;

namespace {

DynkinDiagram diagram(const std::string& label) {
  return build_diagram(parse_type_label(label));
}

IntMatrix m(const std::vector<std::vector<long long>>& rows) { return IntMatrix(rows); }

}  // namespace

TEST_CASE("standard Cartan matrices") {
  CHECK(diagram("A2").cartan() == m({{2, -1}, {-1, 2}}));
  CHECK(diagram("G2").cartan() == m({{2, -3}, {-1, 2}}));
  CHECK(diagram("C2").cartan() == m({{2, -2}, {-1, 2}}));
  CHECK(diagram("B3").cartan() == m({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  CHECK(diagram("C3").cartan() == m({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  CHECK(diagram("F4").cartan() ==
        m({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  CHECK(diagram("D4").cartan() ==
        m({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));

  // E-series: chain 1-3-4-5-..., node 2 attached to node 4.
  const auto e6 = diagram("E6").cartan();
  CHECK(e6.at(0, 2) == -1);
  CHECK(e6.at(1, 3) == -1);
  CHECK(e6.at(0, 1) == 0);
  CHECK(e6.at(4, 5) == -1);

  CHECK(diagram("A5").simply_laced());
  CHECK(diagram("E8").simply_laced());
  CHECK_FALSE(diagram("C2").simply_laced());
  CHECK_FALSE(diagram("G2").simply_laced());
}

TEST_CASE("rank domains of the classification") {
  CHECK_THROWS_AS(parse_type_label("B2"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("D3"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("E5"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("E9"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("F5"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("G3"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("A0"), ClassificationError);
  CHECK_THROWS_AS(parse_type_label("H3"), InvalidArgumentError);
  CHECK(parse_type_label("A1") == TypeLabel{Letter::A, 1});
  CHECK(parse_type_label("C2") == TypeLabel{Letter::C, 2});
  CHECK(to_string(TypeLabel{Letter::E, 7}) == "E7");
}

TEST_CASE("Coxeter matrices") {
  CHECK(diagram("A2").coxeter().at(0, 1) == 3);
  CHECK(diagram("C2").coxeter().at(0, 1) == 4);
  CHECK(diagram("G2").coxeter().at(0, 1) == 6);
  CHECK(diagram("F4").coxeter().at(1, 2) == 4);
  CHECK(diagram("A3").coxeter().at(0, 2) == 2);
  CHECK(affinize(diagram("A1")).coxeter().at(0, 1) == kInfiniteBond);
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(DynkinDiagram({"1"}, m({{1}}), false), ClassificationError);
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, 1}, {1, 2}}), false),
                  ClassificationError);
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, -1}, {0, 2}}), false),
                  ClassificationError);
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, 0}, {0, 2}}), false),
                  ClassificationError);  // disconnected
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, -2}, {-2, 2}}), false),
                  ClassificationError);  // affine matrix with finite flag
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, -1}, {-1, 2}}), true),
                  ClassificationError);  // finite matrix with affine flag
  CHECK_THROWS_AS(DynkinDiagram({"1", "2"}, m({{2, -5}, {-1, 2}}), false),
                  ClassificationError);  // bond product out of range
  CHECK_NOTHROW(DynkinDiagram({"1", "2"}, m({{2, -2}, {-2, 2}}), true));

  CHECK_THROWS_AS(diagram("A3").node_index(0), NodeIndexError);
  CHECK_THROWS_AS(diagram("A3").node_index(4), NodeIndexError);
  CHECK(diagram("A3").node_index(3) == 2);
}

TEST_CASE("diagram symmetry groups") {
  CHECK(automorphism_group(diagram("A1")).size() == 1);
  CHECK(automorphism_group(diagram("A2")).size() == 2);
  CHECK(automorphism_group(diagram("A5")).size() == 2);
  CHECK(automorphism_group(diagram("D4")).size() == 6);
  CHECK(automorphism_group(diagram("D5")).size() == 2);
  CHECK(automorphism_group(diagram("E6")).size() == 2);
  CHECK(automorphism_group(diagram("E7")).size() == 1);
  CHECK(automorphism_group(diagram("E8")).size() == 1);
  CHECK(automorphism_group(diagram("F4")).size() == 1);  // arrow fixed
  CHECK(automorphism_group(diagram("G2")).size() == 1);
  CHECK(automorphism_group(diagram("C3")).size() == 1);

  CHECK(automorphism_group(affinize(diagram("A1"))).size() == 2);
  CHECK(automorphism_group(affinize(diagram("A2"))).size() == 6);   // dihedral
  CHECK(automorphism_group(affinize(diagram("D4"))).size() == 24);  // S4 on legs

  const auto group = automorphism_group(diagram("A2"));
  CHECK(group[0].is_identity());
  CHECK(group[1].image == std::vector<int>{1, 0});
  CHECK(group[1].order() == 2);

  // z2 on E6 is the chain flip (1 6)(3 5).
  const auto e6 = diagram("E6");
  const auto z2 = named_automorphism_generators(e6, "z2");
  REQUIRE(z2.size() == 1);
  CHECK(cycles_to_string(e6, z2[0]) == "(1 6)(3 5)");
  CHECK(parse_cycles(e6, "(1 6)(3 5)") == z2[0]);
  CHECK(parse_cycles(e6, "()").is_identity());
  CHECK_THROWS_AS(parse_cycles(e6, "(1 7)"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_cycles(e6, "(1 2"), InvalidArgumentError);

  CHECK_THROWS_AS(named_automorphism_generators(diagram("C3"), "z2"),
                  InvalidArgumentError);
  CHECK_THROWS_AS(named_automorphism_generators(diagram("D5"), "z3"),
                  InvalidArgumentError);
}

TEST_CASE("folding by chain reversal") {
  const auto c2 = fold(diagram("A3"), named_automorphism_generators(diagram("A3"), "z2"));
  CHECK(c2.kind_string() == "C2");
  CHECK(c2.cartan() == diagram("C2").cartan());
  CHECK(c2.node_labels() == std::vector<std::string>{"{1,3}", "2"});

  const auto c3 = fold(diagram("A5"), named_automorphism_generators(diagram("A5"), "z2"));
  CHECK(c3.kind_string() == "C3");
  CHECK(c3.cartan() == diagram("C3").cartan());
  CHECK(c3.node_labels() == std::vector<std::string>{"{1,5}", "{2,4}", "3"});

  CHECK(fold(diagram("A7"), named_automorphism_generators(diagram("A7"), "z2"))
            .kind_string() == "C4");
}

TEST_CASE("folding rejects orbits with adjacent nodes") {
  for (const char* label : {"A2", "A4", "A6"}) {
    const auto d = diagram(label);
    CHECK_THROWS_AS(fold(d, named_automorphism_generators(d, "z2")), FoldError);
  }
  // The offending orbit is reported.
  try {
    fold(diagram("A4"), named_automorphism_generators(diagram("A4"), "z2"));
    CHECK(false);
  } catch (const FoldError& e) {
    CHECK(e.detail().at("orbit") == "{2,3}");
  }
}

TEST_CASE("folding the fork and the triality") {
  const auto d4 = diagram("D4");
  const auto b3 = fold(d4, named_automorphism_generators(d4, "z2"));
  CHECK(b3.kind_string() == "B3");
  CHECK(b3.cartan() == diagram("B3").cartan());

  CHECK(fold(diagram("D5"), named_automorphism_generators(diagram("D5"), "z2"))
            .kind_string() == "B4");
  CHECK(fold(diagram("D6"), named_automorphism_generators(diagram("D6"), "z2"))
            .kind_string() == "B5");

  const auto g2_from_z3 = fold(d4, named_automorphism_generators(d4, "z3"));
  CHECK(g2_from_z3.kind_string() == "G2");
  CHECK(g2_from_z3.cartan() == diagram("G2").cartan());
  CHECK(g2_from_z3.node_labels() == std::vector<std::string>{"{1,3,4}", "2"});

  const auto g2_from_s3 = fold(d4, named_automorphism_generators(d4, "s3"));
  CHECK(g2_from_s3.kind_string() == "G2");
  CHECK(g2_from_s3.cartan() == diagram("G2").cartan());
}

TEST_CASE("folding E6 renumbers to the standard F4 order") {
  const auto e6 = diagram("E6");
  const auto f4 = fold(e6, named_automorphism_generators(e6, "z2"));
  CHECK(f4.kind_string() == "F4");
  CHECK(f4.cartan() == diagram("F4").cartan());
  CHECK(f4.node_labels() == std::vector<std::string>{"2", "4", "{3,5}", "{1,6}"});
}

TEST_CASE("folding by the trivial subgroup returns the same diagram") {
  const auto a3 = fold(diagram("A3"), {});
  CHECK(a3.kind_string() == "A3");
  CHECK(a3.cartan() == diagram("A3").cartan());
  CHECK(a3.node_labels() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("Cartan symmetrizers") {
  CHECK(cartan_symmetrizer(diagram("A4").cartan()) ==
        std::vector<long long>{1, 1, 1, 1});
  CHECK(cartan_symmetrizer(diagram("G2").cartan()) == std::vector<long long>{1, 3});
  CHECK(cartan_symmetrizer(diagram("B3").cartan()) == std::vector<long long>{2, 2, 1});
  CHECK(cartan_symmetrizer(diagram("C3").cartan()) == std::vector<long long>{1, 1, 2});
  CHECK(cartan_symmetrizer(diagram("F4").cartan()) ==
        std::vector<long long>{2, 2, 1, 1});
}

TEST_CASE("affinization") {
  const auto a1t = affinize(diagram("A1"));
  CHECK(a1t.affine());
  CHECK(a1t.size() == 2);
  CHECK(a1t.rank() == 1);
  CHECK(a1t.kind_string() == "A1~");
  CHECK(a1t.cartan() == m({{2, -2}, {-2, 2}}));
  CHECK(a1t.node_labels() == std::vector<std::string>{"0", "1"});

  const auto a2t = affinize(diagram("A2"));
  CHECK(a2t.cartan() == m({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));

  const auto c2t = affinize(diagram("C2"));
  CHECK(c2t.cartan() == m({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}));

  // The extra node of G2 hangs off the long node by a single bond.
  const auto g2t = affinize(diagram("G2"));
  CHECK(g2t.cartan() == m({{2, 0, -1}, {0, 2, -3}, {-1, -1, 2}}));

  // D4: extra node on the central node; E8: extra node at the long end.
  CHECK(affinize(diagram("D4")).cartan().at(0, 2) == -1);
  CHECK(affinize(diagram("D4")).cartan().at(0, 1) == 0);
  CHECK(affinize(diagram("E8")).cartan().at(0, 8) == -1);
  CHECK(affinize(diagram("E7")).cartan().at(0, 1) == -1);
  CHECK(affinize(diagram("E6")).cartan().at(0, 2) == -1);

  for (const char* label : {"A3", "C3", "F4", "E6"}) {
    const auto ext = affinize(diagram(label));
    CHECK(ext.cartan().determinant() == 0);
    CHECK(ext.rank() == diagram(label).size());
  }

  CHECK_THROWS_AS(affinize(affinize(diagram("A2"))), UnsupportedError);
}

TEST_CASE("recognising shuffled standard matrices") {
  // C3 with nodes listed in the order 3,1,2.
  const IntMatrix shuffled = m({{2, 0, -1}, {0, 2, -1}, {-2, -1, 2}});
  const auto id = identify_standard(shuffled, false);
  REQUIRE(id.has_value());
  CHECK(id->label == TypeLabel{Letter::C, 3});
  CHECK(id->std_to_given == std::vector<int>{1, 2, 0});

  CHECK(identify_standard(diagram("E7").cartan(), false)->label ==
        TypeLabel{Letter::E, 7});
  CHECK(identify_standard(affinize(diagram("C2")).cartan(), true)->label ==
        TypeLabel{Letter::C, 2});
}

TEST_CASE("fibre tags") {
  CHECK(parse_kodaira_fiber("I5") == KodairaFiber{KodairaFiber::Family::In, 5});
  CHECK(parse_kodaira_fiber("I*0") == KodairaFiber{KodairaFiber::Family::IStarN, 0});
  CHECK(parse_kodaira_fiber("I0*") == KodairaFiber{KodairaFiber::Family::IStarN, 0});
  CHECK(parse_kodaira_fiber("II*") == KodairaFiber{KodairaFiber::Family::IIStar, 0});
  CHECK(to_string(parse_kodaira_fiber("I*3")) == "I*3");
  CHECK_THROWS_AS(parse_kodaira_fiber("I2"), UnsupportedError);
  CHECK_THROWS_AS(parse_kodaira_fiber("I1"), UnsupportedError);
  CHECK_THROWS_AS(parse_kodaira_fiber("V*"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_kodaira_fiber("I"), InvalidArgumentError);
}

TEST_CASE("fibre diagrams") {
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I5")).kind_string() == "A4~");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I5")).size() == 5);
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I*0")).kind_string() == "D4~");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I*4")).kind_string() == "D8~");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("II*")).kind_string() == "E8~");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("III*")).kind_string() == "E7~");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("IV*")).kind_string() == "E6~");
}

TEST_CASE("fibre monodromy folds the affine diagram") {
  // I4 with the reflection fixing components 0 and 2.
  const auto base = kodaira_to_affine(parse_kodaira_fiber("I4"));
  const auto folded = kodaira_to_affine(parse_kodaira_fiber("I4"),
                                        {parse_cycles(base, "(1 3)")});
  CHECK(folded.kind_string() == "C2~");
  CHECK(folded.cartan() == affinize(diagram("C2")).cartan());

  // I*1 with the swap of the two far outer components.
  const auto d5t = kodaira_to_affine(parse_kodaira_fiber("I*1"));
  const auto foldedb = kodaira_to_affine(parse_kodaira_fiber("I*1"),
                                         {parse_cycles(d5t, "(4 5)")});
  CHECK(foldedb.kind_string() == "B4~");
  CHECK(foldedb.cartan() == affinize(diagram("B4")).cartan());

  // Rotations fold a cycle onto the smaller cycle of the orbit count.
  const auto a5t = kodaira_to_affine(parse_kodaira_fiber("I6"));
  const auto by_two = parse_cycles(a5t, "(0 2 4)(1 3 5)");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I6"), {by_two}).kind_string() == "A1~");
  const auto by_three = parse_cycles(a5t, "(0 3)(1 4)(2 5)");
  CHECK(kodaira_to_affine(parse_kodaira_fiber("I6"), {by_three}).kind_string() ==
        "A2~");
}

TEST_CASE("transitive monodromy is rejected") {
  const auto a2t = kodaira_to_affine(parse_kodaira_fiber("I3"));
  CHECK_THROWS_AS(
      kodaira_to_affine(parse_kodaira_fiber("I3"), {parse_cycles(a2t, "(0 1 2)")}),
      MonodromyError);

  const auto d4t = kodaira_to_affine(parse_kodaira_fiber("I*0"));
  CHECK_THROWS_AS(
      kodaira_to_affine(parse_kodaira_fiber("I*0"), {parse_cycles(d4t, "(0 1 3 4)")}),
      MonodromyError);

  // Non-transitive monodromy on I*0 is fine and folds to B3~.
  const auto folded = kodaira_to_affine(parse_kodaira_fiber("I*0"),
                                        {parse_cycles(d4t, "(3 4)")});
  CHECK(folded.affine());
}
