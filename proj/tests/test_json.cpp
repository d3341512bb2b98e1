#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylbraid/defmodel.hpp"
#include "weylbraid/errors.hpp"
#include "weylbraid/json_io.hpp"
#include "weylbraid/lattice.hpp"

using namespace weylbraid;
using nlohmann::json;

TEST_CASE("scalar and matrix shapes") {
  CHECK(json(Rat(1, 2)) == json("1/2"));
  CHECK(json(Rat(-3)) == json("-3"));
  CHECK(json(Rat(0)) == json("0"));
  CHECK(json::parse("\"5/10\"").get<Rat>() == Rat(1, 2));
  CHECK(json(7).get<Rat>() == Rat(7));

  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = -1;
  m.at(1, 0) = -1;
  m.at(1, 1) = 2;
  CHECK(json(m) == json::parse("[[2,-1],[-1,2]]"));
  CHECK(matrix_from_json(json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1],[2,3]]")),
                  InvalidArgumentError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[0.5]]")), InvalidArgumentError);
}

TEST_CASE("diagram round trip re-identifies the kind") {
  const DynkinDiagram c3 = build_diagram(parse_type_label("C3"));
  json j = c3;
  CHECK(j["kind"] == "C3");
  CHECK(j["rank"] == 3);
  CHECK(j["affine"] == false);
  CHECK(j["nodes"] == json::parse("[\"1\",\"2\",\"3\"]"));

  // a lying kind is ignored; the matrix decides
  json forged = {{"cartan", j["cartan"]}, {"type_claim", "E8"}};
  DynkinDiagram back = diagram_from_json(forged);
  CHECK(back.kind_string() == "C3");
  CHECK(back.cartan() == c3.cartan());

  // bare matrix form
  CHECK(diagram_from_json(j["cartan"]).kind_string() == "C3");
  // named form
  CHECK(diagram_from_json(json{{"type", "G2"}}).kind_string() == "G2");
  // affine matrices identify too
  const DynkinDiagram a2t = affinize(build_diagram(parse_type_label("A2")));
  json aff = {{"cartan", a2t.cartan()}, {"affine", true}};
  CHECK(diagram_from_json(aff).kind_string() == "A2~");

  CHECK_THROWS_AS(diagram_from_json(json{{"rank", 3}}), InvalidArgumentError);
}

TEST_CASE("group, braid and lattice payloads") {
  const DynkinDiagram a2 = build_diagram(parse_type_label("A2"));
  json e = word_to_element(a2, {1, 2});
  CHECK(e["word"] == json::parse("[1,2]"));
  CHECK(e["length"] == 2);
  CHECK(e["matrix"].is_array());

  json w = parse_braid_word("1 -2 1");
  CHECK(w == "1 -2 1");

  json nf = normal_form(a2, parse_braid_word("1 1"));
  CHECK(nf["delta_power"] == 0);
  CHECK(nf["factors"] == json::parse("[[1],[1]]"));
  CHECK(nf["canonical_length"] == 2);

  json rep = verify_braid_relations(a2);
  CHECK(rep["all_hold"] == true);
  CHECK(rep["checks"][0]["nodes"] == json::parse("[1,2]"));
  CHECK(rep["checks"][0]["bond"] == 3);

  // the rank-1 affine bond serializes as null, in relation checks and in
  // the diagram's own Coxeter matrix
  const DynkinDiagram a1t = affinize(build_diagram(parse_type_label("A1")));
  json unbounded = verify_braid_relations(a1t);
  CHECK(unbounded["checks"][0]["bond"].is_null());
  const json a1t_doc = a1t;
  CHECK(a1t_doc["coxeter"][0][1].is_null());
  CHECK(a1t_doc["coxeter"][1][0].is_null());
  CHECK(a1t_doc["coxeter"][0][0] == 1);
  CHECK(a1t_doc["cartan"] == json::parse("[[2,-2],[-2,2]]"));

  json conf = identity_configuration(a2);
  CHECK(conf["type"] == "A2");
  CHECK(conf["classes"] == json::parse("[[1,0],[0,1]]"));
  CHECK(conf["gram"] == json::parse("[[-2,1],[1,-2]]"));

  json comp = enhanced_symmetry_bfield(identity_configuration(a2),
                                       {Rat(1, 2), Rat(0)});
  CHECK(comp["enhanced"] == false);
  CHECK(comp["failing"] == json::parse("[2]"));
  CHECK(comp["pairings"] == json::parse("[\"0\",\"1/2\"]"));
}

TEST_CASE("model payloads and errors") {
  DeformationModel m = build_model(build_diagram(parse_type_label("A2")), 2);
  json cj = census(m, {Rat(1), Rat(3)});
  CHECK(cj["surfaces"] == json::array());
  CHECK(cj["curves"].size() == 3);
  CHECK(cj["curves"][0]["count"] == 2);
  CHECK(cj["curves"][0]["root"].is_array());

  json mj = m;
  CHECK(mj["model"] == "threefold");
  CHECK(mj["genus"] == 2);
  CHECK(mj["node_genus"] == json::parse("[2,2]"));
  CHECK(mj["walls"][0]["normal"] == json::parse("[2,-1]"));

  json sj = build_surface_model(build_diagram(parse_type_label("A2")));
  CHECK(sj["model"] == "surface");
  CHECK_FALSE(sj.contains("genus"));

  json err;
  try {
    parse_type_label("B2");
  } catch (const Error& ex) {
    err = error_to_json(ex);
  }
  CHECK(err["error"]["code"] == "classification_error");
  CHECK(err["error"]["message"].is_string());
}
