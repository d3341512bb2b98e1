#include "weylbraid/json_io.hpp"

namespace nlohmann {

void adl_serializer<boost::rational<long long>>::to_json(
    json& j, const boost::rational<long long>& r) {
  j = weylbraid::rational_to_string(r);
}

void adl_serializer<boost::rational<long long>>::from_json(
    const json& j, boost::rational<long long>& r) {
  if (j.is_number_integer())
    r = boost::rational<long long>(j.get<long long>());
  else
    r = weylbraid::parse_rational(j.get<std::string>());
}

}  // namespace nlohmann

namespace weylbraid {

void to_json(nlohmann::json& j, const IntMatrix& m) {
  j = m.to_rows();
}

void to_json(nlohmann::json& j, const DynkinDiagram& d) {
  // off-diagonal Coxeter entries equal to the infinite-bond marker
  // travel as null
  nlohmann::json coxeter = nlohmann::json::array();
  for (int r = 0; r < d.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < d.size(); ++c) {
      const long long m = d.coxeter().at(r, c);
      if (r != c && m == kInfiniteBond)
        row.push_back(nullptr);
      else
        row.push_back(m);
    }
    coxeter.push_back(row);
  }
  j = nlohmann::json{{"kind", d.kind_string()}, {"size", d.size()},
                     {"rank", d.rank()},        {"affine", d.affine()},
                     {"nodes", d.node_labels()}, {"cartan", d.cartan()},
                     {"coxeter", coxeter}};
}

void to_json(nlohmann::json& j, const KodairaFiber& f) {
  j = to_string(f);
}

void to_json(nlohmann::json& j, const WeylElement& e) {
  j = nlohmann::json{{"word", e.word()},
                     {"length", e.word().size()},
                     {"matrix", e.matrix()}};
}

void to_json(nlohmann::json& j, const Hyperplane& h) {
  j = nlohmann::json{{"node", h.node}, {"normal", h.normal}};
}

void to_json(nlohmann::json& j, const RootSystem& r) {
  j = nlohmann::json{{"simple", r.simple},
                     {"positive", r.positive},
                     {"positive_count", r.positive.size()},
                     {"root_count", r.all.size()}};
}

void to_json(nlohmann::json& j, const BraidWord& w) {
  j = to_string(w);
}

void to_json(nlohmann::json& j, const GarsideNormalForm& nf) {
  j = nlohmann::json{{"delta_power", nf.delta_power},
                     {"factors", nf.factors},
                     {"canonical_length", nf.factors.size()}};
}

void to_json(nlohmann::json& j, const RelationCheck& c) {
  j = nlohmann::json{{"nodes", {c.node_a, c.node_b}}, {"holds", c.holds}};
  j["bond"] = c.bond == kInfiniteBond ? nlohmann::json() : nlohmann::json(c.bond);
}

void to_json(nlohmann::json& j, const RelationReport& r) {
  j = nlohmann::json{{"all_hold", r.all_hold}, {"checks", r.checks}};
}

void to_json(nlohmann::json& j, const AdeConfiguration& c) {
  j = nlohmann::json{{"type", c.diagram.kind_string()},
                     {"ambient_rank", c.ambient.rank()},
                     {"gram", c.ambient.gram},
                     {"classes", c.classes}};
}

void to_json(nlohmann::json& j, const BFieldCompatibility& c) {
  j = nlohmann::json{{"enhanced", c.enhanced},
                     {"pairings", c.pairings},
                     {"failing", c.failing}};
}

void to_json(nlohmann::json& j, const GradedClass& g) {
  j = nlohmann::json{{"even", g.even}, {"odd", g.odd}};
}

void to_json(nlohmann::json& j, const InducedMapResult& r) {
  j = nlohmann::json{{"preserves", r.preserves}};
  if (r.preserves) {
    j["restricted"] = r.restricted;
  } else {
    j["escaping_basis_index"] = r.escaping_basis_index;
  }
}

void to_json(nlohmann::json& j, const CurveSet& s) {
  j = nlohmann::json{{"root", s.root}, {"count", s.count}};
}

void to_json(nlohmann::json& j, const ExceptionalCensus& c) {
  j = nlohmann::json{{"surfaces", c.surfaces}, {"curves", c.curves}};
}

void to_json(nlohmann::json& j, const OrbitRelation& r) {
  j = nlohmann::json{{"image", r.image},
                     {"relation", r.relation},
                     {"flopped", r.flopped},
                     {"count_each", r.count_each}};
}

void to_json(nlohmann::json& j, const WallCodimension& w) {
  j = nlohmann::json{{"node", w.node},
                     {"geometric", w.geometric},
                     {"model", w.model},
                     {"mismatch", w.mismatch}};
}

void to_json(nlohmann::json& j, const DeformationModel& m) {
  j = nlohmann::json{
      {"model", m.kind == ModelKind::Surface ? "surface" : "threefold"},
      {"type", m.diagram.kind_string()},
      {"rank", m.rank()},
      {"cover_degrees", m.cover_degree},
      {"walls", m.walls},
      {"trivial_action", m.trivial_action}};
  if (m.kind == ModelKind::Threefold) {
    j["genus"] = m.base_genus;
    j["node_genus"] = m.node_genus;
  }
}

nlohmann::json automorphism_to_json(const DynkinDiagram& d,
                                    const DiagramAutomorphism& a) {
  return nlohmann::json{{"cycles", cycles_to_string(d, a)},
                        {"order", a.order()},
                        {"image", a.image}};
}

nlohmann::json error_to_json(const Error& e) {
  return nlohmann::json{{"error",
                         {{"code", e.code()},
                          {"message", e.what()},
                          {"detail", e.detail()}}}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InvalidArgumentError("expected a JSON array of matrix rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw InvalidArgumentError("matrix rows have unequal lengths");
    for (int c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer())
        throw InvalidArgumentError("matrix entries must be integers");
      m.at(r, c) = j[r][c].get<long long>();
    }
  }
  return m;
}

DynkinDiagram diagram_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    const IntMatrix cartan = matrix_from_json(j);
    std::vector<std::string> labels;
    for (int i = 1; i <= cartan.rows(); ++i) labels.push_back(std::to_string(i));
    std::optional<TypeLabel> kind;
    if (auto id = identify_standard(cartan, false)) kind = id->label;
    return DynkinDiagram(std::move(labels), cartan, false, kind);
  }
  if (!j.is_object())
    throw InvalidArgumentError("expected a diagram object or Cartan matrix");
  if (j.contains("type"))
    return build_diagram(parse_type_label(j.at("type").get<std::string>()));
  if (!j.contains("cartan"))
    throw InvalidArgumentError("diagram object needs \"type\" or \"cartan\"");

  const IntMatrix cartan = matrix_from_json(j.at("cartan"));
  const bool affine = j.value("affine", false);
  std::vector<std::string> labels;
  if (j.contains("nodes")) {
    labels = j.at("nodes").get<std::vector<std::string>>();
  } else {
    for (int i = 0; i < cartan.rows(); ++i)
      labels.push_back(std::to_string(affine ? i : i + 1));
  }
  std::optional<TypeLabel> kind;
  if (auto id = identify_standard(cartan, affine)) kind = id->label;
  return DynkinDiagram(std::move(labels), cartan, affine, kind);
}

}  // namespace weylbraid
