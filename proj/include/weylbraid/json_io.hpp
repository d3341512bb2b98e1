#pragma once

#include <string>

#include "json.hpp"
#include "weylbraid/artin.hpp"
#include "weylbraid/defmodel.hpp"
#include "weylbraid/dynkin.hpp"
#include "weylbraid/errors.hpp"
#include "weylbraid/int_matrix.hpp"
#include "weylbraid/lattice.hpp"
#include "weylbraid/rational.hpp"
#include "weylbraid/weyl.hpp"

// JSON shapes for every value the command-line tool prints or reads.
// Rationals travel as "p/q" strings, matrices as arrays of rows, braid
// words as the same whitespace-separated text the parser accepts, and
// infinite Coxeter bonds as null.

namespace nlohmann {

template <>
struct adl_serializer<boost::rational<long long>> {
  static void to_json(json& j, const boost::rational<long long>& r);
  static void from_json(const json& j, boost::rational<long long>& r);
};

}  // namespace nlohmann

namespace weylbraid {

void to_json(nlohmann::json& j, const IntMatrix& m);
void to_json(nlohmann::json& j, const DynkinDiagram& d);
void to_json(nlohmann::json& j, const KodairaFiber& f);
void to_json(nlohmann::json& j, const WeylElement& e);
void to_json(nlohmann::json& j, const Hyperplane& h);
void to_json(nlohmann::json& j, const RootSystem& r);
void to_json(nlohmann::json& j, const BraidWord& w);
void to_json(nlohmann::json& j, const GarsideNormalForm& nf);
void to_json(nlohmann::json& j, const RelationCheck& c);
void to_json(nlohmann::json& j, const RelationReport& r);
void to_json(nlohmann::json& j, const AdeConfiguration& c);
void to_json(nlohmann::json& j, const BFieldCompatibility& c);
void to_json(nlohmann::json& j, const GradedClass& g);
void to_json(nlohmann::json& j, const InducedMapResult& r);
void to_json(nlohmann::json& j, const CurveSet& s);
void to_json(nlohmann::json& j, const ExceptionalCensus& c);
void to_json(nlohmann::json& j, const OrbitRelation& r);
void to_json(nlohmann::json& j, const WallCodimension& w);
void to_json(nlohmann::json& j, const DeformationModel& m);

// Cycle notation for an automorphism needs the node labels.
nlohmann::json automorphism_to_json(const DynkinDiagram& d,
                                    const DiagramAutomorphism& a);

// {"error": {"code", "message", "detail"}}
nlohmann::json error_to_json(const Error& e);

// Accepts {"type": "C3"}, a bare Cartan matrix, or
// {"cartan": [[...]], "affine": bool, "nodes": [...]}; the named type is
// re-identified from the matrix rather than trusted.
DynkinDiagram diagram_from_json(const nlohmann::json& j);

IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace weylbraid
