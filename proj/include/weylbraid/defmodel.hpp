#pragma once

#include <string>
#include <vector>

#include "weylbraid/dynkin.hpp"
#include "weylbraid/int_matrix.hpp"
#include "weylbraid/rational.hpp"
#include "weylbraid/weyl.hpp"

namespace weylbraid {

enum class ModelKind { Surface, Threefold };

// Linear model of a family of contractions over the reflection
// representation: one wall per node (the fixed hyperplane of that node's
// reflection), with the Weyl group permuting the fibres.  The threefold
// flavour additionally records a base curve of genus g; node j then
// carries a curve that covers the base with the degree forced by the
// relative root lengths (degree 1 everywhere on simply-laced diagrams).
struct DeformationModel {
  explicit DeformationModel(DynkinDiagram d) : diagram(std::move(d)) {}

  DynkinDiagram diagram;
  ModelKind kind = ModelKind::Threefold;
  int base_genus = 0;                    // threefold only
  std::vector<long long> cover_degree;   // per node
  std::vector<long long> node_genus;     // threefold only, per node
  std::vector<Hyperplane> walls;         // wall j = fixed locus of r_j
  std::vector<IntMatrix> action;         // generator matrices on the base
  bool trivial_action = false;           // genus-0 threefold

  int rank() const { return diagram.size(); }
};

// Threefold model over a base curve of genus `genus`.  Finite diagrams
// only; genus 0 additionally needs a simply-laced diagram (a higher-degree
// cover of a rational curve cannot drop below genus 0).
DeformationModel build_model(const DynkinDiagram& d, int genus);

// Surface model: the contracted fibre has a configuration of (-2)-curves,
// so the diagram must be finite and simply-laced.  No genus is recorded
// and fibres over one orbit are isomorphic, not merely birational.
DeformationModel build_surface_model(const DynkinDiagram& d);

struct CurveSet {
  IntVec root;      // positive root in simple-root coordinates
  long long count;  // number of curves in the set
};

struct ExceptionalCensus {
  std::vector<int> surfaces;     // nodes (1-based) whose wall contains the point
  std::vector<CurveSet> curves;  // one set per positive root outside the
                                 // subsystem spanned by the wall nodes
};

// Exceptional locus of the fibre over s.  Threefold models only.  With
// genus 0 every wall is the whole space, so the census is constant: all
// surfaces, no curves.  With genus 1 the curve counts vanish and the sets
// are omitted.
ExceptionalCensus census(const DeformationModel& m, const RatVec& s);

struct OrbitRelation {
  RatVec image;                 // w(s)
  std::string relation;         // "isomorphic" or "birational"
  std::vector<IntVec> flopped;  // positive roots whose curve sets flop
  long long count_each = 0;     // curves per flopped root
};

// Relation between the fibres over s and w(s).  Surface-model fibres over
// one orbit are isomorphic; threefold fibres are birational unless w
// fixes s.  The flopped sets are the census curve roots lying in the
// inversion set of w — a bookkeeping convention, not derived data.
OrbitRelation orbit_relation(const DeformationModel& m, const WeylElement& w,
                             const RatVec& s);

struct WallCodimension {
  int node = 0;
  long long geometric = 0;  // codimension of the stratum: the node's curve genus
  long long model = 0;      // codimension of the wall in the linear model
  bool mismatch = false;
};

// The linear model flattens every wall to codimension <= 1; the geometric
// codimension (the genus of the node's curve) is reported alongside so
// the discrepancy stays visible.  Threefold models only.
WallCodimension wall_codimension(const DeformationModel& m, int node);

}  // namespace weylbraid
