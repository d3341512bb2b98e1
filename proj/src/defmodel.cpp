#include "weylbraid/defmodel.hpp"

#include <algorithm>
#include <cassert>

#include "weylbraid/errors.hpp"

namespace weylbraid {

namespace {

std::vector<long long> cover_degrees(const DynkinDiagram& d) {
  const std::vector<long long> sym = cartan_symmetrizer(d.cartan());
  const long long top = *std::max_element(sym.begin(), sym.end());
  std::vector<long long> deg(sym.size());
  for (std::size_t i = 0; i < sym.size(); ++i) {
    assert(top % sym[i] == 0);
    deg[i] = top / sym[i];
  }
  return deg;
}

void require_threefold(const DeformationModel& m, const char* op) {
  if (m.kind != ModelKind::Threefold)
    throw UnsupportedError(std::string(op) + " applies to threefold models only");
}

Rat wall_pairing(const Hyperplane& h, const RatVec& s) {
  Rat out(0);
  for (std::size_t i = 0; i < h.normal.size(); ++i) out += Rat(h.normal[i]) * s[i];
  return out;
}

void require_point(const DeformationModel& m, const RatVec& s) {
  if (static_cast<int>(s.size()) != m.rank())
    throw InvalidArgumentError("point dimension does not match the model");
}

}  // namespace

DeformationModel build_model(const DynkinDiagram& d, int genus) {
  if (d.affine())
    throw UnsupportedError("deformation models need a finite diagram");
  if (genus < 0) throw InvalidArgumentError("genus must be nonnegative");

  DeformationModel m(d);
  m.kind = ModelKind::Threefold;
  m.base_genus = genus;
  m.cover_degree = cover_degrees(d);
  for (long long deg : m.cover_degree) {
    const long long gj = deg * (genus - 1) + 1;
    if (gj < 0)
      throw UnsupportedError("genus 0 needs a simply-laced diagram",
                             {{"cover_degree", deg}});
    m.node_genus.push_back(gj);
  }

  m.trivial_action = (genus == 0);
  for (int j = 1; j <= d.size(); ++j) {
    if (m.trivial_action) {
      // every reflection acts as the identity, so its fixed locus is
      // the whole space: a wall with zero normal
      m.walls.push_back(Hyperplane{j, IntVec(d.size(), 0)});
      m.action.push_back(IntMatrix::identity(d.size()));
    } else {
      m.walls.push_back(fixed_hyperplane(d, j));
      m.action.push_back(simple_reflection_matrix(d, j));
    }
  }
  return m;
}

DeformationModel build_surface_model(const DynkinDiagram& d) {
  if (d.affine() || !d.simply_laced())
    throw UnsupportedError(
        "surface models need a finite simply-laced diagram");
  DeformationModel m(d);
  m.kind = ModelKind::Surface;
  m.cover_degree.assign(d.size(), 1);
  for (int j = 1; j <= d.size(); ++j) {
    m.walls.push_back(fixed_hyperplane(d, j));
    m.action.push_back(simple_reflection_matrix(d, j));
  }
  return m;
}

ExceptionalCensus census(const DeformationModel& m, const RatVec& s) {
  require_threefold(m, "the census");
  require_point(m, s);

  ExceptionalCensus out;
  std::vector<bool> on_wall(m.rank(), false);
  for (int j = 0; j < m.rank(); ++j) {
    if (wall_pairing(m.walls[j], s) == Rat(0)) {
      on_wall[j] = true;
      out.surfaces.push_back(j + 1);
    }
  }

  const long long count = 2LL * m.base_genus - 2;
  if (count <= 0) return out;  // genus <= 1: no curve sets survive

  // Positive roots supported on the wall nodes span the subsystem whose
  // curves have already degenerated into the surfaces; the rest persist.
  for (const IntVec& root : roots(m.diagram).positive) {
    bool inside = true;
    for (int i = 0; inside && i < m.rank(); ++i)
      if (root[i] != 0 && !on_wall[i]) inside = false;
    if (!inside) out.curves.push_back(CurveSet{root, count});
  }
  return out;
}

OrbitRelation orbit_relation(const DeformationModel& m, const WeylElement& w,
                             const RatVec& s) {
  require_point(m, s);
  if (w.diagram_fingerprint() != m.diagram.fingerprint())
    throw DiagramMismatchError("element and model use different diagrams");

  OrbitRelation out;
  out.image = m.trivial_action ? s : w.matrix().apply(s);
  const bool fixes = (out.image == s);
  out.relation =
      (m.kind == ModelKind::Surface || fixes) ? "isomorphic" : "birational";

  if (m.kind != ModelKind::Threefold) return out;

  const ExceptionalCensus at_s = census(m, s);
  out.count_each = 2LL * m.base_genus - 2;
  if (m.trivial_action || at_s.curves.empty()) return out;

  const IntMatrix winv = inverse_element(m.diagram, w).matrix();
  for (const CurveSet& set : at_s.curves) {
    const IntVec image = winv.apply(set.root);
    bool negative = true;
    for (long long c : image)
      if (c > 0) negative = false;
    if (negative) out.flopped.push_back(set.root);
  }
  return out;
}

WallCodimension wall_codimension(const DeformationModel& m, int node) {
  require_threefold(m, "wall codimension");
  const int idx = m.diagram.node_index(node);

  WallCodimension out;
  out.node = node;
  out.geometric = m.node_genus[idx];
  out.model = m.trivial_action ? 0 : 1;
  out.mismatch = (out.geometric != out.model);
  return out;
}

}  // namespace weylbraid
