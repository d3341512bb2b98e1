#pragma once

#include <optional>
#include <vector>

#include "weylbraid/dynkin.hpp"
#include "weylbraid/int_matrix.hpp"
#include "weylbraid/rational.hpp"

namespace weylbraid {

// Integral lattice given by a symmetric Gram matrix.
struct IntegralLattice {
  IntMatrix gram;
  int rank() const { return gram.rows(); }
};

IntegralLattice make_lattice(IntMatrix gram);

long long pairing(const IntegralLattice& L, const IntVec& a, const IntVec& b);
Rat pairing(const IntegralLattice& L, const IntVec& a, const RatVec& b);

// Reflection in a class e with e.e = -2:  w -> w + (e.w) e.
IntVec reflect_in_class(const IntegralLattice& L, const IntVec& e, const IntVec& v);
IntMatrix reflection_matrix_in_class(const IntegralLattice& L, const IntVec& e);

// A set of (-2)-classes realizing a simply-laced diagram: the classes
// pair by minus the Cartan matrix.
struct AdeConfiguration {
  DynkinDiagram diagram;
  IntegralLattice ambient;
  std::vector<IntVec> classes;
};

// The tautological configuration inside the lattice with Gram = -Cartan.
AdeConfiguration identity_configuration(const DynkinDiagram& d);

// Search for a configuration of type d inside L, scanning coordinates in
// the box [-box, box]^rank.  Candidates are tried by ascending 1-norm and
// descending lexicographic order within a norm level, and the first
// complete assignment wins, so results are deterministic.
AdeConfiguration embed_ade(const DynkinDiagram& d, const IntegralLattice& L,
                           long long box = 10);

// Ambient action of a Weyl group word through the configuration: letter
// i acts as the reflection in the i-th class.
IntMatrix weyl_orbit_action(const AdeConfiguration& c, const std::vector<int>& word);

// Orbit of a class under all configuration reflections (breadth-first,
// starting class first).
std::vector<IntVec> class_orbit(const AdeConfiguration& c, const IntVec& v,
                                std::size_t cap = 100000);

// Torsion background field: rational coordinates read modulo 1.
using BField = RatVec;

// Reflections act on fields by the same formula, modulo 1.
BField bfield_reflect(const IntegralLattice& L, const IntVec& e, const BField& b);

// A field is compatible with the full symmetry of a configuration iff it
// pairs integrally with every class.
struct BFieldCompatibility {
  bool enhanced = false;
  std::vector<Rat> pairings;  // (E_i . B) mod 1, one per node
  std::vector<int> failing;   // 1-based nodes with non-integral pairing
};
BFieldCompatibility enhanced_symmetry_bfield(const AdeConfiguration& c, const BField& b);

// Cohomology split into even and odd parts; the pairing lives on the
// even part and the odd part is inert.
struct GradedLattice {
  IntegralLattice even;
  int odd_rank = 0;
};

struct GradedClass {
  IntVec even;
  IntVec odd;
};

// Twist by a spherical class v (even, v.v = -2):
//   x_even -> x_even + (v . x_even) v,  x_odd -> x_odd.
GradedClass spherical_twist_cohomology(const GradedLattice& h, const GradedClass& v,
                                       const GradedClass& x);
IntMatrix spherical_twist_even_matrix(const GradedLattice& h, const GradedClass& v);

// Restriction of an ambient isometry to a distinguished rational
// subspace.  Throws ContractError when psi is not an isometry of L;
// reports failure (with the first escaping basis vector) when the
// subspace is not preserved.
struct InducedMapResult {
  bool preserves = false;
  int escaping_basis_index = -1;              // 0-based, when !preserves
  std::vector<RatVec> restricted;             // k x k matrix, when preserves
};
InducedMapResult induced_base_map(const IntegralLattice& L, const IntMatrix& psi,
                                  const std::vector<IntVec>& subspace_basis);

}  // namespace weylbraid
