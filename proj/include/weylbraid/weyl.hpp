#pragma once

#include <cstdint>
#include <vector>

#include "weylbraid/dynkin.hpp"
#include "weylbraid/int_matrix.hpp"
#include "weylbraid/rational.hpp"

namespace weylbraid {

// Reflection representation on simple-root coordinates.  The matrix of a
// word acts on column vectors; column j is the image of the j-th simple
// root.  A word [w1, w2, ..., wk] maps to R_{w1} * R_{w2} * ... * R_{wk}.
// The representation is faithful (finite and affine types alike), so two
// words are equal in the group iff their matrices agree.
IntMatrix simple_reflection_matrix(const DynkinDiagram& d, int node);
std::vector<IntMatrix> simple_reflection_matrices(const DynkinDiagram& d);

class WeylElement {
 public:
  WeylElement(IntMatrix matrix, std::vector<int> word, uint64_t diagram_fp);

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<int>& word() const { return word_; }  // 1-based letters
  uint64_t diagram_fingerprint() const { return diagram_fp_; }
  bool is_identity() const { return matrix_.is_identity(); }

 private:
  IntMatrix matrix_;
  std::vector<int> word_;
  uint64_t diagram_fp_ = 0;
};

WeylElement identity_element(const DynkinDiagram& d);
WeylElement word_to_element(const DynkinDiagram& d, const std::vector<int>& word);

// Exact comparison; mixing elements over different presentations throws
// DiagramMismatchError.
bool equal(const WeylElement& a, const WeylElement& b);

WeylElement multiply(const DynkinDiagram& d, const WeylElement& a,
                     const WeylElement& b);
WeylElement inverse_element(const DynkinDiagram& d, const WeylElement& a);

struct RootSystem {
  std::vector<IntVec> simple;
  std::vector<IntVec> positive;  // sorted by height, then lexicographically
  std::vector<IntVec> all;       // positive roots followed by their negatives
};

// Finite diagrams only.
RootSystem roots(const DynkinDiagram& d);

// Whole group, breadth-first from the identity with generators tried in
// node order, so each element carries its shortest lexicographically
// least word.  Throws BudgetError past `cap` elements (affine groups
// always will).
std::vector<WeylElement> enumerate_group(const DynkinDiagram& d,
                                         std::size_t cap = 1000000);

// Subgroup fixed pointwise by a symmetry subgroup acting on words
// letterwise.  (Equivalently, elements whose matrix commutes with the
// node permutation matrices.)  Preserves enumeration order.
std::vector<WeylElement> fixed_subgroup(const DynkinDiagram& d,
                                        const std::vector<DiagramAutomorphism>& gens,
                                        std::size_t cap = 1000000);
std::vector<WeylElement> fixed_subgroup(const DynkinDiagram& d,
                                        const DiagramAutomorphism& a,
                                        std::size_t cap = 1000000);

// Canonical generators of the fixed subgroup: one per node orbit, the
// longest element of the parabolic subgroup on that orbit.  Orbits are
// ordered by smallest member, so for the even chain A_{2n} under the
// reversal the generators come out as r_i r_{2n+1-i} (i < n) followed by
// r_n r_{n+1} r_n.
std::vector<WeylElement> fixed_subgroup_generators(const DynkinDiagram& d,
                                                   const std::vector<DiagramAutomorphism>& gens);

// Longest element of the parabolic subgroup generated by the given nodes
// (1-based); finite type only.
WeylElement parabolic_longest_element(const DynkinDiagram& d,
                                      const std::vector<int>& nodes);
WeylElement longest_element(const DynkinDiagram& d);

// Reflection hyperplane of a simple generator: the covector (a Cartan
// row) cutting out the fixed points of r_node.
struct Hyperplane {
  int node = 0;  // 1-based
  IntVec normal;
};
Hyperplane fixed_hyperplane(const DynkinDiagram& d, int node);

// Orbit of a rational point in simple-root coordinates; breadth-first,
// starting point first.
std::vector<RatVec> orbit(const DynkinDiagram& d, const RatVec& point,
                          std::size_t cap = 1000000);

// Closure of the given elements under multiplication (identity included).
std::vector<WeylElement> generated_subgroup(const DynkinDiagram& d,
                                            const std::vector<WeylElement>& gens,
                                            std::size_t cap = 1000000);

// Some reduced word for the matrix, stripping the smallest descent first.
std::vector<int> canonical_word(const DynkinDiagram& d, const IntMatrix& m);

}  // namespace weylbraid
