#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylbraid/int_matrix.hpp"

namespace weylbraid {

enum class Letter { A, B, C, D, E, F, G };

// Classification label, e.g. A5 or F4.  Rank domains: A n>=1, B n>=3,
// C n>=2, D n>=4, E in {6,7,8}, F4, G2.  The rank-2 double-bond diagram
// is always called C2 (B2 is the same diagram with nodes renamed).
struct TypeLabel {
  Letter letter;
  int rank;
  bool operator==(const TypeLabel&) const = default;
};

std::string to_string(const TypeLabel& t);
TypeLabel parse_type_label(const std::string& text);
bool valid_type_label(Letter letter, int rank);

// All finite labels with rank <= max_rank, letters in A..G order and rank
// ascending within a letter.
std::vector<TypeLabel> finite_types_up_to_rank(int max_rank);

// Marker stored in Coxeter matrices for an infinite bond order (only the
// rank-1 affine diagram produces one).
inline constexpr long long kInfiniteBond = 0;

// A generalized Cartan matrix together with node labels.  Nodes are
// numbered 1..size() in the order of `labels`; finite standard types use
// Bourbaki numbering, and an affinization carries the extra node as
// label "0" in front.
class DynkinDiagram {
 public:
  // Validates: 2s on the diagonal, off-diagonal entries <= 0 with
  // a_ij = 0 iff a_ji = 0, bond products a_ij*a_ji <= 4, connectedness,
  // and positive-definiteness (finite) or corank-1 with definite proper
  // principal minors (affine).  `kind` is advisory metadata and is not
  // cross-checked here; the JSON reader re-identifies before trusting it.
  DynkinDiagram(std::vector<std::string> labels, IntMatrix cartan, bool affine,
                std::optional<TypeLabel> kind = std::nullopt);

  int size() const { return cartan_.rows(); }
  int rank() const { return size() - (affine_ ? 1 : 0); }
  bool affine() const { return affine_; }
  bool simply_laced() const;
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& coxeter() const { return coxeter_; }
  const std::optional<TypeLabel>& kind() const { return kind_; }
  const std::vector<std::string>& node_labels() const { return labels_; }
  std::string kind_string() const;  // e.g. "C3", "A2~" (affine), "unknown"

  // 1-based node number -> 0-based index, bounds-checked.
  int node_index(int node) const;

  // Hash of (cartan, affine); group elements are comparable exactly when
  // their diagrams share a fingerprint.
  uint64_t fingerprint() const;
  bool same_presentation(const DynkinDiagram& other) const;

 private:
  std::vector<std::string> labels_;
  IntMatrix cartan_;
  IntMatrix coxeter_;
  bool affine_ = false;
  std::optional<TypeLabel> kind_;
};

// Node permutation of a fixed diagram; image[i] is the 0-based image of
// the 0-based node i.
struct DiagramAutomorphism {
  std::vector<int> image;

  bool operator==(const DiagramAutomorphism&) const = default;
  bool is_identity() const;
  int order() const;
  DiagramAutomorphism then(const DiagramAutomorphism& second) const;
  DiagramAutomorphism inverse() const;

  static DiagramAutomorphism identity(int n);
};

// True iff a is a bond-and-arrow preserving node permutation of d
// (a_{s(i),s(j)} == a_{ij} for all i, j).
bool is_diagram_automorphism(const DynkinDiagram& d, const DiagramAutomorphism& a);

// The full symmetry group of the diagram, identity first, sorted
// lexicographically by image vector.
std::vector<DiagramAutomorphism> automorphism_group(const DynkinDiagram& d);

// Close a generating set under composition; result contains the identity
// and is sorted like automorphism_group.
std::vector<DiagramAutomorphism> close_subgroup(const DynkinDiagram& d,
                                                std::vector<DiagramAutomorphism> gens);

// Orbits of a subgroup on nodes; each orbit sorted ascending, orbits
// ordered by smallest member.
std::vector<std::vector<int>> node_orbits(int size,
                                          const std::vector<DiagramAutomorphism>& subgroup);

// Parse disjoint cycles written with node labels, e.g. "(1 6)(3 5)".
// Labels not mentioned are fixed.
DiagramAutomorphism parse_cycles(const DynkinDiagram& d, const std::string& text);
std::string cycles_to_string(const DynkinDiagram& d, const DiagramAutomorphism& a);

// Named generating sets for the classical symmetry subgroups: "z2" is the
// order-2 symmetry (chain reversal for A_n, swap of the fork for D_n,
// the order-2 symmetry of E6), "z3" and "s3" apply to D4 only.
std::vector<DiagramAutomorphism> named_automorphism_generators(const DynkinDiagram& d,
                                                               const std::string& name);

DynkinDiagram build_diagram(const TypeLabel& t);
DynkinDiagram build_diagram(Letter letter, int rank);

// Quotient diagram of a symmetry subgroup.  Folded Cartan entries are
// column sums over orbits; requires that no orbit contains a pair of
// adjacent nodes (so e.g. the middle orbit of an even chain under the
// reversal is rejected).  The result is renamed to a standard type when
// its matrix matches one.
DynkinDiagram fold(const DynkinDiagram& d,
                   const std::vector<DiagramAutomorphism>& generators);

// Extend a finite diagram by the lowest root; node "0" goes in front.
DynkinDiagram affinize(const DynkinDiagram& d);

// Minimal positive integers d_i with d_i * a_ij = d_j * a_ji.
std::vector<long long> cartan_symmetrizer(const IntMatrix& cartan);

// Degenerate elliptic fibre tags: I_n (n > 2), I*_n (n >= 0), II*, III*,
// IV*.
struct KodairaFiber {
  enum class Family { In, IStarN, IIStar, IIIStar, IVStar };
  Family family;
  int n = 0;
  bool operator==(const KodairaFiber&) const = default;
};

KodairaFiber parse_kodaira_fiber(const std::string& text);
std::string to_string(const KodairaFiber& f);

// Affine diagram attached to a degenerate fibre, with the optional
// monodromy subgroup folded in.  Monodromy that is transitive on the
// cycle of an I_n fibre, or on the four outer nodes of I*_0, is rejected.
DynkinDiagram kodaira_to_affine(const KodairaFiber& f,
                                const std::vector<DiagramAutomorphism>& monodromy = {});

// Recognise (cartan, affine) as a standard type up to node renaming;
// std_to_given[k] is the node of `cartan` matching node k of the standard
// diagram.  Affine candidates are affinizations of finite standard types.
struct IdentifiedType {
  TypeLabel label;
  bool affine;
  std::vector<int> std_to_given;
};
std::optional<IdentifiedType> identify_standard(const IntMatrix& cartan, bool affine);

}  // namespace weylbraid
