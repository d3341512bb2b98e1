#pragma once

#include <string>
#include <vector>

#include "weylbraid/dynkin.hpp"
#include "weylbraid/weyl.hpp"

namespace weylbraid {

// Word in the generalized braid group of a diagram.  Letters are signed
// 1-based node numbers; a negative letter is the inverse generator.
// Text form: signed integers separated by whitespace, e.g. "1 2 -1".
struct BraidWord {
  std::vector<int> letters;
  bool operator==(const BraidWord&) const = default;
};

BraidWord parse_braid_word(const std::string& text);
std::string to_string(const BraidWord& w);

// Left-greedy normal form Delta^k x_1 ... x_r over a finite-type diagram:
// each x_i is a non-trivial simple element given by its canonical reduced
// word, no x_i equals Delta, and every adjacent pair is left-weighted
// (the left descents of x_{i+1} all lie in the right descents of x_i).
struct GarsideNormalForm {
  long long delta_power = 0;
  std::vector<std::vector<int>> factors;

  bool operator==(const GarsideNormalForm&) const = default;
  bool is_identity() const { return delta_power == 0 && factors.empty(); }
};

// Finite-type diagrams of rank at most 8; words of at most 10^4 letters.
GarsideNormalForm normal_form(const DynkinDiagram& d, const BraidWord& w);

// Exact word problem: equal iff the normal forms coincide.
bool words_equal(const DynkinDiagram& d, const BraidWord& a, const BraidWord& b);

// Spell the normal form back out as a braid word.
BraidWord normal_form_to_word(const DynkinDiagram& d, const GarsideNormalForm& nf);

// Image in the Weyl group (signs are forgotten).
WeylElement project_to_weyl(const DynkinDiagram& d, const BraidWord& w);

struct RelationCheck {
  int node_a = 0;      // 1-based generator indices
  int node_b = 0;
  long long bond = 0;  // Coxeter order m, kInfiniteBond when unbounded
  bool holds = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold = true;
};

// Check the defining relations pairwise: alternating words of length
// m_ij starting with either generator must agree.  Finite types use the
// normal form; affine types compare the faithful reflection matrices and
// the word lengths, and unbounded bonds have nothing to check.
RelationReport verify_braid_relations(const DynkinDiagram& d);

// Generating words of the symmetric subgroup of the braid group of the
// even chain A_{2n}: the products R_i R_{2n+1-i} for i < n together with
// R_n R_{n+1} R_n.
std::vector<BraidWord> michel_generators(int n);

// The generators above satisfy the braid relations of C_n inside the
// braid group of A_{2n} (n <= 4).
RelationReport verify_folded_braid_relations(int n);

}  // namespace weylbraid
