#include "weylbraid/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "weylbraid/errors.hpp"

namespace weylbraid {

IntegralLattice make_lattice(IntMatrix gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw InvalidArgumentError("Gram matrix must be square and non-empty");
  if (gram != gram.transposed())
    throw InvalidArgumentError("Gram matrix must be symmetric");
  return IntegralLattice{std::move(gram)};
}

long long pairing(const IntegralLattice& L, const IntVec& a, const IntVec& b) {
  if (static_cast<int>(a.size()) != L.rank() || static_cast<int>(b.size()) != L.rank())
    throw InvalidArgumentError("class dimension does not match the lattice");
  long long out = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) out += a[i] * L.gram.at(i, j) * b[j];
  return out;
}

Rat pairing(const IntegralLattice& L, const IntVec& a, const RatVec& b) {
  if (static_cast<int>(a.size()) != L.rank() || static_cast<int>(b.size()) != L.rank())
    throw InvalidArgumentError("class dimension does not match the lattice");
  Rat out(0);
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) out += Rat(a[i] * L.gram.at(i, j)) * b[j];
  return out;
}

namespace {

void require_spherical(const IntegralLattice& L, const IntVec& e) {
  if (pairing(L, e, e) != -2)
    throw InvalidClassError("class must have self-pairing -2",
                            {{"self_pairing", pairing(L, e, e)}});
}

}  // namespace

IntVec reflect_in_class(const IntegralLattice& L, const IntVec& e, const IntVec& v) {
  require_spherical(L, e);
  const long long p = pairing(L, e, v);
  IntVec out = v;
  for (int i = 0; i < L.rank(); ++i) out[i] += p * e[i];
  return out;
}

IntMatrix reflection_matrix_in_class(const IntegralLattice& L, const IntVec& e) {
  require_spherical(L, e);
  IntMatrix m = IntMatrix::identity(L.rank());
  for (int j = 0; j < L.rank(); ++j) {
    IntVec basis(L.rank(), 0);
    basis[j] = 1;
    const long long p = pairing(L, e, basis);
    for (int i = 0; i < L.rank(); ++i) m.at(i, j) += p * e[i];
  }
  return m;
}

AdeConfiguration identity_configuration(const DynkinDiagram& d) {
  if (d.affine() || !d.simply_laced())
    throw UnsupportedError("configurations need a finite simply-laced diagram");
  IntMatrix gram(d.size(), d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) gram.at(i, j) = -d.cartan().at(i, j);
  std::vector<IntVec> classes;
  for (int i = 0; i < d.size(); ++i) {
    IntVec e(d.size(), 0);
    e[i] = 1;
    classes.push_back(std::move(e));
  }
  return AdeConfiguration{d, make_lattice(std::move(gram)), std::move(classes)};
}

AdeConfiguration embed_ade(const DynkinDiagram& d, const IntegralLattice& L,
                           long long box) {
  if (d.affine() || !d.simply_laced())
    throw UnsupportedError("configurations need a finite simply-laced diagram");
  if (box < 1) throw InvalidArgumentError("search box must be positive");
  const int n = L.rank();
  const double cells = std::pow(2.0 * static_cast<double>(box) + 1.0, n);
  if (cells > 1e7)
    throw BudgetError("embedding search box too large: " + std::to_string(2 * box + 1) +
                      "^" + std::to_string(n) + " cells");

  // All (-2)-classes in the box, by ascending 1-norm then descending
  // lexicographic order, so e.g. (1,-1) is preferred to (-1,1).
  std::vector<IntVec> candidates;
  IntVec v(n, -box);
  while (true) {
    if (pairing(L, v, v) == -2) candidates.push_back(v);
    int i = 0;
    while (i < n && v[i] == box) v[i++] = -box;
    if (i == n) break;
    ++v[i];
  }
  std::sort(candidates.begin(), candidates.end(), [](const IntVec& a, const IntVec& b) {
    long long na = 0, nb = 0;
    for (long long x : a) na += std::llabs(x);
    for (long long x : b) nb += std::llabs(x);
    return na != nb ? na < nb : a > b;
  });

  std::vector<IntVec> chosen;
  std::vector<std::size_t> pos;
  const int k = d.size();
  std::size_t next = 0;
  while (true) {
    bool found = false;
    for (std::size_t c = next; c < candidates.size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < chosen.size(); ++j)
        ok = pairing(L, chosen[j], candidates[c]) ==
             -d.cartan().at(static_cast<int>(j), static_cast<int>(chosen.size()));
      if (!ok) continue;
      chosen.push_back(candidates[c]);
      pos.push_back(c);
      found = true;
      break;
    }
    if (found) {
      if (static_cast<int>(chosen.size()) == k)
        return AdeConfiguration{d, L, std::move(chosen)};
      next = 0;
    } else {
      if (chosen.empty())
        throw EmbeddingSearchError("no configuration of type " + d.kind_string() +
                                   " in the box [-" + std::to_string(box) + ", " +
                                   std::to_string(box) + "]^" + std::to_string(n));
      next = pos.back() + 1;
      chosen.pop_back();
      pos.pop_back();
    }
  }
}

IntMatrix weyl_orbit_action(const AdeConfiguration& c, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(c.ambient.rank());
  for (int letter : word) {
    const int idx = c.diagram.node_index(letter);
    m = m * reflection_matrix_in_class(c.ambient, c.classes[idx]);
  }
  return m;
}

std::vector<IntVec> class_orbit(const AdeConfiguration& c, const IntVec& v,
                                std::size_t cap) {
  if (static_cast<int>(v.size()) != c.ambient.rank())
    throw InvalidArgumentError("class dimension does not match the lattice");
  std::vector<IntMatrix> gens;
  for (const IntVec& e : c.classes)
    gens.push_back(reflection_matrix_in_class(c.ambient, e));

  std::vector<IntVec> list{v};
  std::set<IntVec> seen{v};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const IntMatrix& g : gens) {
      IntVec next = g.apply(list[i]);
      if (seen.insert(next).second) {
        if (list.size() >= cap)
          throw BudgetError("class orbit exceeded its budget of " +
                            std::to_string(cap) + " classes");
        list.push_back(std::move(next));
      }
    }
  }
  return list;
}

BField bfield_reflect(const IntegralLattice& L, const IntVec& e, const BField& b) {
  require_spherical(L, e);
  const Rat p = pairing(L, e, b);
  BField out = b;
  for (int i = 0; i < L.rank(); ++i) out[i] = mod_one(out[i] + p * Rat(e[i]));
  return out;
}

BFieldCompatibility enhanced_symmetry_bfield(const AdeConfiguration& c, const BField& b) {
  BFieldCompatibility out;
  out.enhanced = true;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const Rat p = mod_one(pairing(c.ambient, c.classes[i], b));
    out.pairings.push_back(p);
    if (p != Rat(0)) {
      out.enhanced = false;
      out.failing.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

namespace {

void require_graded_sizes(const GradedLattice& h, const GradedClass& x) {
  if (static_cast<int>(x.even.size()) != h.even.rank() ||
      static_cast<int>(x.odd.size()) != h.odd_rank)
    throw InvalidArgumentError("graded class sizes do not match the lattice");
}

}  // namespace

GradedClass spherical_twist_cohomology(const GradedLattice& h, const GradedClass& v,
                                       const GradedClass& x) {
  require_graded_sizes(h, v);
  require_graded_sizes(h, x);
  for (long long c : v.odd)
    if (c != 0)
      throw InvalidClassError("twisting class must be purely even");
  if (pairing(h.even, v.even, v.even) != -2)
    throw InvalidClassError("twisting class must have self-pairing -2",
                            {{"self_pairing", pairing(h.even, v.even, v.even)}});

  GradedClass out = x;
  const long long p = pairing(h.even, v.even, x.even);
  for (int i = 0; i < h.even.rank(); ++i) out.even[i] += p * v.even[i];
  return out;  // odd part untouched
}

IntMatrix spherical_twist_even_matrix(const GradedLattice& h, const GradedClass& v) {
  require_graded_sizes(h, v);
  for (long long c : v.odd)
    if (c != 0)
      throw InvalidClassError("twisting class must be purely even");
  return reflection_matrix_in_class(h.even, v.even);
}

InducedMapResult induced_base_map(const IntegralLattice& L, const IntMatrix& psi,
                                  const std::vector<IntVec>& subspace_basis) {
  const int n = L.rank();
  if (psi.rows() != n || psi.cols() != n)
    throw InvalidArgumentError("map size does not match the lattice");
  if (psi.transposed() * L.gram * psi != L.gram)
    throw ContractError("map is not an isometry of the lattice");
  if (subspace_basis.empty())
    throw InvalidArgumentError("subspace basis is empty");
  const int k = static_cast<int>(subspace_basis.size());
  for (const IntVec& b : subspace_basis)
    if (static_cast<int>(b.size()) != n)
      throw InvalidArgumentError("basis vector dimension does not match the lattice");

  // Row-reduce [B | psi B] with B holding the basis as columns.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * k, Rat(0)));
  for (int j = 0; j < k; ++j) {
    const IntVec image = psi.apply(subspace_basis[j]);
    for (int i = 0; i < n; ++i) {
      m[i][j] = Rat(subspace_basis[j][i]);
      m[i][k + j] = Rat(image[i]);
    }
  }

  std::vector<int> pivot_row(k, -1);
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != Rat(0)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    const Rat lead = m[row][col];
    for (int c = col; c < 2 * k; ++c) m[row][c] /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == Rat(0)) continue;
      const Rat f = m[r][col];
      for (int c = col; c < 2 * k; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int col = 0; col < k; ++col)
    if (pivot_row[col] < 0)
      throw InvalidArgumentError("subspace basis is linearly dependent");

  InducedMapResult out;
  for (int j = 0; j < k; ++j)
    for (int r = row; r < n; ++r)
      if (m[r][k + j] != Rat(0)) {
        out.preserves = false;
        out.escaping_basis_index = j;
        return out;
      }
  out.preserves = true;
  out.restricted.assign(k, RatVec(k, Rat(0)));
  for (int j = 0; j < k; ++j)
    for (int col = 0; col < k; ++col)
      out.restricted[col][j] = m[pivot_row[col]][k + j];
  return out;
}

}  // namespace weylbraid
