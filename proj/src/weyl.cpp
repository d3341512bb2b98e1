#include "weylbraid/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "weylbraid/errors.hpp"

namespace weylbraid {

IntMatrix simple_reflection_matrix(const DynkinDiagram& d, int node) {
  const int i = d.node_index(node);
  IntMatrix m = IntMatrix::identity(d.size());
  for (int j = 0; j < d.size(); ++j)
    m.at(i, j) = i == j ? -1 : -d.cartan().at(i, j);
  return m;
}

std::vector<IntMatrix> simple_reflection_matrices(const DynkinDiagram& d) {
  std::vector<IntMatrix> out;
  out.reserve(d.size());
  for (int node = 1; node <= d.size(); ++node)
    out.push_back(simple_reflection_matrix(d, node));
  return out;
}

WeylElement::WeylElement(IntMatrix matrix, std::vector<int> word, uint64_t diagram_fp)
    : matrix_(std::move(matrix)), word_(std::move(word)), diagram_fp_(diagram_fp) {}

WeylElement identity_element(const DynkinDiagram& d) {
  return WeylElement(IntMatrix::identity(d.size()), {}, d.fingerprint());
}

WeylElement word_to_element(const DynkinDiagram& d, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(d.size());
  for (int letter : word) m = m * simple_reflection_matrix(d, letter);
  return WeylElement(std::move(m), word, d.fingerprint());
}

bool equal(const WeylElement& a, const WeylElement& b) {
  if (a.diagram_fingerprint() != b.diagram_fingerprint())
    throw DiagramMismatchError("comparing elements over different diagrams");
  return a.matrix() == b.matrix();
}

namespace {

void require_over(const DynkinDiagram& d, const WeylElement& a) {
  if (a.diagram_fingerprint() != d.fingerprint())
    throw DiagramMismatchError("element does not live over the given diagram");
}

bool nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}

bool nonpos(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
}

IntVec column(const IntMatrix& m, int j) {
  IntVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = m.at(i, j);
  return out;
}

}  // namespace

WeylElement multiply(const DynkinDiagram& d, const WeylElement& a,
                     const WeylElement& b) {
  require_over(d, a);
  require_over(d, b);
  std::vector<int> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return WeylElement(a.matrix() * b.matrix(), std::move(word), d.fingerprint());
}

WeylElement inverse_element(const DynkinDiagram& d, const WeylElement& a) {
  require_over(d, a);
  std::vector<int> word(a.word().rbegin(), a.word().rend());
  return word_to_element(d, word);
}

RootSystem roots(const DynkinDiagram& d) {
  if (d.affine())
    throw UnsupportedError("root enumeration needs a finite diagram");
  const int n = d.size();
  const IntMatrix& a = d.cartan();

  std::set<IntVec> seen;
  std::vector<IntVec> todo;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVec v = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      long long pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a.at(i, j) * v[j];
      IntVec w = v;
      w[i] -= pairing;
      if (seen.insert(w).second) {
        todo.push_back(w);
        if (seen.size() > 2000000)
          throw BudgetError("root closure exceeded its budget");
      }
    }
  }

  RootSystem rs;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rs.simple.push_back(e);
  }
  for (const IntVec& r : seen)
    if (nonneg(r)) rs.positive.push_back(r);
  std::sort(rs.positive.begin(), rs.positive.end(), [](const IntVec& x, const IntVec& y) {
    const long long hx = std::accumulate(x.begin(), x.end(), 0ll);
    const long long hy = std::accumulate(y.begin(), y.end(), 0ll);
    return hx != hy ? hx < hy : x < y;
  });
  rs.all = rs.positive;
  for (const IntVec& r : rs.positive) {
    IntVec neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    rs.all.push_back(neg);
  }
  return rs;
}

std::vector<WeylElement> enumerate_group(const DynkinDiagram& d, std::size_t cap) {
  const auto gens = simple_reflection_matrices(d);
  const uint64_t fp = d.fingerprint();

  std::vector<WeylElement> elems{identity_element(d)};
  std::unordered_map<std::vector<long long>, std::size_t, IntVecHash> index;
  index.emplace(elems[0].matrix().flat(), 0);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s = 1; s <= d.size(); ++s) {
      IntMatrix m = elems[i].matrix() * gens[s - 1];
      if (index.find(m.flat()) != index.end()) continue;
      if (elems.size() >= cap)
        throw BudgetError("group enumeration exceeded its budget of " +
                          std::to_string(cap) + " elements");
      std::vector<int> word = elems[i].word();
      word.push_back(s);
      index.emplace(m.flat(), elems.size());
      elems.emplace_back(std::move(m), std::move(word), fp);
    }
  }
  return elems;
}

std::vector<WeylElement> fixed_subgroup(const DynkinDiagram& d,
                                        const std::vector<DiagramAutomorphism>& gens,
                                        std::size_t cap) {
  std::vector<IntMatrix> perms;
  for (const auto& g : gens) {
    if (!is_diagram_automorphism(d, g))
      throw InvalidArgumentError("permutation is not a symmetry of the diagram");
    IntMatrix p(d.size(), d.size());
    for (int i = 0; i < d.size(); ++i) p.at(g.image[i], i) = 1;
    perms.push_back(std::move(p));
  }

  // Applying a symmetry letterwise to a word conjugates its matrix by the
  // node permutation matrix, so the fixed elements are exactly those
  // commuting with every P.
  std::vector<WeylElement> out;
  for (WeylElement& w : enumerate_group(d, cap)) {
    bool fixed = true;
    for (const IntMatrix& p : perms)
      if (p * w.matrix() != w.matrix() * p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(std::move(w));
  }
  return out;
}

std::vector<WeylElement> fixed_subgroup(const DynkinDiagram& d,
                                        const DiagramAutomorphism& a, std::size_t cap) {
  return fixed_subgroup(d, std::vector<DiagramAutomorphism>{a}, cap);
}

WeylElement parabolic_longest_element(const DynkinDiagram& d,
                                      const std::vector<int>& nodes) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgumentError("parabolic node set has repeats");
  for (int node : sorted) d.node_index(node);
  if (d.affine() && static_cast<int>(sorted.size()) == d.size())
    throw UnsupportedError("an affine group has no longest element");

  IntMatrix m = IntMatrix::identity(d.size());
  std::vector<int> word;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int node : sorted) {
      if (nonneg(column(m, node - 1)) ) {
        m = m * simple_reflection_matrix(d, node);
        word.push_back(node);
        progressed = true;
        break;
      }
    }
  }
  return WeylElement(std::move(m), std::move(word), d.fingerprint());
}

WeylElement longest_element(const DynkinDiagram& d) {
  std::vector<int> nodes(d.size());
  std::iota(nodes.begin(), nodes.end(), 1);
  return parabolic_longest_element(d, nodes);
}

std::vector<WeylElement> fixed_subgroup_generators(
    const DynkinDiagram& d, const std::vector<DiagramAutomorphism>& gens) {
  const auto subgroup = close_subgroup(d, gens);
  std::vector<WeylElement> out;
  for (const auto& orbit : node_orbits(d.size(), subgroup)) {
    std::vector<int> nodes;
    for (int v : orbit) nodes.push_back(v + 1);
    out.push_back(parabolic_longest_element(d, nodes));
  }
  return out;
}

Hyperplane fixed_hyperplane(const DynkinDiagram& d, int node) {
  const int i = d.node_index(node);
  IntVec normal(d.size());
  for (int j = 0; j < d.size(); ++j) normal[j] = d.cartan().at(i, j);
  return Hyperplane{node, std::move(normal)};
}

std::vector<RatVec> orbit(const DynkinDiagram& d, const RatVec& point,
                          std::size_t cap) {
  if (static_cast<int>(point.size()) != d.size())
    throw InvalidArgumentError("point dimension does not match the diagram");
  const auto gens = simple_reflection_matrices(d);

  std::vector<RatVec> list{point};
  std::set<RatVec> seen{point};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const IntMatrix& g : gens) {
      RatVec q = g.apply(list[i]);
      if (seen.insert(q).second) {
        if (list.size() >= cap)
          throw BudgetError("orbit enumeration exceeded its budget of " +
                            std::to_string(cap) + " points");
        list.push_back(std::move(q));
      }
    }
  }
  return list;
}

std::vector<WeylElement> generated_subgroup(const DynkinDiagram& d,
                                            const std::vector<WeylElement>& gens,
                                            std::size_t cap) {
  for (const WeylElement& g : gens) require_over(d, g);

  std::vector<WeylElement> elems{identity_element(d)};
  std::unordered_map<std::vector<long long>, std::size_t, IntVecHash> index;
  index.emplace(elems[0].matrix().flat(), 0);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const WeylElement& g : gens) {
      WeylElement next = multiply(d, elems[i], g);
      if (index.find(next.matrix().flat()) != index.end()) continue;
      if (elems.size() >= cap)
        throw BudgetError("subgroup closure exceeded its budget of " +
                          std::to_string(cap) + " elements");
      index.emplace(next.matrix().flat(), elems.size());
      elems.push_back(std::move(next));
    }
  }
  return elems;
}

std::vector<int> canonical_word(const DynkinDiagram& d, const IntMatrix& m) {
  if (m.rows() != d.size() || m.cols() != d.size())
    throw InvalidArgumentError("matrix size does not match the diagram");
  IntMatrix w = m;
  std::vector<int> rev;
  std::size_t guard = 0;
  while (!w.is_identity()) {
    int s = 0;
    for (int node = 1; node <= d.size(); ++node)
      if (nonpos(column(w, node - 1))) {
        s = node;
        break;
      }
    if (s == 0)
      throw InvalidArgumentError("matrix is not a product of simple reflections");
    w = w * simple_reflection_matrix(d, s);
    rev.push_back(s);
    if (++guard > 1000000)
      throw BudgetError("descent stripping exceeded its budget");
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace weylbraid
