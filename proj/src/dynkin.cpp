#include "weylbraid/dynkin.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylbraid/errors.hpp"
#include "weylbraid/weyl.hpp"

namespace weylbraid {

namespace {

constexpr const char* kLetters = "ABCDEFG";

int letter_index(Letter l) { return static_cast<int>(l); }

// Bond order from the product p = a_ij * a_ji (p in 0..4; 4 encodes an
// infinite bond).
long long bond_order(long long p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    case 4: return kInfiniteBond;
    default:
      throw ClassificationError("bond product out of range: " + std::to_string(p));
  }
}

bool is_connected(const IntMatrix& a) {
  const int n = a.rows();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && a.at(i, j) != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Positive-definiteness of a symmetrizable integer Cartan matrix via
// leading principal minors (valid because det of each leading block is a
// positive multiple of the symmetrized block's determinant).
bool leading_minors_positive(const IntMatrix& a) {
  std::vector<int> idx;
  for (int k = 0; k < a.rows(); ++k) {
    idx.push_back(k);
    if (a.submatrix(idx).determinant() <= 0) return false;
  }
  return true;
}

bool drop_one_definite(const IntMatrix& a) {
  const int n = a.rows();
  for (int skip = 0; skip < n; ++skip) {
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      if (k != skip) idx.push_back(k);
    if (!leading_minors_positive(a.submatrix(idx))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const TypeLabel& t) {
  return std::string(1, kLetters[letter_index(t.letter)]) + std::to_string(t.rank);
}

TypeLabel parse_type_label(const std::string& text) {
  if (text.size() < 2)
    throw InvalidArgumentError("malformed type label: " + text);
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const char* pos = std::strchr(kLetters, c);
  if (pos == nullptr || c == '\0')
    throw InvalidArgumentError("unknown type letter in: " + text);
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidArgumentError("malformed type label: " + text);
  const int rank = std::atoi(text.c_str() + 1);
  const Letter letter = static_cast<Letter>(pos - kLetters);
  if (!valid_type_label(letter, rank)) {
    if (letter == Letter::B && rank == 2)
      throw ClassificationError("rank-2 double-bond type is named C2 here");
    throw ClassificationError("no type " + text + " in the classification");
  }
  return TypeLabel{letter, rank};
}

bool valid_type_label(Letter letter, int rank) {
  switch (letter) {
    case Letter::A: return rank >= 1;
    case Letter::B: return rank >= 3;
    case Letter::C: return rank >= 2;
    case Letter::D: return rank >= 4;
    case Letter::E: return rank >= 6 && rank <= 8;
    case Letter::F: return rank == 4;
    case Letter::G: return rank == 2;
  }
  return false;
}

std::vector<TypeLabel> finite_types_up_to_rank(int max_rank) {
  std::vector<TypeLabel> out;
  for (int li = 0; li < 7; ++li)
    for (int r = 1; r <= max_rank; ++r)
      if (valid_type_label(static_cast<Letter>(li), r))
        out.push_back(TypeLabel{static_cast<Letter>(li), r});
  return out;
}

DynkinDiagram::DynkinDiagram(std::vector<std::string> labels, IntMatrix cartan,
                             bool affine, std::optional<TypeLabel> kind)
    : labels_(std::move(labels)), cartan_(std::move(cartan)), affine_(affine),
      kind_(std::move(kind)) {
  const int n = cartan_.rows();
  if (n == 0 || cartan_.cols() != n)
    throw ClassificationError("Cartan matrix must be square and non-empty");
  if (static_cast<int>(labels_.size()) != n)
    throw InvalidArgumentError("node label count does not match matrix size");

  for (int i = 0; i < n; ++i) {
    if (cartan_.at(i, i) != 2)
      throw ClassificationError("Cartan diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const long long aij = cartan_.at(i, j);
      const long long aji = cartan_.at(j, i);
      if (aij > 0)
        throw ClassificationError("off-diagonal Cartan entries must be <= 0");
      if ((aij == 0) != (aji == 0))
        throw ClassificationError("Cartan zero pattern must be symmetric");
      bond_order(aij * aji);  // throws when the product exceeds 4
    }
  }

  if (!is_connected(cartan_))
    throw ClassificationError("diagram is not connected");
  cartan_symmetrizer(cartan_);  // throws when not symmetrizable

  if (affine_) {
    if (cartan_.determinant() != 0 || !drop_one_definite(cartan_))
      throw ClassificationError("matrix is not of affine type");
  } else {
    if (!leading_minors_positive(cartan_))
      throw ClassificationError("matrix is not positive definite");
  }

  coxeter_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      coxeter_.at(i, j) = i == j ? 1 : bond_order(cartan_.at(i, j) * cartan_.at(j, i));
}

bool DynkinDiagram::simply_laced() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && cartan_.at(i, j) < -1) return false;
  return true;
}

std::string DynkinDiagram::kind_string() const {
  if (!kind_) return "unknown";
  return to_string(*kind_) + (affine_ ? "~" : "");
}

int DynkinDiagram::node_index(int node) const {
  if (node < 1 || node > size())
    throw NodeIndexError("node " + std::to_string(node) + " outside diagram of size " +
                         std::to_string(size()));
  return node - 1;
}

uint64_t DynkinDiagram::fingerprint() const {
  return cartan_.fnv_hash(affine_ ? 0x9e3779b97f4a7c15ull : 0xcbf29ce484222325ull);
}

bool DynkinDiagram::same_presentation(const DynkinDiagram& other) const {
  return affine_ == other.affine_ && cartan_ == other.cartan_;
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

int DiagramAutomorphism::order() const {
  // lcm of the cycle lengths
  std::vector<bool> seen(image.size(), false);
  long long ord = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::size_t v = i;
    do {
      seen[v] = true;
      v = static_cast<std::size_t>(image[v]);
      ++len;
    } while (v != i && len <= static_cast<long long>(image.size()));
    if (v != i) throw InvalidArgumentError("image vector is not a permutation");
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

DiagramAutomorphism DiagramAutomorphism::then(const DiagramAutomorphism& second) const {
  if (image.size() != second.image.size())
    throw InvalidArgumentError("composing permutations of different sizes");
  DiagramAutomorphism out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    out.image[i] = second.image[image[i]];
  return out;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism out;
  out.image.assign(image.size(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int j = image[i];
    if (j < 0 || j >= static_cast<int>(image.size()) || out.image[j] != -1)
      throw InvalidArgumentError("image vector is not a permutation");
    out.image[j] = static_cast<int>(i);
  }
  return out;
}

DiagramAutomorphism DiagramAutomorphism::identity(int n) {
  DiagramAutomorphism out;
  out.image.resize(n);
  std::iota(out.image.begin(), out.image.end(), 0);
  return out;
}

bool is_diagram_automorphism(const DynkinDiagram& d, const DiagramAutomorphism& a) {
  const int n = d.size();
  if (static_cast<int>(a.image.size()) != n) return false;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (a.image[i] < 0 || a.image[i] >= n || used[a.image[i]]) return false;
    used[a.image[i]] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.cartan().at(a.image[i], a.image[j]) != d.cartan().at(i, j)) return false;
  return true;
}

namespace {

void automorphism_search(const IntMatrix& given, const IntMatrix& std_matrix,
                         std::vector<int>& image, std::vector<bool>& used, int i,
                         std::vector<std::vector<int>>& out, bool first_only) {
  const int n = given.rows();
  if (i == n) {
    out.push_back(image);
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    bool ok = std_matrix.at(i, i) == given.at(j, j);
    for (int k = 0; ok && k < i; ++k)
      ok = std_matrix.at(i, k) == given.at(j, image[k]) &&
           std_matrix.at(k, i) == given.at(image[k], j);
    if (!ok) continue;
    image[i] = j;
    used[j] = true;
    automorphism_search(given, std_matrix, image, used, i + 1, out, first_only);
    used[j] = false;
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> automorphism_group(const DynkinDiagram& d) {
  const int n = d.size();
  if (n > 32)
    throw BudgetError("automorphism search limited to diagrams with at most 32 nodes");
  std::vector<std::vector<int>> images;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  automorphism_search(d.cartan(), d.cartan(), image, used, 0, images, false);
  std::sort(images.begin(), images.end());
  std::vector<DiagramAutomorphism> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back(DiagramAutomorphism{std::move(img)});
  return out;
}

std::vector<DiagramAutomorphism> close_subgroup(const DynkinDiagram& d,
                                                std::vector<DiagramAutomorphism> gens) {
  for (const auto& g : gens)
    if (!is_diagram_automorphism(d, g))
      throw InvalidArgumentError("permutation is not a symmetry of the diagram");
  std::set<std::vector<int>> seen;
  std::vector<DiagramAutomorphism> todo{DiagramAutomorphism::identity(d.size())};
  seen.insert(todo[0].image);
  const std::size_t cap = std::max<std::size_t>(1024, 4u * static_cast<std::size_t>(d.size()));
  for (std::size_t idx = 0; idx < todo.size(); ++idx) {
    const DiagramAutomorphism current = todo[idx];
    for (const auto& g : gens) {
      DiagramAutomorphism next = current.then(g);
      if (seen.insert(next.image).second) {
        todo.push_back(std::move(next));
        if (todo.size() > cap)
          throw BudgetError("symmetry subgroup closure exceeded its budget");
      }
    }
  }
  std::vector<DiagramAutomorphism> out;
  out.reserve(seen.size());
  for (const auto& img : seen) out.push_back(DiagramAutomorphism{img});
  return out;
}

std::vector<std::vector<int>> node_orbits(int size,
                                          const std::vector<DiagramAutomorphism>& subgroup) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(size, false);
  for (int start = 0; start < size; ++start) {
    if (seen[start]) continue;
    std::set<int> orbit;
    for (const auto& g : subgroup) orbit.insert(g.image[start]);
    // A subgroup orbit is closed, but tolerate bare generating sets too.
    std::vector<int> frontier(orbit.begin(), orbit.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier)
        for (const auto& g : subgroup)
          if (orbit.insert(g.image[v]).second) next.push_back(g.image[v]);
      frontier = std::move(next);
    }
    for (int v : orbit) seen[v] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

DiagramAutomorphism parse_cycles(const DynkinDiagram& d, const std::string& text) {
  std::map<std::string, int> by_label;
  for (int i = 0; i < d.size(); ++i) by_label[d.node_labels()[i]] = i;

  DiagramAutomorphism out = DiagramAutomorphism::identity(d.size());
  std::vector<bool> moved(d.size(), false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidArgumentError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      auto it = by_label.find(token);
      if (it == by_label.end())
        throw InvalidArgumentError("unknown node label '" + token + "' in cycles");
      if (moved[it->second])
        throw InvalidArgumentError("node '" + token + "' appears twice in cycles");
      moved[it->second] = true;
      cycle.push_back(it->second);
      token.clear();
    };
    while (pos < text.size() && text[pos] != ')') {
      const char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        flush();
      } else {
        token.push_back(c);
      }
      ++pos;
    }
    if (pos == text.size())
      throw InvalidArgumentError("unbalanced '(' in cycle notation: " + text);
    ++pos;  // consume ')'
    flush();
    for (std::size_t k = 0; k < cycle.size(); ++k)
      out.image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return out;
}

std::string cycles_to_string(const DynkinDiagram& d, const DiagramAutomorphism& a) {
  std::string out;
  std::vector<bool> seen(d.size(), false);
  for (int start = 0; start < d.size(); ++start) {
    if (seen[start] || a.image[start] == start) continue;
    out += "(";
    int v = start;
    bool first = true;
    do {
      seen[v] = true;
      if (!first) out += " ";
      out += d.node_labels()[v];
      first = false;
      v = a.image[v];
    } while (v != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<DiagramAutomorphism> named_automorphism_generators(const DynkinDiagram& d,
                                                               const std::string& name) {
  if (!d.kind() || d.affine())
    throw InvalidArgumentError(
        "named symmetries need a finite standard type; pass explicit cycles instead");
  const TypeLabel t = *d.kind();
  const int n = d.size();

  auto make = [&](std::vector<int> img) {
    DiagramAutomorphism a{std::move(img)};
    if (!is_diagram_automorphism(d, a))
      throw InvalidArgumentError("no '" + name + "' symmetry for type " + to_string(t));
    return a;
  };

  if (name == "z2") {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    if (t.letter == Letter::A) {
      for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    } else if (t.letter == Letter::D) {
      std::swap(img[n - 2], img[n - 1]);
    } else if (t.letter == Letter::E && t.rank == 6) {
      img = {5, 1, 4, 3, 2, 0};
    } else {
      throw InvalidArgumentError("no 'z2' symmetry for type " + to_string(t));
    }
    return {make(std::move(img))};
  }
  if (name == "z3") {
    if (t.letter != Letter::D || t.rank != 4)
      throw InvalidArgumentError("'z3' applies to D4 only");
    return {make({2, 1, 3, 0})};  // cycle (1 3 4) on labels
  }
  if (name == "s3") {
    if (t.letter != Letter::D || t.rank != 4)
      throw InvalidArgumentError("'s3' applies to D4 only");
    return {make({2, 1, 0, 3}), make({0, 1, 3, 2})};  // (1 3) and (3 4)
  }
  throw InvalidArgumentError("unknown symmetry name: " + name +
                             " (expected z2, z3 or s3)");
}

namespace {

IntMatrix standard_cartan(Letter letter, int rank) {
  const int n = rank;
  IntMatrix a = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = 2;
  auto chain_edge = [&](int i, int j) { a.at(i, j) = a.at(j, i) = -1; };

  switch (letter) {
    case Letter::A:
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Letter::B:  // last node short: a_{n-1,n} = -1, a_{n,n-1} = -2
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a.at(n - 2, n - 1) = -1;
      a.at(n - 1, n - 2) = -2;
      break;
    case Letter::C:  // last node long: a_{n-1,n} = -2, a_{n,n-1} = -1
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a.at(n - 2, n - 1) = -2;
      a.at(n - 1, n - 2) = -1;
      break;
    case Letter::D:
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case Letter::E:
      // Bourbaki: chain 1-3-4-...-n with node 2 hanging off node 4.
      chain_edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case Letter::F:  // double bond 2 => 3, nodes 1,2 long
      chain_edge(0, 1);
      chain_edge(2, 3);
      a.at(1, 2) = -1;
      a.at(2, 1) = -2;
      break;
    case Letter::G:  // node 1 short: a_{12} = -3
      a.at(0, 1) = -3;
      a.at(1, 0) = -1;
      break;
  }
  return a;
}

}  // namespace

DynkinDiagram build_diagram(const TypeLabel& t) {
  if (!valid_type_label(t.letter, t.rank))
    throw ClassificationError("no type " + to_string(t) + " in the classification");
  std::vector<std::string> labels;
  for (int i = 1; i <= t.rank; ++i) labels.push_back(std::to_string(i));
  return DynkinDiagram(std::move(labels), standard_cartan(t.letter, t.rank),
                       /*affine=*/false, t);
}

DynkinDiagram build_diagram(Letter letter, int rank) {
  return build_diagram(TypeLabel{letter, rank});
}

std::optional<IdentifiedType> identify_standard(const IntMatrix& cartan, bool affine) {
  const int n = cartan.rows();
  const int target_rank = affine ? n - 1 : n;
  if (target_rank < 1) return std::nullopt;

  for (const TypeLabel& t : finite_types_up_to_rank(target_rank)) {
    if (t.rank != target_rank) continue;
    IntMatrix std_matrix = standard_cartan(t.letter, t.rank);
    if (affine) std_matrix = affinize(build_diagram(t)).cartan();
    std::vector<std::vector<int>> found;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    automorphism_search(cartan, std_matrix, image, used, 0, found, true);
    if (!found.empty())
      return IdentifiedType{t, affine, std::move(found.front())};
  }
  return std::nullopt;
}

DynkinDiagram fold(const DynkinDiagram& d,
                   const std::vector<DiagramAutomorphism>& generators) {
  const auto subgroup = close_subgroup(d, generators);
  const auto orbits = node_orbits(d.size(), subgroup);
  const int k = static_cast<int>(orbits.size());

  auto orbit_label = [&](const std::vector<int>& orbit) {
    if (orbit.size() == 1) return d.node_labels()[orbit[0]];
    std::string s = "{";
    for (std::size_t i = 0; i < orbit.size(); ++i)
      s += (i ? "," : "") + d.node_labels()[orbit[i]];
    return s + "}";
  };

  // Folding requires free orbits: two nodes in one orbit must never be
  // adjacent, otherwise no Coxeter quotient exists.
  for (const auto& orbit : orbits)
    for (std::size_t x = 0; x < orbit.size(); ++x)
      for (std::size_t y = x + 1; y < orbit.size(); ++y)
        if (d.cartan().at(orbit[x], orbit[y]) != 0)
          throw FoldError("orbit " + orbit_label(orbit) +
                          " contains adjacent nodes; this symmetry does not fold",
                          {{"orbit", orbit_label(orbit)}});

  IntMatrix folded(k, k);
  for (int I = 0; I < k; ++I)
    for (int J = 0; J < k; ++J) {
      long long sum = 0;
      for (std::size_t jj = 0; jj < orbits[J].size(); ++jj) {
        long long candidate = 0;
        for (int i : orbits[I]) candidate += d.cartan().at(i, orbits[J][jj]);
        if (jj == 0)
          sum = candidate;
        else
          assert(candidate == sum);  // independent of the column choice
      }
      folded.at(I, J) = sum;
    }

  std::vector<std::string> labels;
  labels.reserve(orbits.size());
  for (const auto& orbit : orbits) labels.push_back(orbit_label(orbit));

  if (auto id = identify_standard(folded, d.affine())) {
    // Renumber to the standard node order of the recognised type.
    IntMatrix std_matrix = id->affine ? affinize(build_diagram(id->label)).cartan()
                                      : standard_cartan(id->label.letter, id->label.rank);
    std::vector<std::string> std_labels(k);
    for (int i = 0; i < k; ++i) std_labels[i] = labels[id->std_to_given[i]];
    return DynkinDiagram(std::move(std_labels), std::move(std_matrix), d.affine(),
                         id->label);
  }
  return DynkinDiagram(std::move(labels), std::move(folded), d.affine(), std::nullopt);
}

std::vector<long long> cartan_symmetrizer(const IntMatrix& cartan) {
  const int n = cartan.rows();
  std::vector<Rat> d(n, Rat(0));
  std::vector<int> todo{0};
  d[0] = Rat(1);
  while (!todo.empty()) {
    const int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan.at(i, j) == 0) continue;
      const Rat dj = d[i] * Rat(cartan.at(i, j)) / Rat(cartan.at(j, i));
      if (d[j] == Rat(0)) {
        d[j] = dj;
        todo.push_back(j);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * Rat(cartan.at(i, j)) != d[j] * Rat(cartan.at(j, i)))
        throw ClassificationError("Cartan matrix is not symmetrizable");

  long long lcm_den = 1;
  for (const Rat& x : d) lcm_den = std::lcm(lcm_den, x.denominator());
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = (d[i] * Rat(lcm_den)).numerator();
  long long g = 0;
  for (long long x : out) g = std::gcd(g, x);
  for (long long& x : out) x /= g;
  return out;
}

DynkinDiagram affinize(const DynkinDiagram& d) {
  if (d.affine())
    throw UnsupportedError("cannot affinize an affine diagram");
  const int n = d.size();
  const IntMatrix& a = d.cartan();

  // Highest root = the unique root of maximal height (last in the sorted
  // positive list).
  const IntVec theta = roots(d).positive.back();

  // Pairings against the highest root via the symmetrized form
  // (alpha_i, alpha_j) = d_i * a_ij.
  const std::vector<long long> sym = cartan_symmetrizer(a);
  std::vector<long long> theta_dot(n, 0);  // (theta, alpha_j)
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) theta_dot[j] += theta[i] * sym[i] * a.at(i, j);
  long long theta_norm = 0;  // (theta, theta)
  for (int j = 0; j < n; ++j) theta_norm += theta[j] * theta_dot[j];

  IntMatrix ext(n + 1, n + 1);
  ext.at(0, 0) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext.at(i + 1, j + 1) = a.at(i, j);
  for (int j = 0; j < n; ++j) {
    assert((2 * theta_dot[j]) % theta_norm == 0);
    assert(theta_dot[j] % sym[j] == 0);
    ext.at(0, j + 1) = -2 * theta_dot[j] / theta_norm;
    ext.at(j + 1, 0) = -theta_dot[j] / sym[j];
  }

  std::vector<std::string> labels{"0"};
  labels.insert(labels.end(), d.node_labels().begin(), d.node_labels().end());
  return DynkinDiagram(std::move(labels), std::move(ext), /*affine=*/true, d.kind());
}

KodairaFiber parse_kodaira_fiber(const std::string& text) {
  if (text == "II*") return KodairaFiber{KodairaFiber::Family::IIStar, 0};
  if (text == "III*") return KodairaFiber{KodairaFiber::Family::IIIStar, 0};
  if (text == "IV*") return KodairaFiber{KodairaFiber::Family::IVStar, 0};

  auto parse_n = [&](const std::string& digits) {
    if (digits.empty())
      throw InvalidArgumentError("malformed fibre tag: " + text);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidArgumentError("malformed fibre tag: " + text);
    return std::atoi(digits.c_str());
  };

  if (text.rfind("I*", 0) == 0) {
    const int n = parse_n(text.substr(2));
    if (n > 60) throw BudgetError("I*_n supported for n <= 60");
    return KodairaFiber{KodairaFiber::Family::IStarN, n};
  }
  if (!text.empty() && text[0] == 'I') {
    std::string digits = text.substr(1);
    if (!digits.empty() && digits.back() == '*') {  // tolerate I0* spelling
      digits.pop_back();
      const int n = parse_n(digits);
      if (n > 60) throw BudgetError("I*_n supported for n <= 60");
      return KodairaFiber{KodairaFiber::Family::IStarN, n};
    }
    const int n = parse_n(digits);
    if (n <= 2)
      throw UnsupportedError("fibre I" + std::to_string(n) +
                             " has no root diagram of the kind handled here");
    if (n > 64) throw BudgetError("I_n supported for n <= 64");
    return KodairaFiber{KodairaFiber::Family::In, n};
  }
  throw InvalidArgumentError("unknown fibre tag: " + text);
}

std::string to_string(const KodairaFiber& f) {
  switch (f.family) {
    case KodairaFiber::Family::In: return "I" + std::to_string(f.n);
    case KodairaFiber::Family::IStarN: return "I*" + std::to_string(f.n);
    case KodairaFiber::Family::IIStar: return "II*";
    case KodairaFiber::Family::IIIStar: return "III*";
    case KodairaFiber::Family::IVStar: return "IV*";
  }
  throw InvalidArgumentError("corrupt fibre tag");
}

DynkinDiagram kodaira_to_affine(const KodairaFiber& f,
                                const std::vector<DiagramAutomorphism>& monodromy) {
  DynkinDiagram base = [&] {
    switch (f.family) {
      case KodairaFiber::Family::In:
        return affinize(build_diagram(Letter::A, f.n - 1));
      case KodairaFiber::Family::IStarN:
        return affinize(build_diagram(Letter::D, f.n + 4));
      case KodairaFiber::Family::IIStar:
        return affinize(build_diagram(Letter::E, 8));
      case KodairaFiber::Family::IIIStar:
        return affinize(build_diagram(Letter::E, 7));
      case KodairaFiber::Family::IVStar:
        return affinize(build_diagram(Letter::E, 6));
    }
    throw InvalidArgumentError("corrupt fibre tag");
  }();

  if (monodromy.empty()) return base;

  const auto subgroup = close_subgroup(base, monodromy);
  if (f.family == KodairaFiber::Family::In) {
    if (node_orbits(base.size(), subgroup).size() == 1)
      throw MonodromyError("monodromy permutes the components of " + to_string(f) +
                           " transitively");
  } else if (f.family == KodairaFiber::Family::IStarN && f.n == 0) {
    // The four outer nodes (degree one) must not form a single orbit.
    std::vector<bool> outer(base.size(), false);
    for (int i = 0; i < base.size(); ++i) {
      int deg = 0;
      for (int j = 0; j < base.size(); ++j)
        if (j != i && base.cartan().at(i, j) != 0) ++deg;
      outer[i] = deg == 1;
    }
    for (const auto& orbit : node_orbits(base.size(), subgroup)) {
      std::size_t outer_count = 0;
      for (int v : orbit) outer_count += outer[v] ? 1 : 0;
      if (outer_count == 4)
        throw MonodromyError("monodromy permutes the four outer components of " +
                             to_string(f) + " transitively");
    }
  }
  return fold(base, monodromy);
}

}  // namespace weylbraid
