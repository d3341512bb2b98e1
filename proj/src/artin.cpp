#include "weylbraid/artin.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "weylbraid/errors.hpp"

namespace weylbraid {

BraidWord parse_braid_word(const std::string& text) {
  BraidWord w;
  std::istringstream ss(text);
  std::string token;
  while (ss >> token) {
    std::size_t i = token[0] == '-' || token[0] == '+' ? 1 : 0;
    if (i == token.size())
      throw InvalidArgumentError("malformed braid letter: " + token);
    for (std::size_t j = i; j < token.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(token[j])))
        throw InvalidArgumentError("malformed braid letter: " + token);
    const int letter = std::atoi(token.c_str());
    if (letter == 0) throw InvalidArgumentError("braid letters are non-zero");
    w.letters.push_back(letter);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(w.letters[i]);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxWordLetters = 10000;
constexpr int kMaxGarsideRank = 8;

// A simple element (positive lift of a Weyl element) with its inverse
// matrix cached so both descent sets are sign tests on columns.
struct Simple {
  IntMatrix m;
  IntMatrix minv;
};

bool col_nonpos(const IntMatrix& m, int j) {
  for (int i = 0; i < m.rows(); ++i)
    if (m.at(i, j) > 0) return false;
  return true;
}

// Everything the conversion and normalization loops need about d.
struct GarsideContext {
  const DynkinDiagram& d;
  int n;
  std::vector<IntMatrix> gen;  // simple reflection matrices
  IntMatrix w0;                // longest element
  std::vector<int> w0_word;

  explicit GarsideContext(const DynkinDiagram& diagram)
      : d(diagram), n(diagram.size()), gen(simple_reflection_matrices(diagram)) {
    if (diagram.affine())
      throw UnsupportedError("normal forms need a finite-type diagram");
    if (n > kMaxGarsideRank)
      throw BudgetError("normal forms limited to rank " +
                        std::to_string(kMaxGarsideRank));
    const WeylElement longest = longest_element(diagram);
    w0 = longest.matrix();
    w0_word = longest.word();
  }

  Simple identity() const {
    return Simple{IntMatrix::identity(n), IntMatrix::identity(n)};
  }

  // Right descents of a: letters s with l(a r_s) < l(a).
  uint32_t right_descents(const Simple& a) const {
    uint32_t mask = 0;
    for (int j = 0; j < n; ++j)
      if (col_nonpos(a.m, j)) mask |= 1u << j;
    return mask;
  }

  // Left descents of b: letters s with l(r_s b) < l(b), read off b^{-1}.
  uint32_t left_descents(const Simple& b) const {
    uint32_t mask = 0;
    for (int j = 0; j < n; ++j)
      if (col_nonpos(b.minv, j)) mask |= 1u << j;
    return mask;
  }

  // Conjugation by Delta (an involution on simples since w0^2 = 1).
  Simple tau(const Simple& a) const {
    return Simple{w0 * a.m * w0, w0 * a.minv * w0};
  }

  // Move the letter s (0-based) from the front of b to the back of a.
  void slide(Simple& a, Simple& b, int s) const {
    a.m = a.m * gen[s];
    a.minv = gen[s] * a.minv;
    b.m = gen[s] * b.m;
    b.minv = b.minv * gen[s];
  }

  // Left-greedy bubbling: repeat until every adjacent pair is
  // left-weighted and no factor is trivial.
  void normalize(std::vector<Simple>& fs) const {
    bool changed = true;
    long long steps = 0;
    while (changed) {
      changed = false;
      fs.erase(std::remove_if(fs.begin(), fs.end(),
                              [](const Simple& f) { return f.m.is_identity(); }),
               fs.end());
      for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        while (true) {
          const uint32_t rem = left_descents(fs[i + 1]) & ~right_descents(fs[i]);
          if (rem == 0) break;
          slide(fs[i], fs[i + 1], __builtin_ctz(rem));
          changed = true;
          if (++steps > 200000000)
            throw BudgetError("normalization exceeded its step budget");
        }
      }
    }
  }
};

}  // namespace

GarsideNormalForm normal_form(const DynkinDiagram& d, const BraidWord& w) {
  if (w.letters.size() > kMaxWordLetters)
    throw BudgetError("braid words limited to " + std::to_string(kMaxWordLetters) +
                      " letters");
  GarsideContext ctx(d);

  const std::size_t len = w.letters.size();
  // A trailing inverse letter conjugates everything before it by Delta,
  // so a factor born at position j picks up tau once per later negative.
  std::vector<int> neg_after(len + 1, 0);
  for (std::size_t j = len; j-- > 0;)
    neg_after[j] = neg_after[j + 1] + (w.letters[j] < 0 ? 1 : 0);

  long long k = -neg_after[0];
  std::vector<Simple> factors;
  factors.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    const int letter = w.letters[j];
    const int idx = d.node_index(std::abs(letter)) ;
    Simple f;
    if (letter > 0) {
      f = Simple{ctx.gen[idx], ctx.gen[idx]};
    } else {
      // R_i^{-1} = Delta^{-1} * (positive lift of w0 r_i)
      IntMatrix m = ctx.w0 * ctx.gen[idx];
      IntMatrix minv = ctx.gen[idx] * ctx.w0;
      f = Simple{std::move(m), std::move(minv)};
    }
    if (neg_after[j + 1] % 2 == 1) f = ctx.tau(f);
    factors.push_back(std::move(f));
  }

  ctx.normalize(factors);

  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead].m == ctx.w0) ++lead;
  k += static_cast<long long>(lead);

  GarsideNormalForm nf;
  nf.delta_power = k;
  for (std::size_t i = lead; i < factors.size(); ++i)
    nf.factors.push_back(canonical_word(d, factors[i].m));
  return nf;
}

bool words_equal(const DynkinDiagram& d, const BraidWord& a, const BraidWord& b) {
  // Exponent sums are a cheap abelian invariant.
  long long ea = 0, eb = 0;
  for (int l : a.letters) ea += l > 0 ? 1 : -1;
  for (int l : b.letters) eb += l > 0 ? 1 : -1;
  if (ea != eb) return false;
  return normal_form(d, a) == normal_form(d, b);
}

BraidWord normal_form_to_word(const DynkinDiagram& d, const GarsideNormalForm& nf) {
  const WeylElement longest = longest_element(d);
  BraidWord out;
  if (nf.delta_power >= 0) {
    for (long long i = 0; i < nf.delta_power; ++i)
      out.letters.insert(out.letters.end(), longest.word().begin(),
                         longest.word().end());
  } else {
    for (long long i = 0; i < -nf.delta_power; ++i)
      for (auto it = longest.word().rbegin(); it != longest.word().rend(); ++it)
        out.letters.push_back(-*it);
  }
  for (const auto& factor : nf.factors)
    out.letters.insert(out.letters.end(), factor.begin(), factor.end());
  return out;
}

WeylElement project_to_weyl(const DynkinDiagram& d, const BraidWord& w) {
  std::vector<int> word;
  word.reserve(w.letters.size());
  for (int l : w.letters) word.push_back(std::abs(l));
  return word_to_element(d, word);
}

namespace {

// Alternating product s t s t ... with `count` letters.
std::vector<int> alternating(int s, int t, long long count) {
  std::vector<int> out;
  for (long long i = 0; i < count; ++i) out.push_back(i % 2 == 0 ? s : t);
  return out;
}

}  // namespace

RelationReport verify_braid_relations(const DynkinDiagram& d) {
  RelationReport report;
  const bool finite = !d.affine();
  for (int i = 1; i <= d.size(); ++i) {
    for (int j = i + 1; j <= d.size(); ++j) {
      RelationCheck check;
      check.node_a = i;
      check.node_b = j;
      check.bond = d.coxeter().at(i - 1, j - 1);
      if (check.bond == kInfiniteBond) {
        check.holds = true;  // no relation to verify
      } else if (finite) {
        check.holds = words_equal(d, BraidWord{alternating(i, j, check.bond)},
                                  BraidWord{alternating(j, i, check.bond)});
      } else {
        // Faithful reflection matrices plus matching lengths.
        const auto lhs = word_to_element(d, alternating(i, j, check.bond));
        const auto rhs = word_to_element(d, alternating(j, i, check.bond));
        check.holds = equal(lhs, rhs) && lhs.word().size() == rhs.word().size();
      }
      report.all_hold = report.all_hold && check.holds;
      report.checks.push_back(check);
    }
  }
  return report;
}

std::vector<BraidWord> michel_generators(int n) {
  if (n < 1) throw InvalidArgumentError("the chain A_{2n} needs n >= 1");
  std::vector<BraidWord> out;
  for (int i = 1; i < n; ++i)
    out.push_back(BraidWord{{i, 2 * n + 1 - i}});
  out.push_back(BraidWord{{n, n + 1, n}});
  return out;
}

RelationReport verify_folded_braid_relations(int n) {
  if (n > kMaxGarsideRank / 2)
    throw BudgetError("folded relations limited to n <= " +
                      std::to_string(kMaxGarsideRank / 2));
  const DynkinDiagram ambient = build_diagram(Letter::A, 2 * n);
  const DynkinDiagram target =
      n == 1 ? build_diagram(Letter::A, 1) : build_diagram(Letter::C, n);
  const auto gens = michel_generators(n);

  RelationReport report;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      RelationCheck check;
      check.node_a = i;
      check.node_b = j;
      check.bond = target.coxeter().at(i - 1, j - 1);
      BraidWord lhs, rhs;
      for (long long p = 0; p < check.bond; ++p) {
        const auto& lf = (p % 2 == 0 ? gens[i - 1] : gens[j - 1]).letters;
        const auto& rf = (p % 2 == 0 ? gens[j - 1] : gens[i - 1]).letters;
        lhs.letters.insert(lhs.letters.end(), lf.begin(), lf.end());
        rhs.letters.insert(rhs.letters.end(), rf.begin(), rf.end());
      }
      check.holds = words_equal(ambient, lhs, rhs);
      report.all_hold = report.all_hold && check.holds;
      report.checks.push_back(check);
    }
  }
  return report;
}

}  // namespace weylbraid
