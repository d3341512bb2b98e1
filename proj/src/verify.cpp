#include "weylbraid/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "weylbraid/artin.hpp"
#include "weylbraid/defmodel.hpp"
#include "weylbraid/dynkin.hpp"
#include "weylbraid/errors.hpp"
#include "weylbraid/lattice.hpp"
#include "weylbraid/weyl.hpp"

namespace weylbraid {

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"name", c.name}, {"passed", c.passed}};
  if (!c.note.empty()) j["note"] = c.note;
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = nlohmann::json{
      {"suite", r.suite}, {"all_passed", r.all_passed}, {"checks", r.checks}};
}

namespace {

DynkinDiagram diagram(const std::string& label) {
  return build_diagram(parse_type_label(label));
}

CheckResult result(std::string name, bool passed, std::string note = "") {
  return CheckResult{std::move(name), passed, std::move(note)};
}

}  // namespace

std::vector<CheckResult> check_folding_table() {
  std::vector<CheckResult> out;
  const struct {
    const char* from;
    const char* sym;
    const char* to;
  } table[] = {
      {"A3", "z2", "C2"}, {"A5", "z2", "C3"}, {"A7", "z2", "C4"},
      {"D4", "z2", "B3"}, {"D5", "z2", "B4"}, {"D6", "z2", "B5"},
      {"E6", "z2", "F4"}, {"D4", "s3", "G2"},
  };
  for (const auto& row : table) {
    const DynkinDiagram d = diagram(row.from);
    const DynkinDiagram folded =
        fold(d, named_automorphism_generators(d, row.sym));
    out.push_back(result(std::string("fold ") + row.from + " " + row.sym +
                             " -> " + row.to,
                         folded.kind_string() == row.to, folded.kind_string()));
  }
  for (const char* label : {"A2", "A4", "A6"}) {
    const DynkinDiagram d = diagram(label);
    bool rejected = false;
    try {
      fold(d, named_automorphism_generators(d, "z2"));
    } catch (const FoldError&) {
      rejected = true;
    }
    out.push_back(result(std::string("fold ") + label + " z2 rejected", rejected));
  }
  return out;
}

std::vector<CheckResult> check_weyl_orders() {
  const struct {
    const char* type;
    std::size_t order;
  } table[] = {
      {"A1", 2}, {"A2", 6},  {"A3", 24}, {"A4", 120},  {"A5", 720},
      {"C2", 8}, {"C3", 48}, {"G2", 12}, {"F4", 1152}, {"D4", 192},
  };
  std::vector<CheckResult> out;
  for (const auto& row : table) {
    const std::size_t got = enumerate_group(diagram(row.type)).size();
    out.push_back(result(std::string("order of W(") + row.type + ")",
                         got == row.order, std::to_string(got)));
  }
  return out;
}

std::vector<CheckResult> check_relations_sweep() {
  std::vector<CheckResult> out;
  for (const TypeLabel& t : finite_types_up_to_rank(4)) {
    const RelationReport rep = verify_braid_relations(build_diagram(t));
    out.push_back(result("relations " + to_string(t), rep.all_hold,
                         std::to_string(rep.checks.size()) + " pairs"));
  }
  for (const char* base : {"A2", "A3"}) {
    const RelationReport rep = verify_braid_relations(affinize(diagram(base)));
    out.push_back(result(std::string("relations ") + base + "~", rep.all_hold,
                         std::to_string(rep.checks.size()) + " pairs"));
  }
  out.push_back(result("relations between folded generators (n=2)",
                       verify_folded_braid_relations(2).all_hold));
  return out;
}

namespace {

// Every positive word of exactly `len` letters over generators 1..n.
void append_positive_words(int n, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> w(len, 1);
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < len && w[i] == n) w[i++] = 1;
    if (i == len) break;
    ++w[i];
  }
}

// Single braid-relation substitutions applicable to a positive word.
std::vector<std::vector<int>> oracle_neighbors(const IntMatrix& cox,
                                               const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  const int len = static_cast<int>(w.size());
  for (int i = 0; i < cox.rows(); ++i) {
    for (int j = 0; j < cox.rows(); ++j) {
      if (i == j) continue;
      const long long bond = cox.at(i, j);
      if (bond == kInfiniteBond || bond > len) continue;
      const int m = static_cast<int>(bond);
      for (int p = 0; p + m <= len; ++p) {
        bool match = true;
        for (int k = 0; match && k < m; ++k)
          match = w[p + k] == (k % 2 == 0 ? i + 1 : j + 1);
        if (!match) continue;
        std::vector<int> x = w;
        for (int k = 0; k < m; ++k) x[p + k] = (k % 2 == 0 ? j + 1 : i + 1);
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

// Connected components of positive words under braid substitutions.
// Substitutions preserve length, so components are computed per length;
// this is the textbook rewriting description of the positive monoid and
// shares no code with the normal-form machinery it cross-checks.
std::map<std::vector<int>, int> oracle_classes(const DynkinDiagram& d,
                                               int maxlen) {
  std::map<std::vector<int>, int> cls;
  int next = 0;
  for (int len = 0; len <= maxlen; ++len) {
    std::vector<std::vector<int>> words;
    append_positive_words(d.size(), len, words);
    for (const auto& w : words) {
      if (cls.count(w)) continue;
      std::vector<std::vector<int>> queue{w};
      cls[w] = next;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto& nb : oracle_neighbors(d.coxeter(), queue[q]))
          if (cls.emplace(nb, next).second) queue.push_back(nb);
      }
      ++next;
    }
  }
  return cls;
}

CheckResult oracle_exhaustive(const std::string& label, int maxlen) {
  const DynkinDiagram d = diagram(label);
  const auto cls = oracle_classes(d, maxlen);
  long long pairs = 0;
  long long mismatches = 0;
  for (auto a = cls.begin(); a != cls.end(); ++a) {
    for (auto b = cls.begin(); b != cls.end(); ++b) {
      ++pairs;
      const bool same_class = a->second == b->second;
      const bool same_element =
          words_equal(d, BraidWord{a->first}, BraidWord{b->first});
      if (same_class != same_element) ++mismatches;
    }
  }
  return result("oracle agreement " + label + " (length <= " +
                    std::to_string(maxlen) + ")",
                mismatches == 0, std::to_string(pairs) + " pairs");
}

void apply_random_rewrite(const DynkinDiagram& d, std::mt19937_64& rng,
                          std::vector<int>& w) {
  const int kind = static_cast<int>(rng() % 3);
  if (kind == 1) {  // delete an adjacent canceling pair when one exists
    std::vector<int> spots;
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
      if (w[p] == -w[p + 1]) spots.push_back(p);
    if (!spots.empty()) {
      const int p = spots[rng() % spots.size()];
      w.erase(w.begin() + p, w.begin() + p + 2);
      return;
    }
  } else if (kind == 2) {  // substitute across a braid window when one exists
    struct Window {
      int pos, i, j, sign, m;
    };
    std::vector<Window> windows;
    const IntMatrix& cox = d.coxeter();
    for (int i = 0; i < cox.rows(); ++i)
      for (int j = 0; j < cox.rows(); ++j) {
        if (i == j) continue;
        const long long bond = cox.at(i, j);
        if (bond == kInfiniteBond ||
            bond > static_cast<long long>(w.size()))
          continue;
        const int m = static_cast<int>(bond);
        for (int sign : {1, -1})
          for (int p = 0; p + m <= static_cast<int>(w.size()); ++p) {
            bool match = true;
            for (int k = 0; match && k < m; ++k)
              match = w[p + k] == sign * (k % 2 == 0 ? i + 1 : j + 1);
            if (match) windows.push_back(Window{p, i, j, sign, m});
          }
      }
    if (!windows.empty()) {
      const Window& win = windows[rng() % windows.size()];
      for (int k = 0; k < win.m; ++k)
        w[win.pos + k] = win.sign * (k % 2 == 0 ? win.j + 1 : win.i + 1);
      return;
    }
  }
  // fallback: insert a canceling pair (always possible)
  const int g = 1 + static_cast<int>(rng() % d.size());
  const int s = rng() % 2 ? g : -g;
  const std::size_t p = rng() % (w.size() + 1);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), {s, -s});
}

CheckResult oracle_random(const std::string& label, int trials, uint64_t seed) {
  const DynkinDiagram d = diagram(label);
  const int n = d.size();
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> w;
    const int len = 6 + static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % n);
      w.push_back(rng() % 2 ? g : -g);
    }
    if (rng() % 2) {  // seed an alternating window so substitutions fire
      const int i = static_cast<int>(rng() % n);
      int j = static_cast<int>(rng() % n);
      while (j == i) j = static_cast<int>(rng() % n);
      const int m = static_cast<int>(d.coxeter().at(i, j));
      const int sign = rng() % 2 ? 1 : -1;
      std::vector<int> window;
      for (int k = 0; k < m; ++k)
        window.push_back(sign * (k % 2 == 0 ? i + 1 : j + 1));
      const std::size_t p = rng() % (w.size() + 1);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), window.begin(),
               window.end());
    }
    const GarsideNormalForm before = normal_form(d, BraidWord{w});
    const int steps = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) apply_random_rewrite(d, rng, w);
    if (!(normal_form(d, BraidWord{w}) == before)) ++mismatches;
  }
  return result("rewrite invariance " + label, mismatches == 0,
                std::to_string(trials) + " trials");
}

}  // namespace

std::vector<CheckResult> check_garside_oracle(int random_trials) {
  std::vector<CheckResult> out;
  out.push_back(oracle_exhaustive("A2", 6));
  out.push_back(oracle_exhaustive("C2", 6));
  out.push_back(oracle_random("A3", random_trials, 0x5eed0a3ULL));
  out.push_back(oracle_random("G2", random_trials, 0x5eed062ULL));
  return out;
}

namespace {

// The target's defining relations hold among the given elements, and the
// subgroup they generate has exactly the target group's order.  Relations
// give a surjection from the target group, so equal orders force an
// isomorphism.
CheckResult presentation_match(const std::string& name, const DynkinDiagram& d,
                               const std::vector<WeylElement>& gens,
                               const std::string& target_label,
                               std::size_t subgroup_order) {
  const DynkinDiagram target = diagram(target_label);
  bool ok = static_cast<int>(gens.size()) == target.size();
  for (const WeylElement& g : gens)
    if (ok) ok = multiply(d, g, g).is_identity();
  for (int i = 0; ok && i < target.size(); ++i)
    for (int j = i + 1; ok && j < target.size(); ++j) {
      const WeylElement p = multiply(d, gens[i], gens[j]);
      WeylElement acc = identity_element(d);
      for (long long k = 0; k < target.coxeter().at(i, j); ++k)
        acc = multiply(d, acc, p);
      ok = acc.is_identity();
    }
  if (ok) {
    const std::size_t target_order = enumerate_group(target).size();
    ok = subgroup_order == target_order &&
         generated_subgroup(d, gens).size() == subgroup_order;
  }
  return result(name, ok, "order " + std::to_string(subgroup_order));
}

}  // namespace

std::vector<CheckResult> check_symmetric_subgroups() {
  std::vector<CheckResult> out;

  // braid-level generators of the symmetric subgroup over A4
  const std::vector<BraidWord> gens = michel_generators(2);
  const bool spelled = gens.size() == 2 &&
                       gens[0].letters == std::vector<int>{1, 4} &&
                       gens[1].letters == std::vector<int>{2, 3, 2};
  out.push_back(result("A4 symmetric generators spelled out", spelled));

  const DynkinDiagram a4 = diagram("A4");
  BraidWord lhs, rhs;
  for (int k = 0; k < 4; ++k) {
    const BraidWord& wa = k % 2 == 0 ? gens[0] : gens[1];
    const BraidWord& wb = k % 2 == 0 ? gens[1] : gens[0];
    lhs.letters.insert(lhs.letters.end(), wa.letters.begin(), wa.letters.end());
    rhs.letters.insert(rhs.letters.end(), wb.letters.begin(), wb.letters.end());
  }
  out.push_back(result("A4 symmetric generators satisfy the m=4 relation",
                       words_equal(a4, lhs, rhs)));

  const std::vector<WeylElement> images{project_to_weyl(a4, gens[0]),
                                        project_to_weyl(a4, gens[1])};
  const std::size_t image_order = generated_subgroup(a4, images).size();
  out.push_back(result("A4 generator images close up to order 8",
                       image_order == 8, std::to_string(image_order)));

  const struct {
    const char* ambient;
    const char* sym;
    std::size_t order;
    const char* target;
  } table[] = {
      {"A2", "z2", 2, "A1"},
      {"A4", "z2", 8, "C2"},
      {"A6", "z2", 48, "C3"},
      {"D4", "s3", 12, "G2"},
  };
  for (const auto& row : table) {
    const DynkinDiagram d = diagram(row.ambient);
    const auto sym = named_automorphism_generators(d, row.sym);
    const std::size_t got = fixed_subgroup(d, sym).size();
    out.push_back(result(std::string("fixed subgroup ") + row.ambient + "/" +
                             row.sym + " order",
                         got == row.order, std::to_string(got)));
    out.push_back(presentation_match(std::string("fixed subgroup ") +
                                         row.ambient + "/" + row.sym + " is W(" +
                                         row.target + ")",
                                     d, fixed_subgroup_generators(d, sym),
                                     row.target, got));
  }
  return out;
}

namespace {

struct NamedConfiguration {
  std::string name;
  AdeConfiguration conf;
};

std::vector<NamedConfiguration> reflection_test_cases() {
  std::vector<NamedConfiguration> cases;
  IntMatrix u(2, 2);
  u.at(0, 1) = 1;
  u.at(1, 0) = 1;
  cases.push_back({"A1 in U", embed_ade(diagram("A1"), make_lattice(u))});
  for (const char* label : {"A2", "A3", "D4"})
    cases.push_back({std::string(label) + " standard",
                     identity_configuration(diagram(label))});
  return cases;
}

}  // namespace

std::vector<CheckResult> check_lattice_reflections() {
  std::vector<CheckResult> out;
  for (const NamedConfiguration& c : reflection_test_cases()) {
    const IntegralLattice& L = c.conf.ambient;
    std::vector<IntMatrix> refl;
    for (const IntVec& e : c.conf.classes)
      refl.push_back(reflection_matrix_in_class(L, e));

    bool involution = true;
    bool gram = true;
    for (const IntMatrix& r : refl) {
      involution = involution && r * r == IntMatrix::identity(L.rank());
      gram = gram && r.transposed() * L.gram * r == L.gram;
    }
    out.push_back(result("reflection involutions " + c.name, involution));
    out.push_back(result("reflections preserve the form " + c.name, gram));

    bool coxeter = true;
    const IntMatrix& cox = c.conf.diagram.coxeter();
    for (std::size_t i = 0; i < refl.size() && coxeter; ++i)
      for (std::size_t j = i + 1; j < refl.size() && coxeter; ++j) {
        const IntMatrix p = refl[i] * refl[j];
        IntMatrix acc = IntMatrix::identity(L.rank());
        for (long long k = 0;
             k < cox.at(static_cast<int>(i), static_cast<int>(j)); ++k)
          acc = acc * p;
        coxeter = acc.is_identity();
      }
    out.push_back(result("reflection products have the right order " + c.name,
                         coxeter));
  }
  return out;
}

std::vector<CheckResult> check_bfield_criterion(int trials) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(0xb0f1e1d5ULL);
  for (const NamedConfiguration& c : reflection_test_cases()) {
    const IntegralLattice& L = c.conf.ambient;
    const bool zero_ok =
        enhanced_symmetry_bfield(c.conf, BField(L.rank(), Rat(0))).enhanced;
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
      BField b(L.rank());
      for (int i = 0; i < L.rank(); ++i) {
        const long long q = 1 + static_cast<long long>(rng() % 12);
        b[i] = Rat(static_cast<long long>(rng() % q), q);
      }
      const bool enhanced = enhanced_symmetry_bfield(c.conf, b).enhanced;
      bool fixed_by_all = true;
      for (const IntVec& e : c.conf.classes)
        fixed_by_all = fixed_by_all && bfield_reflect(L, e, b) == b;
      if (enhanced != fixed_by_all) ++mismatches;
    }
    out.push_back(result("B-field criterion " + c.name,
                         zero_ok && mismatches == 0,
                         std::to_string(trials) + " fields"));
  }
  return out;
}

std::vector<CheckResult> check_twist_parity(int trials) {
  IntMatrix g(3, 3);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  g.at(2, 2) = -2;
  const GradedLattice h{make_lattice(g), 2};

  std::vector<IntVec> classes;
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c)
        if (const IntVec v{a, b, c}; pairing(h.even, v, v) == -2)
          classes.push_back(v);

  std::mt19937_64 rng(0x79157ULL);
  int odd_moved = 0;
  int not_involutive = 0;
  for (int t = 0; t < trials; ++t) {
    const GradedClass v{classes[rng() % classes.size()], {0, 0}};
    GradedClass x;
    for (int i = 0; i < 3; ++i)
      x.even.push_back(static_cast<long long>(rng() % 19) - 9);
    for (int i = 0; i < 2; ++i)
      x.odd.push_back(static_cast<long long>(rng() % 19) - 9);
    const GradedClass once = spherical_twist_cohomology(h, v, x);
    if (once.odd != x.odd) ++odd_moved;
    const GradedClass twice = spherical_twist_cohomology(h, v, once);
    if (!(twice.even == x.even && twice.odd == x.odd)) ++not_involutive;
  }
  std::vector<CheckResult> out;
  out.push_back(result("twists fix the odd part", odd_moved == 0,
                       std::to_string(trials) + " trials"));
  out.push_back(result("twists square to the identity", not_involutive == 0,
                       std::to_string(classes.size()) + " classes"));
  return out;
}

std::vector<CheckResult> check_census_model() {
  std::vector<CheckResult> out;
  const DynkinDiagram a2 = diagram("A2");
  const DeformationModel m = build_model(a2, 2);
  const RatVec generic{Rat(1), Rat(3)};

  {
    const ExceptionalCensus c = census(m, generic);
    long long total = 0;
    for (const CurveSet& s : c.curves) total += s.count;
    out.push_back(result("A2 g=2 generic point census",
                         c.surfaces.empty() && c.curves.size() == 3 && total == 6,
                         std::to_string(total) + " curves"));
  }
  {
    const ExceptionalCensus c = census(m, {Rat(0), Rat(0)});
    out.push_back(result("A2 g=2 central fibre census",
                         c.surfaces == std::vector<int>{1, 2} &&
                             c.curves.empty()));
  }
  {
    const ExceptionalCensus c = census(build_model(a2, 1), generic);
    out.push_back(result("A2 g=1 generic census is empty",
                         c.surfaces.empty() && c.curves.empty()));
  }
  {
    const DeformationModel degen = build_model(diagram("A1"), 0);
    const bool constant =
        census(degen, {Rat(0)}).surfaces == std::vector<int>{1} &&
        census(degen, {Rat(3, 7)}).surfaces == std::vector<int>{1} &&
        census(degen, {Rat(3, 7)}).curves.empty();
    out.push_back(
        result("genus 0 model is constant with a trivial action",
               degen.trivial_action && constant));
  }

  const struct {
    const char* type;
    long long total;
  } totals[] = {{"A2", 6}, {"C2", 8}, {"G2", 12}};
  for (const auto& row : totals) {
    const DeformationModel model = build_model(diagram(row.type), 2);
    long long sum = 0;
    for (const CurveSet& s : census(model, generic).curves) sum += s.count;
    out.push_back(result(std::string("census total ") + row.type + " g=2",
                         sum == row.total, std::to_string(sum)));
  }

  {
    // constant along the orbit of a generic point and at the origin
    bool stable = true;
    for (const WeylElement& w : enumerate_group(a2)) {
      const ExceptionalCensus moved = census(m, w.matrix().apply(generic));
      stable = stable && moved.surfaces.empty() && moved.curves.size() == 3;
      const ExceptionalCensus center =
          census(m, w.matrix().apply(RatVec(2, Rat(0))));
      stable = stable && center.curves.empty() && center.surfaces.size() == 2;
    }
    out.push_back(result("census constant along closed orbits", stable));
  }

  {
    // a point is on wall j exactly when r_j fixes it
    bool walls_ok = true;
    for (const char* label : {"A2", "C2", "G2"}) {
      const DeformationModel model = build_model(diagram(label), 2);
      std::vector<RatVec> samples{RatVec(model.rank(), Rat(0)),
                                  RatVec(model.rank(), Rat(1))};
      RatVec mixed(model.rank());
      for (int i = 0; i < model.rank(); ++i) mixed[i] = Rat(i + 1, 3);
      samples.push_back(mixed);
      for (int j = 0; j < model.rank(); ++j)
        for (const RatVec& s : samples) {
          Rat dot(0);
          for (int i = 0; i < model.rank(); ++i)
            dot += Rat(model.walls[j].normal[i]) * s[i];
          walls_ok = walls_ok &&
                     (dot == Rat(0)) == (model.action[j].apply(s) == s);
        }
    }
    out.push_back(result("walls are the reflection fixed loci", walls_ok));
  }
  return out;
}

std::vector<CheckResult> check_kodaira_table() {
  std::vector<CheckResult> out;
  const struct {
    const char* fibre;
    const char* kind;
  } table[] = {{"I3", "A2~"},  {"I5", "A4~"},   {"I*0", "D4~"},
               {"II*", "E8~"}, {"III*", "E7~"}, {"IV*", "E6~"}};
  for (const auto& row : table) {
    const DynkinDiagram d = kodaira_to_affine(parse_kodaira_fiber(row.fibre));
    out.push_back(result(std::string("fibre ") + row.fibre + " -> " + row.kind,
                         d.kind_string() == row.kind, d.kind_string()));
  }
  {
    const DynkinDiagram plain = kodaira_to_affine(parse_kodaira_fiber("I3"));
    bool rejected = false;
    try {
      kodaira_to_affine(parse_kodaira_fiber("I3"),
                        {parse_cycles(plain, "(0 1 2)")});
    } catch (const MonodromyError&) {
      rejected = true;
    }
    out.push_back(result("I3 with transitive monodromy rejected", rejected));
  }
  {
    const DynkinDiagram plain = kodaira_to_affine(parse_kodaira_fiber("I*0"));
    bool rejected = false;
    try {
      kodaira_to_affine(parse_kodaira_fiber("I*0"),
                        {parse_cycles(plain, "(0 1 3 4)")});
    } catch (const MonodromyError&) {
      rejected = true;
    }
    out.push_back(result("I*0 with transitive monodromy rejected", rejected));
  }
  {
    const DynkinDiagram plain = kodaira_to_affine(parse_kodaira_fiber("I4"));
    const DynkinDiagram folded = kodaira_to_affine(
        parse_kodaira_fiber("I4"), {parse_cycles(plain, "(1 3)")});
    out.push_back(result("I4 halved by monodromy", folded.kind_string() == "C2~",
                         folded.kind_string()));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "relations", "folding", "fixed-subgroups", "lattice",
      "bfield",    "census",  "kodaira",         "garside-oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "relations") {
    rep.checks = check_relations_sweep();
  } else if (name == "folding") {
    rep.checks = check_folding_table();
  } else if (name == "fixed-subgroups") {
    rep.checks = check_symmetric_subgroups();
  } else if (name == "lattice") {
    rep.checks = check_lattice_reflections();
    for (CheckResult& c : check_twist_parity()) rep.checks.push_back(std::move(c));
  } else if (name == "bfield") {
    rep.checks = check_bfield_criterion();
  } else if (name == "census") {
    rep.checks = check_census_model();
  } else if (name == "kodaira") {
    rep.checks = check_kodaira_table();
  } else if (name == "garside-oracle") {
    rep.checks = check_garside_oracle();
  } else {
    throw InvalidArgumentError("unknown verification suite: " + name,
                               {{"known", suite_names()}});
  }
  for (const CheckResult& c : rep.checks)
    rep.all_passed = rep.all_passed && c.passed;
  return rep;
}

}  // namespace weylbraid
