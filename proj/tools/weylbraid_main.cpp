// Command-line front end: one verb per module operation, JSON in and out.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (and a failing
// verification suite).  Every exit path prints JSON unless --human asks
// for a readable rendering.  The WEYLBRAID_BUDGET environment variable
// overrides the default enumeration caps; an explicit --cap wins.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylbraid/artin.hpp"
#include "weylbraid/defmodel.hpp"
#include "weylbraid/dynkin.hpp"
#include "weylbraid/errors.hpp"
#include "weylbraid/json_io.hpp"
#include "weylbraid/lattice.hpp"
#include "weylbraid/verify.hpp"
#include "weylbraid/weyl.hpp"

namespace {

using nlohmann::json;
using namespace weylbraid;

std::size_t budget_cap(std::size_t fallback) {
  const char* text = std::getenv("WEYLBRAID_BUDGET");
  if (text == nullptr || *text == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != std::string(text).size() || value == 0)
      throw std::invalid_argument("trailing characters");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw InvalidArgumentError("WEYLBRAID_BUDGET must be a positive integer",
                               {{"value", text}});
  }
}

std::size_t resolve_cap(std::size_t flag_value, std::size_t fallback) {
  return flag_value != 0 ? flag_value : budget_cap(fallback);
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("invalid JSON argument: ") + e.what(),
                               {{"text", text}});
  }
}

IntMatrix parse_matrix_text(const std::string& text) {
  return matrix_from_json(parse_json_text(text));
}

IntVec parse_int_vector(const std::string& text) {
  IntVec out;
  for (const Rat& r : parse_rational_vector(text)) {
    if (r.denominator() != 1)
      throw InvalidArgumentError("expected an integer vector", {{"text", text}});
    out.push_back(r.numerator());
  }
  return out;
}

std::vector<int> parse_node_list(const std::string& text) {
  std::vector<int> out;
  for (long long v : parse_int_vector(text)) out.push_back(static_cast<int>(v));
  return out;
}

// Group words reuse the braid word syntax but only name generators.
std::vector<int> parse_group_word(const std::string& text) {
  const BraidWord w = parse_braid_word(text);
  for (int letter : w.letters)
    if (letter <= 0)
      throw InvalidArgumentError("group words use positive node numbers",
                                 {{"word", text}});
  return w.letters;
}

DynkinDiagram load_diagram(const std::string& type, bool make_affine) {
  DynkinDiagram d = build_diagram(parse_type_label(type));
  if (make_affine) return affinize(d);
  return d;
}

std::vector<DiagramAutomorphism> load_symmetry(const DynkinDiagram& d,
                                               const std::string& named,
                                               const std::vector<std::string>& cycles) {
  std::vector<DiagramAutomorphism> gens;
  if (!named.empty()) gens = named_automorphism_generators(d, named);
  for (const std::string& c : cycles) gens.push_back(parse_cycles(d, c));
  if (gens.empty())
    throw InvalidArgumentError("no symmetry given: use --auto or --cycles");
  return gens;
}

// Everything a leaf command produces: a document and an exit code.
struct Outcome {
  json out;
  int exit_code = 0;
  bool produced = false;

  void set(json j) {
    out = std::move(j);
    produced = true;
  }
};

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool scalar_array(const json& j) {
  for (const json& e : j)
    if (e.is_structured()) return false;
  return true;
}

// Readable rendering: nested "key: value" lines, matrices row by row.
void render_human(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_structured() && !(it.value().is_array() && scalar_array(it.value()))) {
        os << pad << it.key() << ":\n";
        render_human(os, it.value(), indent + 1);
      } else if (it.value().is_array()) {
        os << pad << it.key() << ":";
        for (const json& e : it.value()) os << ' ' << scalar_text(e);
        os << '\n';
      } else {
        os << pad << it.key() << ": " << scalar_text(it.value()) << '\n';
      }
    }
  } else if (j.is_array()) {
    if (scalar_array(j)) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i)
        os << (i ? " " : "") << scalar_text(j[i]);
      os << '\n';
    } else {
      for (const json& e : j) {
        if (e.is_array() && scalar_array(e)) {
          render_human(os, e, indent);
        } else {
          os << pad << "-\n";
          render_human(os, e, indent + 1);
        }
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

json help_document(CLI::App& app) {
  json verbs = json::object();
  for (const CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    verbs[sub->get_name()] = sub->get_description();
  return json{{"usage", "weylbraid <verb> [options]"},
              {"verbs", verbs},
              {"help", app.help("", CLI::AppFormatMode::All)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynkin diagram folding, Weyl and braid group computations, "
               "lattice reflections and deformation-model bookkeeping"};
  app.require_subcommand(0, 1);

  bool human = false;
  Outcome outcome;
  app.add_flag("--human", human, "render a readable summary instead of JSON");

  const auto sub = [&human](CLI::App* parent, const std::string& name,
                            const std::string& desc) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->add_flag("--human", human, "render a readable summary instead of JSON");
    return c;
  };

  // ---- diagram ----------------------------------------------------------
  {
    struct Opts {
      std::string type, doc;
      bool affine = false, autos = false, symmetrizer = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(&app, "diagram", "Build a diagram from a type label or a JSON document");
    c->add_option("--type", o->type, "standard type label, e.g. A5 or F4");
    c->add_option("--json", o->doc,
                  "diagram document: {\"type\": ...}, a bare Cartan matrix, or "
                  "{\"cartan\", \"affine\", \"nodes\"}");
    c->add_flag("--affine", o->affine, "affinize before reporting");
    c->add_flag("--automorphisms", o->autos, "include the diagram symmetry group");
    c->add_flag("--symmetrizer", o->symmetrizer, "include the Cartan symmetrizer");
    c->callback([&outcome, o] {
      if (o->type.empty() == o->doc.empty())
        throw CLI::ValidationError("diagram: give exactly one of --type or --json");
      DynkinDiagram d = o->type.empty()
                            ? diagram_from_json(parse_json_text(o->doc))
                            : build_diagram(parse_type_label(o->type));
      if (o->affine) d = affinize(d);
      json j = d;
      if (o->autos) {
        json autos = json::array();
        for (const DiagramAutomorphism& a : automorphism_group(d))
          autos.push_back(automorphism_to_json(d, a));
        j["automorphisms"] = autos;
      }
      if (o->symmetrizer) j["symmetrizer"] = cartan_symmetrizer(d.cartan());
      outcome.set(j);
    });
  }

  // ---- fold --------------------------------------------------------------
  {
    struct Opts {
      std::string type, named;
      std::vector<std::string> cycles;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(&app, "fold", "Quotient a diagram by a symmetry subgroup");
    c->add_option("--type", o->type, "diagram to fold")->required();
    c->add_option("--auto", o->named, "named symmetry: z2, z3 or s3");
    c->add_option("--cycles", o->cycles, "generator in cycle notation, e.g. \"(1 6)(3 5)\"");
    c->add_flag("--affine", o->affine, "fold the affinization instead");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      outcome.set(json(fold(d, load_symmetry(d, o->named, o->cycles))));
    });
  }

  // ---- affinize ----------------------------------------------------------
  {
    auto type = std::make_shared<std::string>();
    CLI::App* c = sub(&app, "affinize", "Extend a finite diagram by the lowest root");
    c->add_option("--type", *type, "finite type label")->required();
    c->callback([&outcome, type] {
      outcome.set(json(affinize(load_diagram(*type, false))));
    });
  }

  // ---- kodaira -----------------------------------------------------------
  {
    struct Opts {
      std::string fibre;
      std::vector<std::string> monodromy;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(&app, "kodaira", "Affine diagram of a degenerate elliptic fibre");
    c->add_option("--fiber", o->fibre, "fibre tag: I3, I*0, II*, III*, IV*, ...")->required();
    c->add_option("--monodromy", o->monodromy,
                  "monodromy generator in cycle notation over the fibre diagram");
    c->callback([&outcome, o] {
      const KodairaFiber f = parse_kodaira_fiber(o->fibre);
      std::vector<DiagramAutomorphism> gens;
      if (!o->monodromy.empty()) {
        const DynkinDiagram plain = kodaira_to_affine(f);
        for (const std::string& text : o->monodromy)
          gens.push_back(parse_cycles(plain, text));
      }
      outcome.set(json(kodaira_to_affine(f, gens)));
    });
  }

  // ---- weyl --------------------------------------------------------------
  CLI::App* weyl = sub(&app, "weyl", "Weyl group computations");
  weyl->require_subcommand(1);
  {
    struct Opts {
      std::string type, word;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "element", "Evaluate a word in the reflection representation");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--word", o->word, "generator word, e.g. \"1 2 1\"")->required();
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      const WeylElement e = word_to_element(d, parse_group_word(o->word));
      json j = e;
      if (!d.affine()) j["canonical_word"] = canonical_word(d, e.matrix());
      outcome.set(j);
    });
  }
  {
    struct Opts {
      std::string type, a, b;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "equal", "Compare two group words exactly");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--a", o->a, "first word")->required();
    c->add_option("--b", o->b, "second word")->required();
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      outcome.set(json{{"equal", equal(word_to_element(d, parse_group_word(o->a)),
                                       word_to_element(d, parse_group_word(o->b)))}});
    });
  }
  {
    struct Opts {
      std::string type;
      std::size_t cap = 0;
      bool affine = false, list = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "enumerate", "List the whole group by shortest words");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--cap", o->cap, "enumeration cap (default 1000000 or WEYLBRAID_BUDGET)");
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->add_flag("--list", o->list, "include every element, not just the order");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      const std::vector<WeylElement> g =
          enumerate_group(d, resolve_cap(o->cap, 1000000));
      json j{{"order", g.size()}};
      if (o->list) j["elements"] = g;
      outcome.set(j);
    });
  }
  {
    auto type = std::make_shared<std::string>();
    CLI::App* c = sub(weyl, "roots", "Root system in simple-root coordinates");
    c->add_option("--type", *type, "finite type label")->required();
    c->callback([&outcome, type] {
      outcome.set(json(roots(load_diagram(*type, false))));
    });
  }
  {
    struct Opts {
      std::string type, named;
      std::vector<std::string> cycles;
      std::size_t cap = 0;
      bool list = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "fixed-subgroup", "Subgroup fixed by a diagram symmetry");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--auto", o->named, "named symmetry: z2, z3 or s3");
    c->add_option("--cycles", o->cycles, "generator in cycle notation");
    c->add_option("--cap", o->cap, "enumeration cap (default 1000000 or WEYLBRAID_BUDGET)");
    c->add_flag("--list", o->list, "include every fixed element");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      const std::vector<DiagramAutomorphism> gens =
          load_symmetry(d, o->named, o->cycles);
      const std::vector<WeylElement> fixed =
          fixed_subgroup(d, gens, resolve_cap(o->cap, 1000000));
      json j{{"order", fixed.size()},
             {"generators", fixed_subgroup_generators(d, gens)}};
      if (o->list) j["elements"] = fixed;
      outcome.set(j);
    });
  }
  {
    struct Opts {
      std::string type, nodes;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "longest", "Longest element, optionally of a parabolic subgroup");
    c->add_option("--type", o->type, "finite type label")->required();
    c->add_option("--nodes", o->nodes, "parabolic node set, e.g. \"1,2\"");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      outcome.set(o->nodes.empty()
                      ? json(longest_element(d))
                      : json(parabolic_longest_element(d, parse_node_list(o->nodes))));
    });
  }
  {
    struct Opts {
      std::string type;
      int node = 0;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "hyperplane", "Fixed hyperplane of a simple generator");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--node", o->node, "1-based node number")->required();
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->callback([&outcome, o] {
      outcome.set(json(fixed_hyperplane(load_diagram(o->type, o->affine), o->node)));
    });
  }
  {
    struct Opts {
      std::string type, point;
      std::size_t cap = 0;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "orbit", "Orbit of a rational point");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--point", o->point, "rational coordinates, e.g. \"1/2,0\"")->required();
    c->add_option("--cap", o->cap, "orbit size cap (default 1000000 or WEYLBRAID_BUDGET)");
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      const std::vector<RatVec> points =
          orbit(d, parse_rational_vector(o->point), resolve_cap(o->cap, 1000000));
      outcome.set(json{{"size", points.size()}, {"points", points}});
    });
  }
  {
    struct Opts {
      std::string type;
      std::vector<std::string> gens;
      std::size_t cap = 0;
      bool affine = false, list = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(weyl, "subgroup", "Close a set of words under multiplication");
    c->add_option("--type", o->type, "type label")->required();
    c->add_option("--gen", o->gens, "generator word (repeatable)")->required();
    c->add_option("--cap", o->cap, "closure cap (default 1000000 or WEYLBRAID_BUDGET)");
    c->add_flag("--affine", o->affine, "work in the affinization");
    c->add_flag("--list", o->list, "include every element");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, o->affine);
      std::vector<WeylElement> gens;
      for (const std::string& w : o->gens)
        gens.push_back(word_to_element(d, parse_group_word(w)));
      const std::vector<WeylElement> g =
          generated_subgroup(d, gens, resolve_cap(o->cap, 1000000));
      json j{{"order", g.size()}};
      if (o->list) j["elements"] = g;
      outcome.set(j);
    });
  }

  // ---- artin -------------------------------------------------------------
  CLI::App* artin = sub(&app, "artin", "Generalized braid group computations");
  artin->require_subcommand(1);
  {
    struct Opts {
      std::string type, word;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(artin, "normal-form", "Left-greedy normal form of a braid word");
    c->add_option("--type", o->type, "finite type label")->required();
    c->add_option("--word", o->word, "signed word, e.g. \"1 2 -1\"")->required();
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      const GarsideNormalForm nf = normal_form(d, parse_braid_word(o->word));
      json j = nf;
      j["word"] = normal_form_to_word(d, nf);
      outcome.set(j);
    });
  }
  {
    struct Opts {
      std::string type, a, b;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(artin, "equal", "Decide equality of two braid words");
    c->add_option("--type", o->type, "finite type label")->required();
    c->add_option("--a", o->a, "first word")->required();
    c->add_option("--b", o->b, "second word")->required();
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      outcome.set(json{{"equal", words_equal(d, parse_braid_word(o->a),
                                             parse_braid_word(o->b))}});
    });
  }
  {
    struct Opts {
      std::string type, word;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(artin, "project", "Image of a braid word downstairs");
    c->add_option("--type", o->type, "finite type label")->required();
    c->add_option("--word", o->word, "signed word")->required();
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      outcome.set(json(project_to_weyl(d, parse_braid_word(o->word))));
    });
  }
  {
    struct Opts {
      std::string type;
      bool affine = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(artin, "relations", "Check the defining relations pairwise");
    c->add_option("--type", o->type, "type label")->required();
    c->add_flag("--affine", o->affine, "check the affinization");
    c->callback([&outcome, o] {
      outcome.set(json(verify_braid_relations(load_diagram(o->type, o->affine))));
    });
  }
  {
    auto n = std::make_shared<int>(0);
    CLI::App* c = sub(artin, "michel", "Symmetric-subgroup generators over the even chain");
    c->add_option("--n", *n, "folded rank (generators live in the braid group of A_2n)")
        ->required();
    c->callback([&outcome, n] {
      outcome.set(json{{"generators", michel_generators(*n)}});
    });
  }
  {
    auto n = std::make_shared<int>(0);
    CLI::App* c = sub(artin, "folded-relations",
                      "Relations of the folded type among those generators");
    c->add_option("--n", *n, "folded rank, at most 4")->required();
    c->callback([&outcome, n] {
      outcome.set(json(verify_folded_braid_relations(*n)));
    });
  }

  // ---- lattice -----------------------------------------------------------
  CLI::App* lattice = sub(&app, "lattice", "Integral lattice computations");
  lattice->require_subcommand(1);
  {
    struct Opts {
      std::string gram, cls, vec;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "reflect", "Reflect a vector in a (-2)-class");
    c->add_option("--gram", o->gram, "Gram matrix as JSON rows")->required();
    c->add_option("--class", o->cls, "(-2)-class, e.g. \"1,-1\"")->required();
    c->add_option("--vector", o->vec, "vector to reflect")->required();
    c->callback([&outcome, o] {
      const IntegralLattice L = make_lattice(parse_matrix_text(o->gram));
      outcome.set(json{{"image", reflect_in_class(L, parse_int_vector(o->cls),
                                                  parse_int_vector(o->vec))}});
    });
  }
  {
    struct Opts {
      std::string gram, cls;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "reflection-matrix", "Matrix of a (-2)-class reflection");
    c->add_option("--gram", o->gram, "Gram matrix as JSON rows")->required();
    c->add_option("--class", o->cls, "(-2)-class")->required();
    c->callback([&outcome, o] {
      const IntegralLattice L = make_lattice(parse_matrix_text(o->gram));
      outcome.set(json{{"matrix",
                        reflection_matrix_in_class(L, parse_int_vector(o->cls))}});
    });
  }
  {
    auto type = std::make_shared<std::string>();
    CLI::App* c = sub(lattice, "config", "Tautological configuration of a simply-laced type");
    c->add_option("--type", *type, "simply-laced finite type label")->required();
    c->callback([&outcome, type] {
      outcome.set(json(identity_configuration(load_diagram(*type, false))));
    });
  }
  {
    struct Opts {
      std::string type, gram;
      long long box = 10;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "embed", "Search for a configuration inside a lattice");
    c->add_option("--type", o->type, "simply-laced finite type label")->required();
    c->add_option("--gram", o->gram, "ambient Gram matrix as JSON rows")->required();
    c->add_option("--box", o->box, "coordinate search box, default 10");
    c->callback([&outcome, o] {
      outcome.set(json(embed_ade(load_diagram(o->type, false),
                                 make_lattice(parse_matrix_text(o->gram)), o->box)));
    });
  }
  {
    struct Opts {
      std::string type, gram, word;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "orbit-action", "Ambient matrix of a group word");
    c->add_option("--type", o->type, "simply-laced finite type label")->required();
    c->add_option("--word", o->word, "generator word")->required();
    c->add_option("--gram", o->gram, "embed into this Gram matrix first");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      const AdeConfiguration conf =
          o->gram.empty() ? identity_configuration(d)
                          : embed_ade(d, make_lattice(parse_matrix_text(o->gram)));
      outcome.set(json{{"matrix",
                        weyl_orbit_action(conf, parse_group_word(o->word))}});
    });
  }
  {
    struct Opts {
      std::string type, gram, cls;
      std::size_t cap = 0;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "class-orbit", "Orbit of a class under all reflections");
    c->add_option("--type", o->type, "simply-laced finite type label")->required();
    c->add_option("--class", o->cls, "starting class")->required();
    c->add_option("--gram", o->gram, "embed into this Gram matrix first");
    c->add_option("--cap", o->cap, "orbit cap (default 100000 or WEYLBRAID_BUDGET)");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      const AdeConfiguration conf =
          o->gram.empty() ? identity_configuration(d)
                          : embed_ade(d, make_lattice(parse_matrix_text(o->gram)));
      const std::vector<IntVec> classes =
          class_orbit(conf, parse_int_vector(o->cls), resolve_cap(o->cap, 100000));
      outcome.set(json{{"size", classes.size()}, {"classes", classes}});
    });
  }
  {
    struct Opts {
      std::string gram, cls, even, odd;
      int odd_rank = 0;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "twist", "Spherical twist on split cohomology");
    c->add_option("--gram", o->gram, "even-part Gram matrix as JSON rows")->required();
    c->add_option("--odd-rank", o->odd_rank, "rank of the inert odd part")->required();
    c->add_option("--class", o->cls, "even spherical class with self-pairing -2")->required();
    c->add_option("--even", o->even, "even part of the vector to twist")->required();
    c->add_option("--odd", o->odd, "odd part of the vector to twist")->required();
    c->callback([&outcome, o] {
      const GradedLattice h{make_lattice(parse_matrix_text(o->gram)), o->odd_rank};
      const GradedClass v{parse_int_vector(o->cls), IntVec(o->odd_rank, 0)};
      const GradedClass x{parse_int_vector(o->even), parse_int_vector(o->odd)};
      json j{{"image", spherical_twist_cohomology(h, v, x)}};
      j["even_matrix"] = spherical_twist_even_matrix(h, v);
      outcome.set(j);
    });
  }
  {
    struct Opts {
      std::string gram, psi;
      std::vector<std::string> basis;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(lattice, "induced-map", "Restrict an isometry to a rational subspace");
    c->add_option("--gram", o->gram, "Gram matrix as JSON rows")->required();
    c->add_option("--psi", o->psi, "isometry matrix as JSON rows")->required();
    c->add_option("--basis", o->basis, "subspace basis vector (repeatable)")->required();
    c->callback([&outcome, o] {
      const IntegralLattice L = make_lattice(parse_matrix_text(o->gram));
      std::vector<IntVec> basis;
      for (const std::string& b : o->basis) basis.push_back(parse_int_vector(b));
      outcome.set(json(induced_base_map(L, parse_matrix_text(o->psi), basis)));
    });
  }

  // ---- bfield ------------------------------------------------------------
  CLI::App* bfield = sub(&app, "bfield", "Torsion background fields");
  bfield->require_subcommand(1);
  {
    struct Opts {
      std::string gram, cls, field;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(bfield, "reflect", "Reflect a field in a (-2)-class, modulo 1");
    c->add_option("--gram", o->gram, "Gram matrix as JSON rows")->required();
    c->add_option("--class", o->cls, "(-2)-class")->required();
    c->add_option("--field", o->field, "rational field, e.g. \"1/2,0\"")->required();
    c->callback([&outcome, o] {
      const IntegralLattice L = make_lattice(parse_matrix_text(o->gram));
      outcome.set(json{{"field", bfield_reflect(L, parse_int_vector(o->cls),
                                                parse_rational_vector(o->field))}});
    });
  }
  {
    struct Opts {
      std::string type, gram, field;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(bfield, "enhanced", "Test a field against a whole configuration");
    c->add_option("--type", o->type, "simply-laced finite type label")->required();
    c->add_option("--field", o->field, "rational field")->required();
    c->add_option("--gram", o->gram, "embed into this Gram matrix first");
    c->callback([&outcome, o] {
      const DynkinDiagram d = load_diagram(o->type, false);
      const AdeConfiguration conf =
          o->gram.empty() ? identity_configuration(d)
                          : embed_ade(d, make_lattice(parse_matrix_text(o->gram)));
      outcome.set(json(enhanced_symmetry_bfield(conf, parse_rational_vector(o->field))));
    });
  }

  // ---- defmodel ----------------------------------------------------------
  CLI::App* defmodel = sub(&app, "defmodel", "Deformation models over a genus-g base");
  defmodel->require_subcommand(1);
  struct ModelOpts {
    std::string type;
    int genus = -1;
    bool surface = false;

    DeformationModel build() const {
      const DynkinDiagram d = build_diagram(parse_type_label(type));
      if (surface) {
        if (genus >= 0)
          throw CLI::ValidationError("defmodel: --surface and --genus are exclusive");
        return build_surface_model(d);
      }
      if (genus < 0)
        throw CLI::ValidationError("defmodel: give --genus or --surface");
      return build_model(d, genus);
    }
  };
  const auto add_model_options = [](CLI::App* c, const std::shared_ptr<ModelOpts>& o) {
    c->add_option("--type", o->type, "finite type label")->required();
    c->add_option("--genus", o->genus, "base curve genus (threefold model)");
    c->add_flag("--surface", o->surface, "surface model instead of a threefold");
  };
  {
    auto o = std::make_shared<ModelOpts>();
    CLI::App* c = sub(defmodel, "build", "Assemble a model and report its data");
    add_model_options(c, o);
    c->callback([&outcome, o] { outcome.set(json(o->build())); });
  }
  {
    struct Opts : ModelOpts {
      std::string point;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(defmodel, "census", "Exceptional locus over a base point");
    add_model_options(c, o);
    c->add_option("--point", o->point, "rational base point")->required();
    c->callback([&outcome, o] {
      outcome.set(json(census(o->build(), parse_rational_vector(o->point))));
    });
  }
  {
    struct Opts : ModelOpts {
      std::string point, word;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(defmodel, "orbit-relation", "Compare the fibres over s and w(s)");
    add_model_options(c, o);
    c->add_option("--point", o->point, "rational base point")->required();
    c->add_option("--word", o->word, "group word for w")->required();
    c->callback([&outcome, o] {
      const DeformationModel m = o->build();
      const WeylElement w = word_to_element(m.diagram, parse_group_word(o->word));
      outcome.set(json(orbit_relation(m, w, parse_rational_vector(o->point))));
    });
  }
  {
    struct Opts : ModelOpts {
      int node = 0;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* c = sub(defmodel, "wall-codim", "Wall codimension bookkeeping at a node");
    add_model_options(c, o);
    c->add_option("--node", o->node, "1-based node number")->required();
    c->callback([&outcome, o] {
      outcome.set(json(wall_codimension(o->build(), o->node)));
    });
  }

  // ---- verify ------------------------------------------------------------
  {
    auto suite = std::make_shared<std::string>();
    CLI::App* c = sub(&app, "verify", "Run a named invariant suite");
    std::string names;
    for (const std::string& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    c->add_option("suite", *suite, "one of: " + names)->required();
    c->callback([&outcome, suite] {
      const SuiteReport rep = run_suite(*suite);
      outcome.set(json(rep));
      if (!rep.all_passed) outcome.exit_code = 2;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (human)
      std::cout << app.help("", CLI::AppFormatMode::All);
    else
      std::cout << help_document(app).dump(2) << '\n';
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    if (human)
      std::cout << app.help("", CLI::AppFormatMode::All);
    else
      std::cout << help_document(app).dump(2) << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", {{"code", "usage_error"}, {"message", e.what()}}}}.dump(2)
              << '\n';
    return 1;
  } catch (const Error& e) {
    std::cout << error_to_json(e).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"code", "internal_error"}, {"message", e.what()}}}}.dump(2)
              << '\n';
    return 2;
  }

  if (!outcome.produced) {
    // no verb: behave like --help so bare invocations stay useful
    if (human)
      std::cout << app.help("", CLI::AppFormatMode::All);
    else
      std::cout << help_document(app).dump(2) << '\n';
    return 0;
  }
  if (human)
    render_human(std::cout, outcome.out, 0);
  else
    std::cout << outcome.out.dump(2) << '\n';
  return outcome.exit_code;
}
