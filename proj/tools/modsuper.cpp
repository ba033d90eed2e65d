// modsuper: command-line front end for the contragredient superalgebra engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modsuper/algebra.hpp"
#include "modsuper/catalog.hpp"
#include "modsuper/cartan.hpp"
#include "modsuper/errors.hpp"
#include "modsuper/reflect.hpp"
#include "modsuper/relations.hpp"

using namespace modsuper;

namespace {

struct Options {
  unsigned p = 3;
  bool p_given = false;
  std::string matrix_file;
  std::string algebra;
  int max_height = 64;
  std::string format = "text";
  bool keep_redundant = false;
  std::string out;
  std::string relations_file;
  std::size_t root = 0;
  bool presented = false;
  bool cube_axiom = false;
  std::string catalog_name;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CartanDatum input_datum(const Options& o) {
  if (o.matrix_file.empty() == o.algebra.empty()) throw UsageError("give exactly one of --matrix and --algebra");
  CartanDatum d = o.algebra.empty() ? parse_matrix_text(read_file(o.matrix_file))
                                    : lookup(o.algebra).matrix->working;
  if (o.p_given && d.field().characteristic() != o.p) d = over_field(d, FieldSpec(o.p));
  return d;
}

RelationSet input_relations(const Options& o, const CartanDatum& d) {
  RelationSet s;
  if (!o.relations_file.empty()) {
    for (auto& e : parse_relation_file(read_file(o.relations_file))) {
      e.weight(d.n());
      s.relations.push_back({std::move(e), Provenance::Listed});
    }
  } else if (!o.algebra.empty()) {
    const auto slot = lookup(o.algebra);
    s = slot.entry->defining_relations(slot.matrix->index);
  }
  return s;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format " + o.format + " is not available for this command");
}

std::string vec_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string vec_text(const RootVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).str();
    s += '\n';
  }
  return s;
}

template <class F>
GradedAlgebra<F> algebra_for(const Options& o, const CartanDatum& d, const F& f) {
  if (!o.presented) {
    BuildOptions bo;
    bo.max_height = o.max_height;
    return build(d, f, bo);
  }
  PresentedOptions po;
  po.max_height = o.max_height;
  po.cube_axiom = o.cube_axiom;
  auto rels = serre_relations(d).exprs();
  for (const auto& r : input_relations(o, d).relations) rels.push_back(r.expr);
  return build_from_relations(d, f, rels, po);
}

std::string cmd_catalog(const Options& o, const std::string& action) {
  if (action == "list") {
    check_format(o, {"text", "json"});
    if (o.format == "text") return catalog_list_text();
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : load())
      j.push_back({{"name", e.name},
                   {"n", e.n},
                   {"matrices", e.matrices.size()},
                   {"headline_sdim", {e.headline_sdim.first, e.headline_sdim.second}},
                   {"headline_means", headline_name(e.headline_means)},
                   {"degenerate", e.degenerate},
                   {"errata", e.errata.size()}});
    return j.dump(2) + "\n";
  }
  if (o.catalog_name.empty()) throw UsageError("catalog " + action + " needs an algebra name");
  if (action == "show") {
    check_format(o, {"text", "json"});
    const auto& e = find(o.catalog_name);
    return o.format == "json" ? catalog_show_json(e) + "\n" : catalog_show_text(e);
  }
  // export: a whole corpus file, or one matrix in the matrix file format
  if (o.catalog_name.find('/') != std::string::npos) return format_matrix_text(lookup(o.catalog_name).matrix->working);
  return std::string(corpus_text(o.catalog_name));
}

std::string cmd_build(const Options& o) {
  check_format(o, {"text", "json"});
  const CartanDatum d = input_datum(o);
  return with_field(d.field(), [&](auto f) {
    auto g = algebra_for(o, d, f);
    const AlgebraReport r = report(g);
    return o.format == "json" ? report_json(r) + "\n" : report_text(r);
  });
}

std::string cmd_maxroot(const Options& o) {
  check_format(o, {"text", "json"});
  const CartanDatum d = input_datum(o);
  return with_field(d.field(), [&](auto f) {
    auto g = algebra_for(o, d, f);
    const MaximalRoot m = maximal_root(g);
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["coeffs"] = m.coeffs;
      std::vector<std::string> w;
      for (const auto& x : m.eigenvalues) w.push_back(x.str());
      j["weight"] = w;
      j["expression"] = m.expression;
      j["multiplicity"] = m.multiplicity;
      return j.dump(2) + "\n";
    }
    return "coeffs     " + vec_text(m.coeffs) + "\nweight     " + vec_text(m.eigenvalues) + "\nexpression " +
           m.expression + "\n";
  });
}

std::string cmd_reflect(const Options& o) {
  check_format(o, {"text", "json"});
  const CartanDatum d = input_datum(o);
  if (o.root < 1 || o.root > d.n()) throw UsageError("--root must be between 1 and " + std::to_string(d.n()));
  const ReflectionStep s = odd_reflect(d, o.root - 1);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["root"] = o.root;
    j["parity"] = s.target.parities();
    j["matrix"] = signed_lift(s.target);
    j["new_simple_roots"] = s.new_simple_roots;
    return j.dump(2) + "\n";
  }
  std::string out = format_matrix_text(s.target) + "# new simple roots\n";
  for (std::size_t j = 0; j < s.new_simple_roots.size(); ++j)
    out += "# " + std::to_string(j + 1) + ": " + vec_text(s.new_simple_roots[j]) + "\n";
  return out;
}

std::string cmd_enumerate(const Options& o) {
  check_format(o, {"text", "json", "dot"});
  EnumerateOptions eo;
  eo.keep_redundant = o.keep_redundant;
  const ReflectionTable t = enumerate_classes(input_datum(o), eo);
  if (o.format == "json") return reflection_table_json(t) + "\n";
  if (o.format == "dot") return reflection_graph_dot(t, o.algebra.empty() ? "reflections" : o.algebra);
  return reflection_table_text(t);
}

std::string cmd_verify(const Options& o, bool& all_ok) {
  check_format(o, {"text", "json"});
  const CartanDatum d = input_datum(o);
  const RelationSet s = input_relations(o, d);
  return with_field(d.field(), [&](auto f) {
    BuildOptions bo;
    bo.max_height = o.max_height;
    auto g = build(d, f, bo);
    const auto checks = verify_set(g, s);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    std::string text;
    all_ok = true;
    for (const auto& c : checks) {
      all_ok = all_ok && c.vanishes;
      text += std::string(c.vanishes ? "ok    " : "FAIL  ") + std::string(provenance_name(c.relation.provenance)) +
              "  " + to_string(c.relation.expr) + "\n";
      j.push_back({{"relation", to_string(c.relation.expr)},
                   {"provenance", provenance_name(c.relation.provenance)},
                   {"vanishes", c.vanishes},
                   {"nonzero_coords", c.nonzero_coords}});
    }
    return o.format == "json" ? j.dump(2) + "\n" : text;
  });
}

std::string cmd_discover(const Options& o) {
  check_format(o, {"text", "json"});
  const CartanDatum d = input_datum(o);
  PresentedOptions po;
  po.max_height = o.max_height;
  po.cube_axiom = o.cube_axiom;
  const RelationSet s = with_field(d.field(), [&](auto f) { return discover_relations(d, f, po); });
  if (o.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : s.relations)
      j.push_back({{"relation", to_string(r.expr)}, {"provenance", provenance_name(r.provenance)}});
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : s.relations) out += std::string(provenance_name(r.provenance)) + "  " + to_string(r.expr) + "\n";
  return out;
}

std::string cmd_invert(const Options& o) {
  check_format(o, {"text", "json"});
  const Matrix inv = invert(input_datum(o));
  if (o.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < inv.rows(); ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < inv.cols(); ++c) row.push_back(inv(r, c).str());
      j.push_back(row);
    }
    return j.dump() + "\n";
  }
  return matrix_text(inv);
}

std::string cmd_diagram(const Options& o) {
  check_format(o, {"text", "dot"});
  const Diagram g = diagram(input_datum(o));
  return o.format == "dot" ? diagram_dot(g, o.algebra.empty() ? "diagram" : o.algebra) : diagram_text(g);
}

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidField:
    case ErrorKind::MalformedRow:
    case ErrorKind::MalformedDatum:
    case ErrorKind::SyntaxError:
    case ErrorKind::BadGenerator:
    case ErrorKind::InhomogeneousSum:
    case ErrorKind::NotFound:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contragredient Lie superalgebras over GF(p) and Q"};
  app.require_subcommand(1);
  Options o;

  auto shared = [&](CLI::App* c, bool algebra_input) {
    c->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    c->add_option("--out", o.out, "write output to a file");
    if (!algebra_input) return;
    auto* p = c->add_option("--p", o.p, "characteristic, 0 for the rationals");
    p->each([&](const std::string&) { o.p_given = true; });
    auto* m = c->add_option("--matrix", o.matrix_file, "matrix file");
    auto* a = c->add_option("--algebra", o.algebra, "catalog slot NAME/INDEX, e.g. g(2,3)/1");
    m->excludes(a);
    a->excludes(m);
    c->add_option("--max-height", o.max_height, "height bound for constructions")->check(CLI::PositiveNumber);
    c->add_flag("--keep-redundant", o.keep_redundant, "enumerate: keep index-permuted copies");
  };

  std::string catalog_action;
  auto* cat = app.add_subcommand("catalog", "list, show or export the embedded corpus");
  cat->add_option("action", catalog_action, "list | show | export")
      ->required()
      ->check(CLI::IsMember({"list", "show", "export"}));
  cat->add_option("name", o.catalog_name, "algebra name, or NAME/INDEX for export");
  shared(cat, false);

  auto* b = app.add_subcommand("build", "construct the algebra and report its dimensions");
  shared(b, true);
  b->add_flag("--presented", o.presented, "build from Serre relations plus --relations instead of the radical");
  b->add_option("--relations", o.relations_file, "relation file");
  b->add_flag("--cube-axiom", o.cube_axiom, "impose [u, [u, u]] = 0 on odd u in presented builds");

  auto* r = app.add_subcommand("reflect", "odd reflection in one grey root");
  shared(r, true);
  r->add_option("--root", o.root, "1-based root index")->required();

  auto* e = app.add_subcommand("enumerate", "all classes reachable by odd reflections");
  shared(e, true);

  auto* v = app.add_subcommand("verify", "check that relations vanish in the algebra");
  shared(v, true);
  v->add_option("--relations", o.relations_file, "relation file");

  auto* dsc = app.add_subcommand("discover", "find defining relations beyond Serre's");
  shared(dsc, true);
  dsc->add_flag("--cube-axiom", o.cube_axiom, "impose [u, [u, u]] = 0 on odd u");

  auto* inv = app.add_subcommand("invert", "inverse of the Cartan matrix");
  shared(inv, true);
  auto* dia = app.add_subcommand("diagram", "Dynkin-Kac diagram");
  shared(dia, true);
  auto* mr = app.add_subcommand("maxroot", "maximal root of the algebra");
  shared(mr, true);
  mr->add_flag("--presented", o.presented, "use the presented build");
  mr->add_option("--relations", o.relations_file, "relation file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  int status = 0;
  std::string output;
  try {
    if (cat->parsed())
      output = cmd_catalog(o, catalog_action);
    else if (b->parsed())
      output = cmd_build(o);
    else if (r->parsed())
      output = cmd_reflect(o);
    else if (e->parsed())
      output = cmd_enumerate(o);
    else if (v->parsed()) {
      bool ok = true;
      output = cmd_verify(o, ok);
      if (!ok) status = 1;
    } else if (dsc->parsed())
      output = cmd_discover(o);
    else if (inv->parsed())
      output = cmd_invert(o);
    else if (dia->parsed())
      output = cmd_diagram(o);
    else if (mr->parsed())
      output = cmd_maxroot(o);
  } catch (const UsageError& err) {
    std::cerr << "modsuper: " << err.what() << "\n";
    return 2;
  } catch (const Error& err) {
    std::cerr << "modsuper: " << err.what() << "\n";
    return usage_kind(err.kind()) ? 2 : 1;
  }

  if (o.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "modsuper: cannot write " << o.out << "\n";
      return 2;
    }
    f << output;
  }
  return status;
}
