#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkm/chern.hpp"
#include "gkm/classify.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"
#include "gkm/errors.hpp"
#include "gkm/io.hpp"
#include "gkm/octonion.hpp"
#include "gkm/symmetry.hpp"
#include "json.hpp"

namespace gkm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;
};

std::string read_input(Context& ctx, const std::string& path) {
  if (path == "-") {
    if (ctx.stdin_used) throw InputError("standard input can be read only once");
    ctx.stdin_used = true;
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GkmGraph load_graph(Context& ctx, const std::string& path) { return parse_graph_json(read_input(ctx, path)); }

std::string q(const mpq_class& x) { return x.get_str(); }
std::string z(std::size_t x) { return std::to_string(x); }

void emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

void emit_graph(Context& ctx, const GkmGraph& g) { ctx.out << graph_to_json(g) << '\n'; }

Json validation_json(const ValidationReport& r) {
  Json axioms = Json::array();
  auto one = [](const AxiomCheck& a) {
    Json o;
    o["name"] = a.name;
    o["pass"] = a.pass;
    o["witnesses"] = a.witnesses;
    return o;
  };
  for (const auto& a : r.axioms) axioms.push_back(one(a));
  Json j;
  j["valid"] = r.valid();
  if (r.effective) j["effective"] = r.effective->pass;
  j["axioms"] = axioms;
  if (r.effective) j["effectiveness"] = one(*r.effective);
  return j;
}

// Rejects graphs that fail the axioms, naming the first witness.
void require_valid(const GkmGraph& g, bool effective = false) {
  ValidationReport r = validate(g, effective);
  if (r.valid_and_effective()) return;
  for (const auto& a : r.axioms)
    if (!a.pass)
      throw DomainError("graph fails axiom " + a.name + (a.witnesses.empty() ? "" : ": " + a.witnesses.front()));
  throw DomainError("graph is not effective");
}

int cmd_validate(Context& ctx, const std::string& file, bool effective) {
  GkmGraph g = load_graph(ctx, file);
  ValidationReport r = validate(g, effective);
  Json j;
  j["schema"] = "gkm.validate/1";
  Json body = validation_json(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  emit(ctx, j);
  bool ok = r.valid_and_effective();
  ctx.err << (ok ? "valid" : "invalid") << (effective ? (ok ? " and effective" : " or not effective") : "")
          << " GKM graph with " << g.num_vertices() << " vertices\n";
  return ok ? 0 : 1;
}

int cmd_cohomology(Context& ctx, const std::string& file, unsigned max_degree, const std::string& pfile) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g);
  std::optional<Presentation> pres;
  if (!pfile.empty()) pres = parse_presentation_json(g, read_input(ctx, pfile));
  PoincareResult pr = ordinary_poincare(g, max_degree);
  Json j;
  j["schema"] = "gkm.cohomology/1";
  j["max_degree"] = z(max_degree);
  Json ranks = Json::object();
  for (std::size_t i = 0; i < pr.equivariant_ranks.size(); ++i) ranks[z(2 * i)] = z(pr.equivariant_ranks[i]);
  j["equivariant_ranks"] = ranks;
  Json poincare = Json::array();
  for (const auto& c : pr.coefficients) poincare.push_back(c.get_str());
  j["poincare"] = poincare;
  j["free"] = pr.free;
  bool ok = true;
  if (pres) {
    PresentationReport r = verify_presentation(g, *pres);
    Json pj;
    pj["pass"] = r.pass();
    pj["invalid_generators"] = r.invalid_generators;
    Json rels = Json::array();
    for (const auto& [rel, zero] : r.relations) rels.push_back(Json{{"relation", rel}, {"vanishes", zero}});
    pj["relations"] = rels;
    Json degs = Json::array();
    for (const auto& d : r.degrees) {
      Json dj;
      dj["degree"] = z(d.degree);
      dj["expected_rank"] = z(d.expected_rank);
      dj["spanned_rank"] = z(d.spanned_rank);
      dj["integral"] = d.integral ? Json(*d.integral) : Json(nullptr);
      degs.push_back(dj);
    }
    pj["degrees"] = degs;
    j["presentation"] = pj;
    ok = r.pass();
  }
  emit(ctx, j);
  ctx.err << "Poincare series up to degree " << max_degree << ":";
  for (const auto& c : pr.coefficients) ctx.err << ' ' << c;
  ctx.err << '\n';
  if (pres) ctx.err << "presentation " << (ok ? "verified" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

int cmd_chern(Context& ctx, const std::string& file) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g);
  ChernNumbers c = chern_numbers(g);
  Json j;
  j["schema"] = "gkm.chern/1";
  j["c1^3"] = q(c.c1_cubed);
  j["c1c2"] = q(c.c1c2);
  j["c3"] = q(c.c3);
  j["todd"] = q(c.todd());
  emit(ctx, j);
  ctx.err << "c1^3 = " << c.c1_cubed << ", c1c2 = " << c.c1c2 << ", c3 = " << c.c3 << ", todd = " << c.todd()
          << '\n';
  return 0;
}

int cmd_integrate(Context& ctx, const std::string& file, const std::string& expr,
                  const std::vector<std::string>& named_files) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g);
  std::map<std::string, EquivariantClass> named;
  for (std::size_t i = 1; i <= 3; ++i) named["c" + std::to_string(i)] = equivariant_chern(g, i);
  named["p1"] = pontryagin(g);
  for (const auto& entry : named_files) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--named expects NAME=FILE, got " + entry);
    std::string name = entry.substr(0, eq);
    EquivariantClass c = parse_class_json(g, read_input(ctx, entry.substr(eq + 1)));
    if (auto bad = congruence_failures(g, c); !bad.empty())
      throw DomainError("class " + name + " fails the congruence along edge " + bad.front());
    named[name] = c;
  }
  EquivariantClass c = evaluate_class_expression(g, expr, named, {});
  mpq_class value = integrate(g, c);
  Json j;
  j["schema"] = "gkm.integrate/1";
  j["class"] = expr;
  j["value"] = q(value);
  emit(ctx, j);
  ctx.err << "integral of " << expr << " = " << value << '\n';
  return 0;
}

Json element_json(const GkmGraph& g, const GkmAutomorphism& a) {
  Json o;
  o["vertices"] = cycle_notation(g, a.vertex_map);
  o["psi"] = a.psi.flat_longs();
  return o;
}

int cmd_aut(Context& ctx, const std::string& file, bool star) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g, true);
  AutomorphismGroup grp = gkm_automorphisms(g);
  Json j;
  j["schema"] = "gkm.aut/1";
  j["order"] = z(grp.order());
  Json gens = Json::array();
  for (std::size_t i : grp.generators) gens.push_back(element_json(g, grp.elements[i]));
  j["generators"] = gens;
  Json elems = Json::array();
  for (const auto& a : grp.elements) elems.push_back(element_json(g, a));
  j["elements"] = elems;
  std::size_t star_order = 0;
  if (star) {
    auto sub = aut_star(g, grp);
    star_order = sub.size();
    Json s;
    s["order"] = z(star_order);
    Json se = Json::array();
    for (std::size_t i : sub) se.push_back(element_json(g, grp.elements[i]));
    s["elements"] = se;
    j["aut_star"] = s;
  }
  emit(ctx, j);
  ctx.err << "|Aut| = " << grp.order();
  if (star) ctx.err << ", |Aut*| = " << star_order;
  ctx.err << '\n';
  return 0;
}

int cmd_blowup_vertex(Context& ctx, const std::string& file, const std::string& vertex) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g);
  GkmGraph h = blowup_vertex(g, vertex);
  emit_graph(ctx, h);
  ctx.err << "blew up vertex " << vertex << ": " << h.num_vertices() << " vertices\n";
  return 0;
}

int cmd_blowup_edge(Context& ctx, const std::string& file, const std::string& edge,
                    std::optional<std::size_t> connection) {
  GkmGraph g = load_graph(ctx, file);
  require_valid(g);
  GkmGraph h = blowup_edge(g, edge, connection);
  emit_graph(ctx, h);
  ctx.err << "blew up edge " << edge << ": " << h.num_vertices() << " vertices\n";
  return 0;
}

int cmd_glue(Context& ctx, const std::string& fa, const std::string& fb) {
  GkmGraph a = load_graph(ctx, fa);
  GkmGraph b = load_graph(ctx, fb);
  require_valid(a);
  require_valid(b);
  GlueResult r = glue_s6(a, b);
  emit_graph(ctx, r.graph);
  ctx.err << "glued along w = " << (r.a + r.b).str() << " with k = " << r.k << '\n';
  return 0;
}

int cmd_catalog(Context& ctx, const std::string& type, const std::string& params) {
  CatalogType t = parse_catalog_type(type);
  Json p;
  try {
    p = Json::parse(params);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed --params: ") + e.what());
  }
  if (!p.is_object()) throw InputError("--params must be a JSON object");
  CatalogParams cp;
  auto weight = [&](const std::string& k) {
    const Json& w = p[k];
    if (!w.is_array()) throw InputError("parameter " + k + " must be an integer array");
    std::vector<mpz_class> xs;
    for (const auto& x : w) {
      if (!x.is_number_integer()) throw InputError("parameter " + k + " must be an integer array");
      xs.emplace_back(std::to_string(x.get<long>()));
    }
    return Weight(std::move(xs));
  };
  bool has_a = false, has_b = false;
  for (auto& [k, v] : p.items()) {
    if (k == "a")
      cp.a = weight(k), has_a = true;
    else if (k == "b")
      cp.b = weight(k), has_b = true;
    else if (k == "c")
      cp.c = weight(k);
    else if (k == "k") {
      if (!v.is_number_integer()) throw InputError("parameter k must be an integer");
      cp.k = v.get<long>();
    } else
      throw InputError("unknown parameter \"" + k + "\"");
  }
  if (!has_a || !has_b) throw InputError("parameters a and b are required");
  if (cp.a.rank() != cp.b.rank() || (cp.c && cp.c->rank() != cp.a.rank()))
    throw InputError("parameters have different ranks");
  GkmGraph g = catalog(t, cp);
  emit_graph(ctx, g);
  ctx.err << catalog_name(t) << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  return 0;
}

WeightData load_weight_data(Context& ctx, const std::string& file) {
  std::string text = read_input(ctx, file);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("case")) return parse_weight_data_json(text);
  for (auto& [k, v] : j.items())
    if (k != "case" && k != "params") throw InputError("case document: unknown key \"" + k + "\"");
  if (!j["case"].is_string()) throw InputError("case must be a string");
  WeightCase c = parse_weight_case(j["case"].get<std::string>());
  CaseParams cp;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InputError("params must be an object");
    for (auto& [k, v] : j["params"].items()) {
      if (v.is_number_integer()) {
        cp.integers[k] = mpz_class(std::to_string(v.get<long>()));
      } else if (v.is_array()) {
        std::vector<mpz_class> xs;
        for (const auto& x : v) {
          if (!x.is_number_integer()) throw InputError("parameter " + k + " must be an integer array");
          xs.emplace_back(std::to_string(x.get<long>()));
        }
        cp.weights[k] = Weight(std::move(xs));
      } else {
        throw InputError("parameter " + k + " must be an integer or an integer array");
      }
    }
  }
  return case_weights(c, cp);
}

int cmd_classify(Context& ctx, const std::string& file, bool dedup_gl) {
  WeightData wd = load_weight_data(ctx, file);
  std::vector<GkmGraph> graphs = enumerate_graphs(wd, EnumerateOptions{dedup_gl});
  Json j;
  j["schema"] = "gkm.classify/1";
  j["count"] = z(graphs.size());
  j["dedup"] = dedup_gl ? "GL(n,Z)" : "lattice-fixed";
  Json arr = Json::array();
  for (const auto& g : graphs) arr.push_back(Json::parse(graph_to_json(g)));
  j["graphs"] = arr;
  emit(ctx, j);
  ctx.err << graphs.size() << " isomorphism class(es) of GKM graphs\n";
  return 0;
}

int cmd_oct_check(Context& ctx, std::uint64_t seed, std::size_t samples) {
  auto checks = octonion_checks(seed, samples);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  Json j;
  j["schema"] = "gkm.oct/1";
  j["pass"] = ok;
  j["seed"] = std::to_string(seed);
  j["samples"] = z(samples);
  j["checks"] = arr;
  emit(ctx, j);
  for (const auto& c : checks) ctx.err << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
  return ok ? 0 : 1;
}

int fail(Context& ctx, int code, const std::string& message) {
  Json j;
  j["schema"] = "gkm.error/1";
  j["exit_code"] = std::to_string(code);
  j["error"] = message;
  emit(ctx, j);
  ctx.err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"GKM graph toolkit", "gkm"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string file, file_b, expr, vertex, edge, pfile, type, params;
  unsigned max_degree = 0;
  bool effective = false, star = false, dedup_gl = false;
  std::vector<std::string> named;
  std::optional<std::size_t> connection;
  std::uint64_t seed = 1;
  std::size_t samples = 100;

  auto* validate_cmd = app.add_subcommand("validate", "Check the GKM axioms");
  validate_cmd->add_option("FILE", file, "graph file or -")->required();
  validate_cmd->add_flag("--effective", effective, "also check that the weights generate the lattice");

  auto* coh = app.add_subcommand("cohomology", "Equivariant ranks and ordinary Poincare series");
  coh->add_option("FILE", file)->required();
  coh->add_option("--max-degree", max_degree, "largest topological degree")->required();
  coh->add_option("--presentation", pfile, "presentation file to verify");

  auto* chern_cmd = app.add_subcommand("chern", "Chern numbers and Todd genus");
  chern_cmd->add_option("FILE", file)->required();

  auto* integ = app.add_subcommand("integrate", "Integrate a class by localization");
  integ->add_option("FILE", file)->required();
  integ->add_option("--class", expr, "expression in c1, c2, c3, p1, t1..tn and named classes")->required();
  integ->add_option("--named", named, "NAME=FILE class table");

  auto* aut = app.add_subcommand("aut", "GKM graph automorphism group");
  aut->add_option("FILE", file)->required();
  aut->add_flag("--star", star, "also compute the subgroup acting trivially on cohomology");

  auto* bv = app.add_subcommand("blowup-vertex", "Blow up a fixed point");
  bv->add_option("FILE", file)->required();
  bv->add_option("--vertex", vertex)->required();

  auto* be = app.add_subcommand("blowup-edge", "Blow up an invariant sphere");
  be->add_option("FILE", file)->required();
  be->add_option("--edge", edge)->required();
  be->add_option("--connection", connection, "index into the connections along the edge");

  auto* glue = app.add_subcommand("glue", "Glue two S6 graphs into a type S graph");
  glue->add_option("FILE_A", file)->required();
  glue->add_option("FILE_B", file_b)->required();

  auto* cat = app.add_subcommand("catalog", "Emit a catalog graph");
  cat->add_option("TYPE", type, "P1, P2, P3, Q1, Q2, S or S6")->required();
  cat->add_option("--params", params, "JSON object with a, b and optionally c, k")->required();

  auto* cls = app.add_subcommand("classify", "Enumerate GKM graphs on given weight data");
  cls->add_option("--weights", file, "weight data or case document")->required();
  cls->add_flag("--dedup-gl", dedup_gl, "identify graphs up to GL(n,Z)");

  auto* oct = app.add_subcommand("oct", "Octonion checks");
  auto* oct_check = oct->add_subcommand("check", "Run the octonion identity checks");
  oct->require_subcommand(1);
  oct_check->add_option("--seed", seed);
  oct_check->add_option("--samples", samples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(ctx, 2, e.what());
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(ctx, file, effective);
    if (coh->parsed()) return cmd_cohomology(ctx, file, max_degree, pfile);
    if (chern_cmd->parsed()) return cmd_chern(ctx, file);
    if (integ->parsed()) return cmd_integrate(ctx, file, expr, named);
    if (aut->parsed()) return cmd_aut(ctx, file, star);
    if (bv->parsed()) return cmd_blowup_vertex(ctx, file, vertex);
    if (be->parsed()) return cmd_blowup_edge(ctx, file, edge, connection);
    if (glue->parsed()) return cmd_glue(ctx, file, file_b);
    if (cat->parsed()) return cmd_catalog(ctx, type, params);
    if (cls->parsed()) return cmd_classify(ctx, file, dedup_gl);
    if (oct_check->parsed()) return cmd_oct_check(ctx, seed, samples);
  } catch (const InputError& e) {
    return fail(ctx, 2, e.what());
  } catch (const DomainError& e) {
    return fail(ctx, 1, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, 1, e.what());
  }
  return fail(ctx, 2, "no subcommand");
}

}  // namespace gkm::cli
