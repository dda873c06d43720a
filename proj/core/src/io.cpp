#include "gkm/io.hpp"

#include "json.hpp"
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void require_object(const json& j, const std::string& what, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw InputError(what + ": unknown key \"" + k + "\"");
  for (const auto& k : required)
    if (!j.contains(k)) throw InputError(what + ": missing key \"" + k + "\"");
}

std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

mpz_class require_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                                           : mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw InputError(what + " must be an integer");
}

std::size_t require_size(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw InputError(what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Weight parse_weight(const json& j, std::size_t rank, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an integer array");
  if (j.size() != rank)
    throw InputError(what + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(rank));
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = require_integer(j[i], what);
  return w;
}

// Integers that fit are emitted as numbers, larger ones as strings.
ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i].fits_slong_p())
      a.push_back(w[i].get_si());
    else
      a.push_back(w[i].get_str());
  }
  return a;
}

Polynomial parse_entry(const GkmGraph& g, const std::string& expr, const std::map<std::string, Weight>& weights,
                       const std::string& what) {
  try {
    return evaluate_class_expression(g, expr, {}, weights)[0];
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  } catch (const DomainError& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

GkmGraph parse_graph_json(const std::string& text) {
  json j = parse_text(text);
  require_object(j, "graph", {"schema", "torus_rank", "vertices", "edges"}, {"torus_rank", "vertices", "edges"});
  if (j.contains("schema") && j["schema"] != kGraphSchema)
    throw InputError("graph: unsupported schema " + j["schema"].dump());
  std::size_t rank = require_size(j["torus_rank"], "torus_rank");
  if (rank == 0) throw InputError("torus_rank must be positive");
  if (!j["vertices"].is_array()) throw InputError("vertices must be an array");
  if (!j["edges"].is_array()) throw InputError("edges must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(require_string(v, "vertex name"));
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    require_object(e, "edge", {"id", "from", "to", "weight"}, {"id", "from", "to", "weight"});
    std::string id = require_string(e["id"], "edge id");
    edges.push_back(Edge{id, require_string(e["from"], "edge from"), require_string(e["to"], "edge to"),
                         parse_weight(e["weight"], rank, "weight of edge " + id)});
  }
  return GkmGraph(rank, std::move(vertices), std::move(edges));
}

std::string graph_to_json(const GkmGraph& g) {
  ordered_json j;
  j["schema"] = kGraphSchema;
  j["torus_rank"] = g.torus_rank();
  j["vertices"] = g.vertices();
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json o;
    o["id"] = e.id;
    o["from"] = e.from;
    o["to"] = e.to;
    o["weight"] = weight_json(e.weight);
    edges.push_back(o);
  }
  j["edges"] = edges;
  return j.dump(2);
}

EquivariantClass parse_class_json(const GkmGraph& g, const std::string& text,
                                  const std::map<std::string, Weight>& weights) {
  json j = parse_text(text);
  if (!j.is_object()) throw InputError("class table must be a JSON object");
  std::vector<Polynomial> vals(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  for (const auto& [k, v] : j.items()) {
    auto idx = g.find_vertex(k);
    if (!idx) throw InputError("class table: unknown vertex \"" + k + "\"");
    vals[*idx] = parse_entry(g, require_string(v, "class entry"), weights, "class entry at " + k);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("class table: missing vertex \"" + g.vertex_name(i) + "\"");
  return EquivariantClass(std::move(vals));
}

std::string class_to_json(const GkmGraph& g, const EquivariantClass& c) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < g.num_vertices(); ++i) j[g.vertex_name(i)] = c[i].str();
  return j.dump(2);
}

Presentation parse_presentation_json(const GkmGraph& g, const std::string& text) {
  json j = parse_text(text);
  require_object(j, "presentation", {"generators", "relations", "weights", "max_degree"}, {"generators"});
  Presentation p;
  if (j.contains("weights")) {
    if (!j["weights"].is_object()) throw InputError("weights must be an object");
    for (const auto& [k, v] : j["weights"].items())
      p.weights[k] = parse_weight(v, g.torus_rank(), "weight " + k);
  }
  if (j.contains("max_degree")) p.max_degree = static_cast<unsigned>(require_size(j["max_degree"], "max_degree"));
  if (!j["generators"].is_array()) throw InputError("generators must be an array");
  for (const auto& gj : j["generators"]) {
    require_object(gj, "generator", {"name", "degree", "table"}, {"name", "degree", "table"});
    Generator gen;
    gen.name = require_string(gj["name"], "generator name");
    gen.degree = static_cast<unsigned>(require_size(gj["degree"], "generator degree"));
    if (gen.degree == 0 || gen.degree % 2) throw InputError("generator " + gen.name + " must have positive even degree");
    gen.table = parse_class_json(g, gj["table"].dump(), p.weights);
    p.generators.push_back(std::move(gen));
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw InputError("relations must be an array");
    for (const auto& r : j["relations"]) p.relations.push_back(require_string(r, "relation"));
  }
  return p;
}

std::string presentation_to_json(const GkmGraph& g, const Presentation& p) {
  ordered_json j;
  ordered_json gens = ordered_json::array();
  for (const auto& gen : p.generators) {
    ordered_json o;
    o["name"] = gen.name;
    o["degree"] = gen.degree;
    o["table"] = ordered_json::parse(class_to_json(g, gen.table));
    gens.push_back(o);
  }
  j["generators"] = gens;
  j["relations"] = p.relations;
  ordered_json ws = ordered_json::object();
  for (const auto& [k, w] : p.weights) ws[k] = weight_json(w);
  j["weights"] = ws;
  j["max_degree"] = p.max_degree;
  return j.dump(2);
}

WeightData parse_weight_data_json(const std::string& text) {
  json j = parse_text(text);
  require_object(j, "weight data", {"torus_rank", "weights"}, {"torus_rank", "weights"});
  WeightData wd;
  wd.torus_rank = require_size(j["torus_rank"], "torus_rank");
  if (wd.torus_rank == 0) throw InputError("torus_rank must be positive");
  if (!j["weights"].is_object()) throw InputError("weights must be an object");
  for (const auto& [k, v] : j["weights"].items()) {
    if (!v.is_array()) throw InputError("weights of " + k + " must be an array");
    std::vector<Weight> ms;
    for (const auto& w : v) ms.push_back(parse_weight(w, wd.torus_rank, "weight at " + k));
    wd.names.push_back(k);
    wd.multisets.push_back(std::move(ms));
  }
  if (wd.names.empty()) throw InputError("weight data has no fixed points");
  return wd;
}

std::string weight_data_to_json(const WeightData& wd) {
  ordered_json j;
  j["torus_rank"] = wd.torus_rank;
  ordered_json ws = ordered_json::object();
  for (std::size_t i = 0; i < wd.names.size(); ++i) {
    ordered_json a = ordered_json::array();
    for (const auto& w : wd.multisets[i]) a.push_back(weight_json(w));
    ws[wd.names[i]] = a;
  }
  j["weights"] = ws;
  return j.dump(2);
}

}  // namespace gkm
