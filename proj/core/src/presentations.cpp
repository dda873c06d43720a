#include "gkm/presentations.hpp"

#include "gkm/errors.hpp"

namespace gkm {

namespace {

Weight linear_to_weight(const Polynomial& p) {
  Weight w(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::size_t i = 0, deg = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) i = j, deg += m[j];
    if (deg != 1 || c.get_den() != 1) throw DomainError("not an integral linear form: " + p.str());
    w[i] = c.get_num();
  }
  return w;
}

Generator gen(const GkmGraph& g, const std::string& name, unsigned degree,
              const std::map<std::string, std::string>& table, const std::map<std::string, Weight>& ws) {
  std::map<std::string, EquivariantClass> none;
  std::vector<Polynomial> vals(g.num_vertices());
  for (const auto& [v, expr] : table)
    vals[g.vertex_index(v)] = evaluate_class_expression(g, expr, none, ws)[0];
  return Generator{name, degree, EquivariantClass(std::move(vals))};
}

}  // namespace

CatalogPresentation catalog_presentation(CatalogType t, long k) {
  const Weight a{1, 0}, b{0, 1}, c{1, 1};
  std::map<std::string, Weight> ws{{"a", a}, {"b", b}};
  CatalogPresentation cp{t, GkmGraph(), Presentation(), "xi", "xi^2"};
  Presentation& p = cp.presentation;
  switch (t) {
    case CatalogType::P1: {
      // The class xi = (0, a, b, c) lives on P1(-a, -b, -c).
      cp.graph = catalog(t, CatalogParams{-a, -b, -c, 0});
      ws["c"] = c;
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "0"}, {"p2", "a"}, {"p3", "b"}, {"p4", "c"}}, ws)};
      p.relations = {"xi*(xi - a)*(xi - b)*(xi - c)"};
      break;
    }
    case CatalogType::P2:
      cp.graph = catalog(t, CatalogParams{a, b, std::nullopt, 0});
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "0"}, {"p2", "a"}, {"p3", "b"}, {"p4", "-a - b"}}, ws)};
      p.relations = {"xi*(xi - a)*(xi - b)*(xi + a + b)"};
      break;
    case CatalogType::P3:
      cp.graph = catalog(t, CatalogParams{a, b, std::nullopt, 0});
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "0"}, {"p2", "a"}, {"p3", "a + b"}, {"p4", "b"}}, ws)};
      p.relations = {"xi*(xi - a)*(xi - b)*(xi - a - b)"};
      break;
    case CatalogType::Q1:
      cp.graph = catalog(t, CatalogParams{a, b, std::nullopt, 0});
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "a"}, {"p2", "b"}, {"p3", "-a"}, {"p4", "-b"}}, ws),
                      gen(cp.graph, "eta", 4,
                          {{"p1", "a*(a + b)"}, {"p2", "b*(a + b)"}, {"p3", "0"}, {"p4", "0"}}, ws)};
      p.relations = {"2*eta - (xi + a)*(xi + b)", "eta*(eta - (a + b)*xi)"};
      break;
    case CatalogType::Q2:
      cp.graph = catalog(t, CatalogParams{a, b, std::nullopt, 0});
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "-a"}, {"p2", "-b"}, {"p3", "a"}, {"p4", "b"}}, ws),
                      gen(cp.graph, "eta", 4,
                          {{"p1", "a*(a + b)"}, {"p2", "b*(a + b)"}, {"p3", "0"}, {"p4", "0"}}, ws)};
      p.relations = {"2*eta - (xi - a)*(xi - b)", "eta*(eta + (a + b)*xi)"};
      break;
    case CatalogType::S: {
      cp.graph = catalog(t, CatalogParams{a, b, std::nullopt, k});
      Weight w = a + b;
      Weight cc = a - w * mpz_class(k), dd = b + w * mpz_class(k);
      ws["c"] = cc;
      ws["d"] = dd;
      Polynomial num = linear_form(a) * linear_form(b) - linear_form(cc) * linear_form(dd);
      auto delta = num.divide_by_linear(w);
      if (!delta) throw DomainError("ab - cd is not divisible by a + b");
      ws["delta"] = linear_to_weight(*delta);
      p.generators = {gen(cp.graph, "xi", 2, {{"p1", "a + b"}, {"p2", "0"}, {"p3", "a + b"}, {"p4", "0"}}, ws),
                      gen(cp.graph, "eta", 4, {{"p1", "0"}, {"p2", "0"}, {"p3", "a*b"}, {"p4", "c*d"}}, ws)};
      p.relations = {"xi^2 - (a + b)*xi", "eta^2 - c*d*eta - delta*xi*eta"};
      cp.h4_basis = "eta";
      break;
    }
    case CatalogType::S6:
      throw InputError("no ring presentation is recorded for S6");
  }
  p.weights = ws;
  p.max_degree = 12;
  return cp;
}

}  // namespace gkm
