// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gkm/chern.hpp"
#include "gkm/classify.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"
#include "gkm/octonion.hpp"
#include "gkm/presentations.hpp"
#include "gkm/symmetry.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

const Weight A{1, 0}, B{0, 1};

struct Named {
  std::string name;
  GkmGraph graph;
};

std::vector<Named> catalog_graphs() {
  return {{"P1", catalog_standard(CatalogType::P1)},   {"P2", catalog_standard(CatalogType::P2)},
          {"P3", catalog_standard(CatalogType::P3)},   {"Q1", catalog_standard(CatalogType::Q1)},
          {"Q2", catalog_standard(CatalogType::Q2)},   {"S(k=0)", catalog_standard(CatalogType::S, 0)},
          {"S(k=1)", catalog_standard(CatalogType::S, 1)}, {"S(k=2)", catalog_standard(CatalogType::S, 2)},
          {"S6", catalog_standard(CatalogType::S6)}};
}

void criterion1(Criterion& c, std::mt19937_64& rng) {
  struct Row {
    CatalogType t;
    long k;
    long c1_cubed, c1c2, c3;
  };
  const std::vector<Row> rows{{CatalogType::P1, 0, 64, 24, 4}, {CatalogType::Q1, 0, 54, 24, 4},
                              {CatalogType::P3, 0, 0, 0, 4},   {CatalogType::P2, 0, -8, 0, 4},
                              {CatalogType::Q2, 0, -2, 0, 4},  {CatalogType::S, 0, 0, 0, 4},
                              {CatalogType::S, 1, 0, 0, 4},    {CatalogType::S, 2, 0, 0, 4}};
  for (const auto& r : rows) {
    GkmGraph g = catalog_standard(r.t, r.k);
    ChernNumbers n = chern_numbers(g);
    oracle::Chern o = oracle::chern_numbers(g, rng);
    std::string name = catalog_name(r.t) + (r.t == CatalogType::S ? "(k=" + std::to_string(r.k) + ")" : "");
    c.expect(n.c1_cubed == r.c1_cubed && n.c1c2 == r.c1c2 && n.c3 == r.c3, name + " golden");
    c.expect(o.c1_cubed == n.c1_cubed && o.c1c2 == n.c1c2 && o.c3 == n.c3, name + " oracle");
    c.notes << ' ' << name << "=(" << n.c1_cubed << ',' << n.c1c2 << ',' << n.c3 << ')';
  }
}

void criterion2(Criterion& c, std::mt19937_64& rng) {
  const std::vector<std::pair<long, long>> want{{1, 70}, {4, 40}, {5, 22}};
  for (auto [a, v] : want) {
    WeightData wd = case_weights(WeightCase::C, CaseParams{{}, {{"a", mpz_class(a)}}});
    ChernNumbers n = chern_numbers_from_weights(wd.multisets);
    oracle::Chern o = oracle::chern_numbers(wd.multisets, rng);
    c.expect(n.c1_cubed == v && o.c1_cubed == v, "a=" + std::to_string(a));
    c.notes << " a=" << a << ":" << n.c1_cubed;
  }
}

void criterion3(Criterion& c) {
  const std::vector<std::pair<CatalogType, long>> want{{CatalogType::P1, 1}, {CatalogType::Q1, 1},
                                                       {CatalogType::P2, 0}, {CatalogType::P3, 0},
                                                       {CatalogType::Q2, 0}, {CatalogType::S, 0}};
  for (auto [t, v] : want) {
    mpq_class td = todd(catalog_standard(t));
    c.expect(td == v, catalog_name(t));
    c.notes << ' ' << catalog_name(t) << '=' << td;
  }
}

void criterion4(Criterion& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-5, 5);
  for (const auto& [name, g] : catalog_graphs()) {
    std::vector<std::vector<EquivariantClass>> bases;
    for (unsigned d : {0u, 2u, 4u}) bases.push_back(component_basis(g, d));
    std::size_t vanished = 0;
    for (int s = 0; s < 50; ++s) {
      EquivariantClass x = EquivariantClass::constant(g, Polynomial(g.torus_rank()));
      for (const auto& basis : bases)
        for (const auto& b : basis) x = x + b * Polynomial(g.torus_rank(), mpq_class(coef(rng)));
      auto at = [&](std::size_t p, const std::vector<mpq_class>& pt) { return x[p].evaluate(pt); };
      bool valid = oracle::is_class(g, at, 2, rng);
      if (valid && integrate(g, x) == 0 && oracle::integrate(g, at, rng) == 0) ++vanished;
    }
    c.expect(vanished == 50, name + " vanishing " + std::to_string(vanished) + "/50");
    mpq_class euler = integrate(g, equivariant_chern(g, 3));
    c.expect(euler == static_cast<long>(g.num_vertices()), name + " euler");
  }
  c.notes << " 50/50 classes vanish on each of 9 graphs; integral of c3 = vertex count";
}

void criterion5(Criterion& c) {
  const std::vector<std::tuple<CatalogType, long, long>> want{
      {CatalogType::P1, 4, 4}, {CatalogType::P2, -2, 4}, {CatalogType::P3, 0, 4},
      {CatalogType::Q1, 3, 1}, {CatalogType::Q2, -1, 1}, {CatalogType::S, 0, 0}};
  const std::vector<mpz_class> six{1, 0, 1, 0, 1, 0, 1};
  for (auto [t, c1, p1] : want) {
    CatalogPresentation cp = catalog_presentation(t);
    const GkmGraph& g = cp.graph;
    PresentationReport r = verify_presentation(g, cp.presentation);
    c.expect(r.pass(), catalog_name(t) + " presentation");
    PoincareResult pr = ordinary_poincare(g, 6);
    c.expect(pr.coefficients == six, catalog_name(t) + " poincare");
    std::map<std::string, EquivariantClass> named;
    for (const auto& gen : cp.presentation.generators) named[gen.name] = gen.table;
    EquivariantClass h2 = evaluate_class_expression(g, cp.h2_basis, named, cp.presentation.weights);
    EquivariantClass h4 = evaluate_class_expression(g, cp.h4_basis, named, cp.presentation.weights);
    RationalVector ic1 = ordinary_image(g, equivariant_chern(g, 1), {h2}, 2);
    RationalVector ip1 = ordinary_image(g, pontryagin(g), {h4}, 4);
    c.expect(ic1.size() == 1 && ic1[0] == c1, catalog_name(t) + " c1");
    c.expect(ip1.size() == 1 && ip1[0] == p1, catalog_name(t) + " p1");
    c.notes << ' ' << catalog_name(t) << ":c1=" << ic1.at(0) << ",p1=" << ip1.at(0);
  }
  PoincareResult s6 = ordinary_poincare(catalog_standard(CatalogType::S6), 6);
  c.expect(s6.coefficients == std::vector<mpz_class>{1, 0, 0, 0, 0, 0, 1}, "S6 poincare");
}

void criterion6(Criterion& c) {
  GkmGraph s6 = catalog_standard(CatalogType::S6);
  auto check = [&](const std::string& what, const GkmGraph& out, const GkmGraph& target) {
    c.expect(validate(out, true).valid_and_effective(), what + " validate");
    c.expect(isomorphic(out, target, false).has_value(), what + " isomorphic");
    c.expect(oracle::isomorphic_fixed_lattice(out, target), what + " oracle isomorphic");
  };
  check("blowup_vertex", blowup_vertex(s6, "n"), catalog_standard(CatalogType::P2));
  std::string wedge;
  for (const auto& e : s6.edges())
    if (e.weight == A + B || e.weight == -(A + B)) wedge = e.id;
  check("blowup_edge", blowup_edge(s6, wedge), catalog_standard(CatalogType::Q2));
  GlueResult g0 = glue_s6(s6, s6);
  check("glue k=0", g0.graph, catalog_standard(CatalogType::S, 0));
  GkmGraph s6b = catalog(CatalogType::S6, CatalogParams{Weight{0, -1}, Weight{1, 2}, std::nullopt, 0});
  GlueResult g1 = glue_s6(s6, s6b);
  check("glue k=1", g1.graph, catalog_standard(CatalogType::S, 1));
  c.notes << " Bl_n S6 = P2, Bl_w S6 = Q2, glue k=" << g0.k << " and k=" << g1.k;
}

void criterion7(Criterion& c) {
  GkmGraph p1_rank3 = catalog(CatalogType::P1, CatalogParams{Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}, 0});
  const std::vector<std::tuple<std::string, GkmGraph, std::size_t>> want{
      {"P1(rank 3)", p1_rank3, 24},
      {"P2", catalog_standard(CatalogType::P2), 6},
      {"P3", catalog_standard(CatalogType::P3), 8},
      {"Q1", catalog_standard(CatalogType::Q1), 8},
      {"Q2", catalog_standard(CatalogType::Q2), 8}};
  for (const auto& [name, g, order] : want) {
    AutomorphismGroup grp = gkm_automorphisms(g);
    c.expect(grp.order() == order, name + " order");
    c.expect(oracle::automorphism_count(g) == grp.order(), name + " oracle");
    c.expect(!check_group_axioms(grp), name + " group axioms");
    c.notes << ' ' << name << '=' << grp.order();
  }
  c.notes << " P1(rank 2)=" << gkm_automorphisms(catalog_standard(CatalogType::P1)).order();
  for (auto [k, order] : {std::pair<long, std::size_t>{0, 4}, {1, 2}}) {
    GkmGraph s = catalog_standard(CatalogType::S, k);
    AutomorphismGroup grp = gkm_automorphisms(s);
    std::size_t star = aut_star(s, grp).size();
    c.expect(star == order, "Aut* S(k=" + std::to_string(k) + ")");
    c.notes << " Aut*(S,k=" << k << ")=" << star;
  }
  GkmGraph s0 = catalog_standard(CatalogType::S, 0);
  AutomorphismGroup grp = gkm_automorphisms(s0);
  IntegerMatrix minus = IntegerMatrix::identity(2);
  minus(0, 0) = -1;
  minus(1, 1) = -1;
  bool found = false;
  for (const auto& a : grp.elements) {
    if (!(a.psi == minus)) continue;
    RationalMatrix m = induced_action(s0, a, 2);
    if (m.rows() == 1 && m(0, 0) == -1) found = true;
  }
  c.expect(found, "horizontal reflection acts as -1 on H^2");
  c.notes << " reflection on H^2 = -1";
}

void criterion8(Criterion& c) {
  CaseParams abc{{{"a", A}, {"b", B}, {"c", A + B}}, {}};
  CaseParams ab{{{"a", A}, {"b", B}}, {}};
  const std::vector<std::tuple<WeightCase, CaseParams, CatalogType>> unique{
      {WeightCase::A, abc, CatalogType::P1},
      {WeightCase::B, ab, CatalogType::Q1},
      {WeightCase::E, ab, CatalogType::P2},
      {WeightCase::F, ab, CatalogType::Q2}};
  for (const auto& [wc, params, type] : unique) {
    auto graphs = enumerate_graphs(case_weights(wc, params), EnumerateOptions{true});
    GkmGraph target = catalog_standard(type);
    bool ok = graphs.size() == 1 && isomorphic(graphs[0], target, true) &&
              oracle::isomorphic_any_lattice(graphs[0], target);
    c.expect(ok, "case " + weight_case_name(wc));
    c.notes << " " << weight_case_name(wc) << ":" << graphs.size() << "=" << catalog_name(type);
  }
  for (long k : {0L, 1L}) {
    CaseParams dk{{{"a", A}, {"b", B}}, {{"k", mpz_class(k)}}};
    auto graphs = enumerate_graphs(case_weights(WeightCase::D, dk));
    GkmGraph target = catalog_standard(CatalogType::S, k);
    bool found = false;
    for (const auto& g : graphs) found = found || oracle::isomorphic_fixed_lattice(g, target);
    c.expect(found, "case D contains S(k=" + std::to_string(k) + ")");
  }
  WeightData p3{2, {"p1", "p2", "p3", "p4"},
                {{A, B, -A - B}, {-A, B, A - B}, {-A, -B, A + B}, {A, -B, B - A}}};
  bool found = false;
  for (const auto& g : enumerate_graphs(p3))
    found = found || oracle::isomorphic_fixed_lattice(g, catalog_standard(CatalogType::P3));
  c.expect(found, "P3 data contains P3");
  c.expect(distinctness_certificate().pass(), "distinctness certificate");
  c.notes << " D contains S(0), S(1); P3 data contains P3; distinctness certificate passes";
}

void criterion9(Criterion& c, std::mt19937_64& rng) {
  using V = OctonionVariant;
  for (auto [v, ref] : {std::pair<V, const oracle::Table*>{V::I, &oracle::table_pairs()},
                        {V::II, &oracle::table_complex()}}) {
    ProductTable t = product_table(v);
    bool same = true;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        same = same && t[i][j].sign * static_cast<int>(t[i][j].index + 1) == (*ref)[i][j];
    c.expect(same, v == V::I ? "table I" : "table II");
  }
  bool hom = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Octonion x = Octonion::basis(i), y = Octonion::basis(j);
      hom = hom && iso_13(mul(x, y, V::I)) == mul(iso_13(x), iso_13(y), V::II);
    }
  c.expect(hom, "iso_13 on 64 basis pairs");
  const Quaternion s_fixed{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)};
  bool autos = true, cd = true, norm = true, s6 = true, s2s4 = true;
  for (int k = 0; k < 100; ++k) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    Quaternion s = k % 2 ? s_fixed : random_unit_quaternion(rng), t = random_unit_quaternion(rng);
    autos = autos && phi(s, mul(x, y, V::I)) == mul(phi(s, x), phi(s, y), V::I) &&
            psi(t, mul(x, y, V::I)) == mul(psi(t, x), psi(t, y), V::I);
    std::array<mpq_class, 8> xa, ya;
    for (std::size_t i = 0; i < 8; ++i) xa[i] = x[i], ya[i] = y[i];
    Octonion xy = mul(x, y, V::I);
    auto ref = oracle::cayley_dickson(xa, ya);
    for (std::size_t i = 0; i < 8; ++i) cd = cd && xy[i] == ref[i];
    for (V v : {V::I, V::II}) norm = norm && mul(x, y, v).norm2() == x.norm2() * y.norm2();
    Octonion u = random_s6_point(rng), w = random_s6_tangent(u, rng);
    Octonion jw = s6_tangent_J(u, w);
    s6 = s6 && jw.is_imaginary() && inner(u, jw) == 0 && s6_tangent_J(u, jw) == -w;
    Octonion u2 = random_s2s4_point(rng), w2 = random_s2s4_tangent(u2, rng);
    Octonion n1, n2;
    for (std::size_t i = 1; i <= 3; ++i) n1[i] = u2[i];
    n2[0] = u2[0];
    for (std::size_t i = 4; i < 8; ++i) n2[i] = u2[i];
    Octonion jw2 = s2s4_tangent_J(u2, w2);
    s2s4 = s2s4 && inner(n1, jw2) == 0 && inner(n2, jw2) == 0 && s2s4_tangent_J(u2, jw2) == -w2;
  }
  c.expect(autos, "phi/psi automorphisms");
  c.expect(cd, "pair product against reference");
  c.expect(norm, "norm multiplicative");
  c.expect(s6, "S6 J");
  c.expect(s2s4, "S2xS4 J");
  bool all = true;
  for (const auto& chk : octonion_checks()) all = all && chk.pass;
  c.expect(all, "octonion_checks");
  c.notes << " tables, iso_13, phi/psi, J^2=-1 and tangency, norm on 100 samples";
}

void criterion10(Criterion& c) {
#ifdef GKM_PROPERTIES_BINARY
  std::string cmd = std::string("\"") + GKM_PROPERTIES_BINARY + "\" --gtest_brief=1 > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  c.expect(rc == 0, "property suite exit status " + std::to_string(rc));
  c.notes << " standalone property binary exited " << rc;
#else
  c.expect(false, "property binary path not configured");
#endif
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"Chern-number goldens", [&](Criterion& c) { criterion1(c, rng); }},
      {"rank-1 case C", [&](Criterion& c) { criterion2(c, rng); }},
      {"Todd genus", [](Criterion& c) { criterion3(c); }},
      {"localization vanishing", [&](Criterion& c) { criterion4(c, rng); }},
      {"presentations", [](Criterion& c) { criterion5(c); }},
      {"surgeries", [](Criterion& c) { criterion6(c); }},
      {"automorphisms", [](Criterion& c) { criterion7(c); }},
      {"classification", [](Criterion& c) { criterion8(c); }},
      {"octonions", [&](Criterion& c) { criterion9(c, rng); }},
      {"property suites", [](Criterion& c) { criterion10(c); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    if (!c.pass) ++failures;
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " |"
              << c.notes.str() << '\n';
  }
  return failures ? 1 : 0;
}
