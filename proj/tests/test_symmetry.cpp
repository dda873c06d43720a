#include <gtest/gtest.h>

#include <algorithm>

#include "gkm/constructions.hpp"
#include "gkm/symmetry.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

IntegerMatrix minus_identity(std::size_t n) {
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = -1;
  return m;
}

}  // namespace

TEST(Automorphisms, CatalogOrders) {
  const std::vector<std::pair<GkmGraph, std::size_t>> want{
      {catalog_standard(CatalogType::P1), 8},   {catalog_standard(CatalogType::P2), 6},
      {catalog_standard(CatalogType::P3), 8},   {catalog_standard(CatalogType::Q1), 8},
      {catalog_standard(CatalogType::Q2), 8},   {catalog_standard(CatalogType::S, 0), 8},
      {catalog_standard(CatalogType::S, 1), 4}};
  for (const auto& [g, order] : want) {
    AutomorphismGroup grp = gkm_automorphisms(g);
    EXPECT_EQ(grp.order(), order);
    EXPECT_EQ(oracle::automorphism_count(g), grp.order());
    EXPECT_FALSE(check_group_axioms(grp).has_value());
  }
}

TEST(Automorphisms, RankThreeP1IsSymmetric) {
  GkmGraph g = catalog(CatalogType::P1, CatalogParams{Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}, 0});
  AutomorphismGroup grp = gkm_automorphisms(g);
  EXPECT_EQ(grp.order(), 24u);
  EXPECT_EQ(aut_star(g, grp).size(), 24u);
}

TEST(Automorphisms, IdentityFirstAndGenerators) {
  GkmGraph g = catalog_standard(CatalogType::P2);
  AutomorphismGroup grp = gkm_automorphisms(g);
  const auto& id = grp.elements.front();
  EXPECT_TRUE(id.psi.is_identity());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(id.vertex_map[v], v);
  EXPECT_FALSE(grp.generators.empty());
  for (std::size_t i : grp.generators) EXPECT_LT(i, grp.order());
}

TEST(Automorphisms, ComposeAndInverse) {
  GkmGraph g = catalog_standard(CatalogType::Q1);
  AutomorphismGroup grp = gkm_automorphisms(g);
  for (const auto& a : grp.elements) {
    EXPECT_TRUE(same_element(compose(a, inverse(a)), grp.elements.front()));
    for (const auto& b : grp.elements) {
      GkmAutomorphism ab = compose(a, b);
      EXPECT_EQ(ab.psi, a.psi * b.psi);
      for (std::size_t v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(ab.vertex_map[v], a.vertex_map[b.vertex_map[v]]);
    }
  }
}

TEST(Automorphisms, IdentityActsTrivially) {
  GkmGraph g = catalog_standard(CatalogType::P1);
  AutomorphismGroup grp = gkm_automorphisms(g);
  for (unsigned d : {2u, 4u, 6u}) {
    RationalMatrix m = induced_action(g, grp.elements.front(), d);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), i == j ? 1 : 0);
  }
}

TEST(Automorphisms, ReflectionActsAsMinusOneOnS) {
  GkmGraph s0 = catalog_standard(CatalogType::S, 0);
  AutomorphismGroup grp = gkm_automorphisms(s0);
  auto star = aut_star(s0, grp);
  bool reflection = false;
  std::size_t negating = 0;
  for (std::size_t i = 0; i < grp.order(); ++i) {
    RationalMatrix m = induced_action(s0, grp.elements[i], 2);
    ASSERT_EQ(m.rows(), 1u);
    bool in_star = std::find(star.begin(), star.end(), i) != star.end();
    EXPECT_EQ(m(0, 0), in_star ? 1 : -1);
    if (m(0, 0) == -1) {
      ++negating;
      reflection = reflection || grp.elements[i].psi == minus_identity(2);
    }
  }
  EXPECT_EQ(negating, 4u);
  EXPECT_TRUE(reflection);
}

TEST(Automorphisms, AutStar) {
  for (auto [k, order] : {std::pair<long, std::size_t>{0, 4}, {1, 2}}) {
    GkmGraph s = catalog_standard(CatalogType::S, k);
    AutomorphismGroup grp = gkm_automorphisms(s);
    auto star = aut_star(s, grp);
    EXPECT_EQ(star.size(), order) << k;
    for (std::size_t i : star)
      for (unsigned d : {2u, 4u}) {
        RationalMatrix m = induced_action(s, grp.elements[i], d);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_EQ(m(r, c), r == c ? 1 : 0);
      }
  }
}

TEST(Automorphisms, ActPreservesClasses) {
  GkmGraph g = catalog_standard(CatalogType::P2);
  AutomorphismGroup grp = gkm_automorphisms(g);
  auto basis = component_basis(g, 2);
  for (const auto& a : grp.elements)
    for (const auto& c : basis) EXPECT_TRUE(is_class(g, act(g, a, c)));
}

TEST(Automorphisms, CycleNotation) {
  GkmGraph g = catalog_standard(CatalogType::P1);
  EXPECT_EQ(cycle_notation(g, {0, 1, 2, 3}), "()");
  EXPECT_EQ(cycle_notation(g, {1, 0, 3, 2}), "(p1 p2)(p3 p4)");
  EXPECT_EQ(cycle_notation(g, {1, 2, 0, 3}), "(p1 p2 p3)");
}
