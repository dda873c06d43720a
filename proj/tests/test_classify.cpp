#include <gtest/gtest.h>

#include <algorithm>

#include "gkm/classify.hpp"
#include "gkm/constructions.hpp"
#include "gkm/errors.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

const Weight A{1, 0}, B{0, 1};

std::vector<std::vector<Weight>> sorted(std::vector<std::vector<Weight>> ms) {
  for (auto& m : ms) std::sort(m.begin(), m.end());
  std::sort(ms.begin(), ms.end());
  return ms;
}

}  // namespace

TEST(CaseWeights, CaseBMultisets) {
  WeightData wd = case_weights(WeightCase::B, CaseParams{{{"a", A}, {"b", B}}, {}});
  EXPECT_EQ(wd.torus_rank, 2u);
  EXPECT_EQ(wd.multisets.size(), 4u);
  for (const auto& ms : wd.multisets) EXPECT_TRUE(pairwise_independent(ms));
}

TEST(CaseWeights, MatchesCatalog) {
  const std::vector<std::pair<WeightCase, CatalogType>> pairs{
      {WeightCase::B, CatalogType::Q1}, {WeightCase::E, CatalogType::P2}, {WeightCase::F, CatalogType::Q2}};
  for (auto [wc, type] : pairs) {
    WeightData wd = case_weights(wc, CaseParams{{{"a", A}, {"b", B}}, {}});
    GkmGraph g = catalog_standard(type);
    ChernNumbers want = chern_numbers(g);
    ChernNumbers got = chern_numbers_from_weights(wd.multisets);
    EXPECT_EQ(got.c1_cubed, want.c1_cubed) << weight_case_name(wc);
    EXPECT_EQ(got.c1c2, want.c1c2) << weight_case_name(wc);
  }
}

TEST(CaseWeights, CaseCOracle) {
  std::mt19937_64 rng(7);
  for (long a : {1L, 2L, 3L, 4L, 5L}) {
    WeightData wd = case_weights_rank1(WeightCase::C, {a});
    EXPECT_EQ(wd.torus_rank, 1u);
    ChernNumbers cn = chern_numbers_from_weights(wd.multisets);
    oracle::Chern o = oracle::chern_numbers(wd.multisets, rng);
    EXPECT_EQ(cn.c1_cubed, o.c1_cubed);
    EXPECT_EQ(cn.c1c2, o.c1c2);
    EXPECT_EQ(cn.c1_cubed, 72 - 2 * a * a);
  }
}

TEST(CaseWeights, Rank1Errors) {
  EXPECT_THROW(case_weights_rank1(WeightCase::A, {1, 2}), InputError);
  EXPECT_THROW(case_weights_rank1(WeightCase::A, {1, 1, 2}), DomainError);
  EXPECT_THROW(case_weights_rank1(WeightCase::A, {2, 4, 6}), DomainError);
  EXPECT_THROW(case_weights_rank1(WeightCase::B, {2, 4}), DomainError);
  EXPECT_THROW(case_weights_rank1(WeightCase::E, {0, 1}), DomainError);
  EXPECT_THROW(case_weights(WeightCase::C, CaseParams{{{"a", A}, {"b", B}}, {}}), InputError);
  EXPECT_THROW(case_weights(WeightCase::D, CaseParams{{{"a", A}, {"b", B}}, {}}), InputError);
  EXPECT_EQ(parse_weight_case("F"), WeightCase::F);
  EXPECT_THROW(parse_weight_case("G"), InputError);
}

TEST(Enumerate, UniqueCases) {
  CaseParams abc{{{"a", A}, {"b", B}, {"c", A + B}}, {}};
  CaseParams ab{{{"a", A}, {"b", B}}, {}};
  const std::vector<std::tuple<WeightCase, CaseParams, CatalogType>> unique{
      {WeightCase::A, abc, CatalogType::P1},
      {WeightCase::B, ab, CatalogType::Q1},
      {WeightCase::E, ab, CatalogType::P2},
      {WeightCase::F, ab, CatalogType::Q2}};
  for (const auto& [wc, params, type] : unique) {
    auto graphs = enumerate_graphs(case_weights(wc, params), EnumerateOptions{true});
    ASSERT_EQ(graphs.size(), 1u) << weight_case_name(wc);
    EXPECT_TRUE(validate(graphs[0], false).valid());
    EXPECT_TRUE(oracle::isomorphic_any_lattice(graphs[0], catalog_standard(type))) << weight_case_name(wc);
  }
}

TEST(Enumerate, DedupReducesOrKeeps) {
  WeightData wd = case_weights(WeightCase::B, CaseParams{{{"a", A}, {"b", B}}, {}});
  EXPECT_GE(enumerate_graphs(wd).size(), enumerate_graphs(wd, EnumerateOptions{true}).size());
}

TEST(Enumerate, CaseDContainsS) {
  for (long k : {0L, 1L, 2L}) {
    CaseParams dk{{{"a", A}, {"b", B}}, {{"k", mpz_class(k)}}};
    auto graphs = enumerate_graphs(case_weights(WeightCase::D, dk));
    bool found = false;
    for (const auto& g : graphs) {
      EXPECT_TRUE(validate(g, false).valid());
      found = found || isomorphic(g, catalog_standard(CatalogType::S, k), false).has_value();
    }
    EXPECT_TRUE(found) << k;
  }
}

TEST(Enumerate, P3Data) {
  WeightData p3{2, {"p1", "p2", "p3", "p4"}, {{A, B, -A - B}, {-A, B, A - B}, {-A, -B, A + B}, {A, -B, B - A}}};
  auto graphs = enumerate_graphs(p3);
  bool found = false;
  for (const auto& g : graphs) found = found || oracle::isomorphic_fixed_lattice(g, catalog_standard(CatalogType::P3));
  EXPECT_TRUE(found);
  EXPECT_TRUE(sorted(p3.multisets) == sorted([&] {
                std::vector<std::vector<Weight>> ms;
                GkmGraph g = catalog_standard(CatalogType::P3);
                for (std::size_t v = 0; v < g.num_vertices(); ++v) ms.push_back(g.weights_at(v));
                return ms;
              }()));
}

TEST(Enumerate, Errors) {
  WeightData bad{2, {"p"}, {{Weight{1}}}};
  EXPECT_THROW(enumerate_graphs(bad), InputError);
  WeightData mismatch{2, {"p", "q"}, {{A}}};
  EXPECT_THROW(enumerate_graphs(mismatch), InputError);
}

TEST(Distinctness, Certificate) {
  DistinctnessReport r = distinctness_certificate();
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.case_c.size(), 5u);
  EXPECT_EQ(r.case_c[3].c1c2, 24);
  EXPECT_EQ(r.case_c[3].c1_cubed, 40);
  EXPECT_EQ(r.case_c[0].c1_cubed, 70);
  EXPECT_EQ(r.case_c[4].c1_cubed, 22);
}
