#include <gtest/gtest.h>

#include "gkm/errors.hpp"
#include "gkm/octonion.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

Octonion e(std::size_t k) { return Octonion::basis(k); }

constexpr OctonionVariant I = OctonionVariant::I;
constexpr OctonionVariant II = OctonionVariant::II;

void expect_matches(const ProductTable& t, const oracle::Table& want) {
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      int code = want[i][j];
      EXPECT_EQ(t[i][j].sign, code > 0 ? 1 : -1) << i + 1 << "," << j + 1;
      EXPECT_EQ(t[i][j].index, static_cast<std::size_t>(std::abs(code) - 1)) << i + 1 << "," << j + 1;
    }
}

}  // namespace

TEST(Quaternion, Basics) {
  Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, Quaternion(-1, 0, 0, 0));
  Quaternion q{1, 2, 3, 4};
  EXPECT_EQ(q.norm2(), 30);
  EXPECT_EQ(q * q.inverse(), Quaternion(1, 0, 0, 0));
  EXPECT_THROW(Quaternion().inverse(), DomainError);
}

TEST(Octonion, BasisExamples) {
  EXPECT_EQ(mul(e(1), e(2), I), e(3));
  EXPECT_EQ(mul(e(1), e(4), II), e(5));
  EXPECT_EQ(mul(e(4), e(1), I), -e(5));
  EXPECT_EQ(mul(e(1), e(3), I), -e(2));
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    Octonion x = random_octonion(rng);
    EXPECT_EQ(mul(e(0), x, I), x);
    EXPECT_EQ(mul(x, e(0), II), x);
  }
}

TEST(Octonion, TablesMatchTranscription) {
  expect_matches(product_table(I), oracle::table_pairs());
  expect_matches(product_table(II), oracle::table_complex());
  expect_matches(reference_table(I), oracle::table_pairs());
  expect_matches(reference_table(II), oracle::table_complex());
}

TEST(Octonion, CayleyDicksonOracle) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    std::array<mpq_class, 8> xa, ya;
    for (std::size_t k = 0; k < 8; ++k) {
      xa[k] = x[k];
      ya[k] = y[k];
    }
    EXPECT_EQ(mul(x, y, I), Octonion(oracle::cayley_dickson(xa, ya)));
  }
}

TEST(Octonion, PrintedFormulaDiffers) {
  bool differs = false;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) differs = differs || mul_as_printed(e(i), e(j)) != mul(e(i), e(j), I);
  EXPECT_TRUE(differs);
}

TEST(Octonion, Associator) {
  EXPECT_EQ(associator(e(1), e(2), e(4), I), e(7) * mpq_class(2));
  std::mt19937_64 rng(11);
  for (int n = 0; n < 20; ++n) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    for (auto v : {I, II}) {
      EXPECT_EQ(associator(x, x, y, v), Octonion());
      EXPECT_EQ(associator(e(0), x, y, v), Octonion());
    }
  }
}

TEST(Octonion, Iso13) {
  EXPECT_EQ(iso_13(e(1)), e(1));
  EXPECT_EQ(iso_13(e(6)), -e(6));
  EXPECT_EQ(iso_13(e(7)), e(7));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(iso_13(iso_13(e(i))), e(i));
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(iso_13(mul(e(i), e(j), I)), mul(iso_13(e(i)), iso_13(e(j)), II));
  }
}

TEST(Octonion, PhiPsi) {
  Quaternion s{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)};
  Quaternion one{1, 0, 0, 0}, minus{-1, 0, 0, 0};
  std::mt19937_64 rng(13);
  for (int n = 0; n < 30; ++n) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ(phi(one, x), x);
    EXPECT_EQ(phi(s, mul(x, y, I)), mul(phi(s, x), phi(s, y), I));
    EXPECT_EQ(psi(s, mul(x, y, I)), mul(psi(s, x), psi(s, y), I));
    EXPECT_EQ(phi(s, psi(s, x)), psi(s, phi(s, x)));
    EXPECT_EQ(phi(minus, psi(minus, x)), x);
  }
  EXPECT_THROW(phi(Quaternion(1, 1, 0, 0), e(1)), DomainError);
  EXPECT_THROW(psi(Quaternion(2, 0, 0, 0), e(1)), DomainError);
}

TEST(Octonion, NormMultiplicative) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 30; ++n) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    for (auto v : {I, II}) EXPECT_EQ(mul(x, y, v).norm2(), x.norm2() * y.norm2());
  }
}

TEST(AlmostComplex, S6Examples) {
  EXPECT_EQ(s6_tangent_J(e(1), e(2)), e(3));
  EXPECT_EQ(s6_tangent_J(e(1), e(3)), -e(2));
  Octonion u = (e(1) * mpq_class(3) + e(2) * mpq_class(4)) * mpq_class(1, 5);
  EXPECT_EQ(s6_tangent_J(u, s6_tangent_J(u, e(4))), -e(4));
  std::mt19937_64 rng(19);
  for (int n = 0; n < 20; ++n) {
    Octonion p = random_s6_point(rng);
    Octonion v = random_s6_tangent(p, rng);
    Octonion jv = s6_tangent_J(p, v);
    EXPECT_TRUE(jv.is_imaginary());
    EXPECT_EQ(inner(p, jv), 0);
    EXPECT_EQ(s6_tangent_J(p, jv), -v);
  }
  EXPECT_THROW(s6_tangent_J(e(1) * mpq_class(2), e(2)), DomainError);
  EXPECT_THROW(s6_tangent_J(e(1), e(1)), DomainError);
}

TEST(AlmostComplex, S2S4Examples) {
  Octonion u = e(1) + e(4);
  EXPECT_EQ(mul(e(4), e(1), I), -e(5));
  EXPECT_EQ(mul(-e(5), -e(5), I), -e(0));
  Octonion jv = s2s4_tangent_J(u, e(2));
  EXPECT_EQ(inner(e(1), jv), 0);
  EXPECT_EQ(inner(e(4), jv), 0);
  EXPECT_EQ(s2s4_tangent_J(u, jv), -e(2));
  std::mt19937_64 rng(23);
  for (int n = 0; n < 20; ++n) {
    Octonion p = random_s2s4_point(rng);
    Octonion v = random_s2s4_tangent(p, rng);
    EXPECT_EQ(s2s4_tangent_J(p, s2s4_tangent_J(p, v)), -v);
  }
  EXPECT_THROW(s2s4_tangent_J(u, e(1)), DomainError);
  EXPECT_THROW(s2s4_tangent_J(e(1), e(2)), DomainError);
}

TEST(SU3, DiagonalExample) {
  GaussianRational z{0, 0}, i{0, 1}, m1{-1, 0};
  ComplexMatrix3 a{{{i, z, z}, {z, i, z}, {z, z, m1}}};
  EXPECT_TRUE(is_special_unitary(a));
  std::mt19937_64 rng(29);
  EXPECT_TRUE(su3_preserves(a, 50, rng));
  ComplexMatrix3 b{{{i, z, z}, {z, i, z}, {z, z, GaussianRational{1, 0}}}};
  EXPECT_FALSE(is_special_unitary(b));
  EXPECT_THROW(su3_preserves(b, 5, rng), DomainError);
}

TEST(OctonionChecks, AllPass) {
  for (const auto& c : octonion_checks(1, 40)) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}
