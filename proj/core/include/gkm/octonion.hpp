#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gkm {

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(mpq_class w, mpq_class x, mpq_class y, mpq_class z) : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  mpq_class& operator[](std::size_t i) { return c_[i]; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator-() const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator*(const mpq_class& s) const;
  bool operator==(const Quaternion& o) const { return c_ == o.c_; }
  bool operator!=(const Quaternion& o) const { return c_ != o.c_; }

  Quaternion conj() const;
  mpq_class norm2() const;
  Quaternion inverse() const;

 private:
  std::array<mpq_class, 4> c_;
};

enum class OctonionVariant { I, II };

class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<mpq_class, 8> c) : c_(std::move(c)) {}
  static Octonion basis(std::size_t k);
  static Octonion from_pair(const Quaternion& p, const Quaternion& q);

  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  mpq_class& operator[](std::size_t i) { return c_[i]; }

  Quaternion first() const { return {c_[0], c_[1], c_[2], c_[3]}; }
  Quaternion second() const { return {c_[4], c_[5], c_[6], c_[7]}; }

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator-() const;
  Octonion operator*(const mpq_class& s) const;
  bool operator==(const Octonion& o) const { return c_ == o.c_; }
  bool operator!=(const Octonion& o) const { return c_ != o.c_; }

  Octonion conj() const;
  mpq_class norm2() const;
  const mpq_class& re() const { return c_[0]; }
  bool is_imaginary() const { return c_[0] == 0; }
  std::string str() const;

 private:
  std::array<mpq_class, 8> c_;
};

// Euclidean inner product on coordinates.
mpq_class inner(const Octonion& x, const Octonion& y);

// Variant I: quaternion pairs, (p1,q1)(p2,q2) = (p1p2 - conj(q2)q1, q2p1 + q1conj(p2)).
// Variant II: C + C^3 with a = x0 + x1 i, m_j = x_{2j} + x_{2j+1} i.
Octonion mul(const Octonion& x, const Octonion& y, OctonionVariant v);
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z, OctonionVariant v);

// Variant I with first component p1q1 in place of p1p2: (p1q1 - conj(q2)q1, q2p1 + q1conj(p2)).
Octonion mul_as_printed(const Octonion& x, const Octonion& y);

// a + (m1, m2, m3) -> a + (m1, m2, -conj(m3)).
Octonion iso_13(const Octonion& x);

// phi_s(p,q) = (s p s^-1, q s^-1), psi_t(p,q) = (p, t q) for unit s, t.
Octonion phi(const Quaternion& s, const Octonion& x);
Octonion psi(const Quaternion& t, const Octonion& x);

// J_u(v) = u v on T_u S^6.
Octonion s6_tangent_J(const Octonion& u, const Octonion& v);
// J_u(v) = (n2 n1) v on T_u (S^2 x S^4).
Octonion s2s4_tangent_J(const Octonion& u, const Octonion& v);

struct GaussianRational {
  mpq_class re, im;
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conj() const { return {re, -im}; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

using ComplexMatrix3 = std::array<std::array<GaussianRational, 3>, 3>;

bool is_special_unitary(const ComplexMatrix3& a);
// a + m -> a + A m in the variant II coordinates.
Octonion su3_apply(const ComplexMatrix3& a, const Octonion& x);
bool su3_preserves(const ComplexMatrix3& a, std::size_t trials, std::mt19937_64& rng);

// Entry (i,j) of the product table e_i e_j for i,j >= 1: sign * e_index.
struct BasisProduct {
  int sign;
  std::size_t index;
};
using ProductTable = std::array<std::array<BasisProduct, 7>, 7>;

ProductTable product_table(OctonionVariant v);
// Reference tables of the two multiplications, entered entry by entry.
ProductTable reference_table(OctonionVariant v);

// Random points with small rational coordinates.
Octonion random_octonion(std::mt19937_64& rng, long range = 5);
Quaternion random_unit_quaternion(std::mt19937_64& rng, long range = 5);
Octonion random_s6_point(std::mt19937_64& rng, long range = 5);
Octonion random_s6_tangent(const Octonion& u, std::mt19937_64& rng, long range = 5);
Octonion random_s2s4_point(std::mt19937_64& rng, long range = 5);
Octonion random_s2s4_tangent(const Octonion& u, std::mt19937_64& rng, long range = 5);

struct OctonionCheck {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<OctonionCheck> octonion_checks(std::uint64_t seed = 1, std::size_t samples = 100);

}  // namespace gkm
