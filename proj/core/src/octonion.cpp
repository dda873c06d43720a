#include "gkm/octonion.hpp"

#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const auto &a = c_, &b = o.c_;
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion Quaternion::operator*(const mpq_class& s) const { return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s}; }

Quaternion Quaternion::conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

mpq_class Quaternion::norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

Quaternion Quaternion::inverse() const {
  mpq_class n = norm2();
  if (n == 0) throw DomainError("inverse of the zero quaternion");
  return conj() * mpq_class(1 / n);
}

Octonion Octonion::basis(std::size_t k) {
  Octonion x;
  x.c_.at(k) = 1;
  return x;
}

Octonion Octonion::from_pair(const Quaternion& p, const Quaternion& q) {
  return Octonion({p[0], p[1], p[2], p[3], q[0], q[1], q[2], q[3]});
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
  return r;
}

Octonion Octonion::operator*(const mpq_class& s) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = c_[i] * s;
  return r;
}

Octonion Octonion::conj() const {
  Octonion r = -*this;
  r.c_[0] = c_[0];
  return r;
}

mpq_class Octonion::norm2() const { return inner(*this, *this); }

std::string Octonion::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 8; ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ')';
  return os.str();
}

mpq_class inner(const Octonion& x, const Octonion& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

namespace {

using C = GaussianRational;
using C3 = std::array<C, 3>;

C complex_at(const Octonion& x, std::size_t slot) { return {x[2 * slot], x[2 * slot + 1]}; }

void split(const Octonion& x, C& a, C3& m) {
  a = complex_at(x, 0);
  for (std::size_t j = 0; j < 3; ++j) m[j] = complex_at(x, j + 1);
}

Octonion join(const C& a, const C3& m) {
  return Octonion({a.re, a.im, m[0].re, m[0].im, m[1].re, m[1].im, m[2].re, m[2].im});
}

Octonion mul_pairs(const Octonion& x, const Octonion& y) {
  Quaternion p1 = x.first(), q1 = x.second(), p2 = y.first(), q2 = y.second();
  return Octonion::from_pair(p1 * p2 - q2.conj() * q1, q2 * p1 + q1 * p2.conj());
}

Octonion mul_complex(const Octonion& x, const Octonion& y) {
  C a, b;
  C3 m, n;
  split(x, a, m);
  split(y, b, n);
  C dot{0, 0};
  for (std::size_t i = 0; i < 3; ++i) dot = dot + m[i] * n[i].conj();
  C3 cross{m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]};
  C3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = a * n[i] + b.conj() * m[i] - cross[i].conj();
  return join(a * b - dot, out);
}

}  // namespace

Octonion mul(const Octonion& x, const Octonion& y, OctonionVariant v) {
  return v == OctonionVariant::I ? mul_pairs(x, y) : mul_complex(x, y);
}

Octonion mul_as_printed(const Octonion& x, const Octonion& y) {
  Quaternion p1 = x.first(), q1 = x.second(), p2 = y.first(), q2 = y.second();
  return Octonion::from_pair(p1 * q1 - q2.conj() * q1, q2 * p1 + q1 * p2.conj());
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z, OctonionVariant v) {
  return mul(mul(x, y, v), z, v) - mul(x, mul(y, z, v), v);
}

Octonion iso_13(const Octonion& x) {
  Octonion r = x;
  r[6] = -x[6];  // -conj(m3) = -re + im*i
  return r;
}

namespace {

void require_unit(const Quaternion& q, const char* what) {
  if (q.norm2() != 1) throw DomainError(std::string(what) + " must be a unit quaternion");
}

}  // namespace

Octonion phi(const Quaternion& s, const Octonion& x) {
  require_unit(s, "s");
  Quaternion si = s.conj();
  return Octonion::from_pair(s * x.first() * si, x.second() * si);
}

Octonion psi(const Quaternion& t, const Octonion& x) {
  require_unit(t, "t");
  return Octonion::from_pair(x.first(), t * x.second());
}

Octonion s6_tangent_J(const Octonion& u, const Octonion& v) {
  if (!u.is_imaginary() || u.norm2() != 1) throw DomainError("u must be a unit imaginary octonion");
  if (!v.is_imaginary() || inner(u, v) != 0) throw DomainError("v must be imaginary and orthogonal to u");
  return mul(u, v, OctonionVariant::I);
}

namespace {

void split_s2s4(const Octonion& u, Octonion& n1, Octonion& n2) {
  n1 = Octonion();
  n2 = Octonion();
  for (std::size_t i = 1; i <= 3; ++i) n1[i] = u[i];
  n2[0] = u[0];
  for (std::size_t i = 4; i <= 7; ++i) n2[i] = u[i];
}

}  // namespace

Octonion s2s4_tangent_J(const Octonion& u, const Octonion& v) {
  Octonion n1, n2;
  split_s2s4(u, n1, n2);
  if (n1.norm2() != 1 || n2.norm2() != 1) throw DomainError("u is not on S^2 x S^4");
  if (inner(n1, v) != 0 || inner(n2, v) != 0) throw DomainError("v is not tangent at u");
  return mul(mul(n2, n1, OctonionVariant::I), v, OctonionVariant::I);
}

bool is_special_unitary(const ComplexMatrix3& a) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      C s{0, 0};
      for (std::size_t k = 0; k < 3; ++k) s = s + a[k][i].conj() * a[k][j];
      if (!(s == C{i == j ? 1 : 0, 0})) return false;
    }
  C det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return det == C{1, 0};
}

Octonion su3_apply(const ComplexMatrix3& a, const Octonion& x) {
  C s;
  C3 m, out;
  split(x, s, m);
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = C{0, 0};
    for (std::size_t j = 0; j < 3; ++j) out[i] = out[i] + a[i][j] * m[j];
  }
  return join(s, out);
}

bool su3_preserves(const ComplexMatrix3& a, std::size_t trials, std::mt19937_64& rng) {
  if (!is_special_unitary(a)) throw DomainError("matrix is not special unitary");
  for (std::size_t t = 0; t < trials; ++t) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    if (su3_apply(a, mul(x, y, OctonionVariant::II)) !=
        mul(su3_apply(a, x), su3_apply(a, y), OctonionVariant::II))
      return false;
  }
  return true;
}

ProductTable product_table(OctonionVariant v) {
  ProductTable t{};
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j) {
      Octonion p = mul(Octonion::basis(i), Octonion::basis(j), v);
      BasisProduct bp{0, 0};
      for (std::size_t k = 0; k < 8; ++k) {
        if (p[k] == 0) continue;
        if (bp.sign != 0 || (p[k] != 1 && p[k] != -1)) {
          bp = {0, 0};  // not of the form +-e_k
          break;
        }
        bp = {p[k] > 0 ? 1 : -1, k};
      }
      t[i - 1][j - 1] = bp;
    }
  return t;
}

namespace {

ProductTable parse_table(const std::array<std::array<const char*, 7>, 7>& rows) {
  ProductTable t{};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      std::string s = rows[i][j];
      int sign = 1;
      if (s[0] == '-') sign = -1, s = s.substr(1);
      t[i][j] = s == "1" ? BasisProduct{sign, 0} : BasisProduct{sign, static_cast<std::size_t>(s[1] - '0')};
    }
  return t;
}

}  // namespace

ProductTable reference_table(OctonionVariant v) {
  static const std::array<std::array<const char*, 7>, 7> pairs{{
      {"-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"},
      {"-e3", "-1", "e1", "e6", "e7", "-e4", "-e5"},
      {"e2", "-e1", "-1", "e7", "-e6", "e5", "-e4"},
      {"-e5", "-e6", "-e7", "-1", "e1", "e2", "e3"},
      {"e4", "-e7", "e6", "-e1", "-1", "-e3", "e2"},
      {"e7", "e4", "-e5", "-e2", "e3", "-1", "-e1"},
      {"-e6", "e5", "e4", "-e3", "-e2", "e1", "-1"},
  }};
  static const std::array<std::array<const char*, 7>, 7> complex{{
      {"-1", "e3", "-e2", "e5", "-e4", "e7", "-e6"},
      {"-e3", "-1", "e1", "-e6", "e7", "e4", "-e5"},
      {"e2", "-e1", "-1", "e7", "e6", "-e5", "-e4"},
      {"-e5", "e6", "-e7", "-1", "e1", "-e2", "e3"},
      {"e4", "-e7", "-e6", "-e1", "-1", "e3", "e2"},
      {"-e7", "-e4", "e5", "e2", "-e3", "-1", "e1"},
      {"e6", "e5", "e4", "-e3", "-e2", "-e1", "-1"},
  }};
  return parse_table(v == OctonionVariant::I ? pairs : complex);
}

namespace {

mpq_class random_rational(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Inverse stereographic projection of y in Q^m onto the unit sphere in Q^{m+1}.
std::vector<mpq_class> sphere_point(std::size_t m, std::mt19937_64& rng, long range) {
  std::vector<mpq_class> y(m);
  mpq_class r2 = 0;
  for (auto& c : y) {
    c = random_rational(rng, range);
    r2 += c * c;
  }
  std::vector<mpq_class> x(m + 1);
  for (std::size_t i = 0; i < m; ++i) x[i] = 2 * y[i] / (r2 + 1);
  x[m] = (r2 - 1) / (r2 + 1);
  return x;
}

}  // namespace

Octonion random_octonion(std::mt19937_64& rng, long range) {
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = random_rational(rng, range);
  return x;
}

Quaternion random_unit_quaternion(std::mt19937_64& rng, long range) {
  auto p = sphere_point(3, rng, range);
  return {p[0], p[1], p[2], p[3]};
}

Octonion random_s6_point(std::mt19937_64& rng, long range) {
  auto p = sphere_point(6, rng, range);
  Octonion u;
  for (std::size_t i = 0; i < 7; ++i) u[i + 1] = p[i];
  return u;
}

Octonion random_s6_tangent(const Octonion& u, std::mt19937_64& rng, long range) {
  Octonion v = random_octonion(rng, range);
  v[0] = 0;
  return v - u * inner(u, v);
}

Octonion random_s2s4_point(std::mt19937_64& rng, long range) {
  auto a = sphere_point(2, rng, range);
  auto b = sphere_point(4, rng, range);
  Octonion u;
  for (std::size_t i = 0; i < 3; ++i) u[i + 1] = a[i];
  u[0] = b[0];
  for (std::size_t i = 0; i < 4; ++i) u[i + 4] = b[i + 1];
  return u;
}

Octonion random_s2s4_tangent(const Octonion& u, std::mt19937_64& rng, long range) {
  Octonion n1, n2;
  split_s2s4(u, n1, n2);
  Octonion v = random_octonion(rng, range);
  return v - n1 * inner(n1, v) - n2 * inner(n2, v);
}

std::vector<OctonionCheck> octonion_checks(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::vector<OctonionCheck> out;
  using V = OctonionVariant;
  auto tables_equal = [](const ProductTable& a, const ProductTable& b) {
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (a[i][j].sign != b[i][j].sign || a[i][j].index != b[i][j].index) return false;
    return true;
  };
  out.push_back({"table_pairs", tables_equal(product_table(V::I), reference_table(V::I)),
                 "quaternion-pair product reproduces the first multiplication table"});
  out.push_back({"table_complex", tables_equal(product_table(V::II), reference_table(V::II)),
                 "C + C^3 product reproduces the second multiplication table"});
  {
    Octonion e0 = Octonion::basis(0);
    bool printed_fails = false;
    for (std::size_t k = 0; k < 8; ++k)
      if (mul_as_printed(e0, Octonion::basis(k)) != Octonion::basis(k)) printed_fails = true;
    out.push_back({"pair_formula_correction", printed_fails,
                   "with first component p1*q1, e0 is not a left identity; "
                   "the product p1*p2 - conj(q2)*q1 is used instead"});
  }
  for (V v : {V::I, V::II}) {
    bool ok = true;
    for (std::size_t i = 1; i <= 7; ++i) {
      if (mul(Octonion::basis(i), Octonion::basis(i), v) != -Octonion::basis(0)) ok = false;
      for (std::size_t j = 1; j <= 7; ++j) {
        if (i == j) continue;
        Octonion p = mul(Octonion::basis(i), Octonion::basis(j), v);
        if (p != -mul(Octonion::basis(j), Octonion::basis(i), v)) ok = false;
        auto bp = product_table(v)[i - 1][j - 1];
        if (bp.sign == 0 || bp.index == 0 || bp.index == i || bp.index == j) ok = false;
      }
    }
    out.push_back({v == V::I ? "basis_axioms_pairs" : "basis_axioms_complex", ok,
                   "e_k^2 = -1, anticommutation, products are +-e_k"});
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        Octonion x = Octonion::basis(i), y = Octonion::basis(j);
        if (iso_13(mul(x, y, V::I)) != mul(iso_13(x), iso_13(y), V::II)) ok = false;
      }
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      if (iso_13(mul(x, y, V::I)) != mul(iso_13(x), iso_13(y), V::II)) ok = false;
      if (iso_13(iso_13(x)) != x) ok = false;
    }
    out.push_back({"iso_13", ok, "homomorphism on all 64 basis pairs and random samples; involutive"});
  }
  {
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Quaternion sq = random_unit_quaternion(rng), tq = random_unit_quaternion(rng);
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      if (phi(sq, mul(x, y, V::I)) != mul(phi(sq, x), phi(sq, y), V::I)) ok = false;
      if (psi(tq, mul(x, y, V::I)) != mul(psi(tq, x), psi(tq, y), V::I)) ok = false;
      if (phi(sq, psi(tq, x)) != psi(tq, phi(sq, x))) ok = false;
    }
    Quaternion minus{-1, 0, 0, 0};
    Octonion x = random_octonion(rng);
    if (phi(minus, psi(minus, x)) != x) ok = false;
    out.push_back({"phi_psi_automorphisms", ok,
                   "phi_s and psi_t preserve the product, commute, and (-1,-1) acts trivially"});
  }
  {
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Quaternion sq = random_unit_quaternion(rng);
      Quaternion q = random_octonion(rng).second();
      if (q.norm2() == 0) continue;
      Quaternion p{random_rational(rng, 5), 0, 0, 0};
      Quaternion tq = q * sq * q.inverse();
      Octonion x = Octonion::from_pair(p, q);
      if (phi(sq, psi(tq, x)) != x) ok = false;
    }
    out.push_back({"isotropy_real_p", ok, "phi_s psi_t fixes (p,q) when Im p = 0 and t = q s q^-1"});
  }
  for (V v : {V::I, V::II}) {
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Octonion x = random_octonion(rng), y = random_octonion(rng);
      if (mul(x, y, v).norm2() != x.norm2() * y.norm2()) ok = false;
      if (associator(x, x, y, v) != Octonion() || associator(y, x, x, v) != Octonion()) ok = false;
    }
    out.push_back({v == V::I ? "norm_alternative_pairs" : "norm_alternative_complex", ok,
                   "|xy|^2 = |x|^2 |y|^2 and (x,x,y) = (y,x,x) = 0"});
  }
  {
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Octonion u = random_s6_point(rng), v = random_s6_tangent(u, rng);
      Octonion jv = s6_tangent_J(u, v);
      if (!jv.is_imaginary() || inner(u, jv) != 0) ok = false;
      if (ok && s6_tangent_J(u, jv) != -v) ok = false;
    }
    out.push_back({"s6_almost_complex", ok, "J_u v = u v is tangent and J^2 = -1"});
  }
  {
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      Octonion u = random_s2s4_point(rng), v = random_s2s4_tangent(u, rng);
      Octonion n1, n2;
      split_s2s4(u, n1, n2);
      Octonion jv = s2s4_tangent_J(u, v);
      if (inner(n1, jv) != 0 || inner(n2, jv) != 0) ok = false;
      if (ok && s2s4_tangent_J(u, jv) != -v) ok = false;
    }
    out.push_back({"s2s4_almost_complex", ok, "J_u v = (n2 n1) v is tangent and J^2 = -1"});
  }
  {
    C i{0, 1}, one{1, 0}, zero{0, 0}, m1{-1, 0};
    ComplexMatrix3 diag{{{i, zero, zero}, {zero, i, zero}, {zero, zero, m1}}};
    ComplexMatrix3 id{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    ComplexMatrix3 cyc{{{zero, zero, one}, {one, zero, zero}, {zero, one, zero}}};
    bool ok = su3_preserves(diag, samples, rng) && su3_preserves(id, samples, rng) &&
              su3_preserves(cyc, samples, rng);
    out.push_back({"su3_automorphisms", ok, "diag(i,i,-1), identity and a 3-cycle preserve the C + C^3 product"});
  }
  return out;
}

}  // namespace gkm
