#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

using Monomial = std::vector<unsigned>;

// Sparse polynomial in t1..tn with rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}
  Polynomial(std::size_t nvars, const mpq_class& c);

  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const mpq_class& c = 1);

  std::size_t nvars() const { return n_; }
  const std::map<Monomial, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  mpq_class coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const mpq_class& c);

  // Total degree in the variables; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(unsigned deg) const;
  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpq_class& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  mpq_class evaluate(const std::vector<mpq_class>& pt) const;
  // Substitutes t_i -> sum_j m(j,i) t_j, so linear_form(w) maps to linear_form(m*w).
  Polynomial apply_linear(const IntegerMatrix& m) const;
  // Reduction modulo the linear form of w: eliminate the last variable with w_k != 0.
  Polynomial restrict_to_hyperplane(const Weight& w) const;
  // Returns g with f = linear_form(w) * g when exact.
  std::optional<Polynomial> divide_by_linear(const Weight& w) const;

  // Coordinates in monomials_of_degree(nvars, deg); requires homogeneity of that degree.
  RationalVector coordinates(unsigned deg) const;
  static Polynomial from_coordinates(std::size_t nvars, unsigned deg, const RationalVector& v);

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::map<Monomial, mpq_class> t_;
};

Polynomial operator*(const mpq_class& c, const Polynomial& p);

// Monomials of total degree d in n variables, in canonical descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);
std::size_t count_monomials(std::size_t n, unsigned d);

Polynomial linear_form(const Weight& w);
Polynomial elementary_symmetric(const std::vector<Weight>& ws, std::size_t i);
Polynomial product_of_linear_forms(const std::vector<Weight>& ws, std::size_t nvars);

// Parses the canonical grammar over t1..tn.
Polynomial parse_polynomial(const std::string& s, std::size_t nvars);

}  // namespace gkm
