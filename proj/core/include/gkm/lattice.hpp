#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Element of H^2(BT^n) = Z^n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : c_(n, 0) {}
  Weight(std::initializer_list<long> xs);
  explicit Weight(std::vector<mpz_class> xs) : c_(std::move(xs)) {}

  std::size_t rank() const { return c_.size(); }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  mpz_class& operator[](std::size_t i) { return c_[i]; }
  const std::vector<mpz_class>& coords() const { return c_; }

  bool is_zero() const;
  Weight operator-() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const mpz_class& k) const;
  bool operator==(const Weight& o) const { return c_ == o.c_; }
  bool operator!=(const Weight& o) const { return c_ != o.c_; }
  bool operator<(const Weight& o) const { return c_ < o.c_; }

  std::string str() const;

 private:
  std::vector<mpz_class> c_;
};

Weight operator*(const mpz_class& k, const Weight& w);

void require_same_rank(const Weight& a, const Weight& b);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  // Weights as columns.
  static IntegerMatrix from_columns(const std::vector<Weight>& ws, std::size_t rank);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  Weight operator*(const Weight& w) const;
  bool operator==(const IntegerMatrix& o) const;
  bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }
  bool operator<(const IntegerMatrix& o) const;
  IntegerMatrix transpose() const;
  bool is_identity() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& k);
  void add_col(std::size_t i, std::size_t j, const mpz_class& k);
  void negate_row(std::size_t i);

  std::vector<long> flat_longs() const;
  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<mpz_class> a_;
};

mpz_class det(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix U, S, V;  // U * m * V == S
  std::vector<mpz_class> invariant_factors() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix U, H;  // U * m == H, H in row echelon form with positive pivots
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntegerMatrix& m);

// Returns k with u - v = k*w when it exists.
std::optional<mpz_class> congruent(const Weight& u, const Weight& v, const Weight& w);

bool parallel(const Weight& a, const Weight& b);
bool pairwise_independent(const std::vector<Weight>& ws);
bool generates_lattice(const std::vector<Weight>& ws);
std::size_t rational_rank(const std::vector<Weight>& ws);

}  // namespace gkm
