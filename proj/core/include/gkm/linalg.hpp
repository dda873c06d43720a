#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace gkm {

using RationalVector = std::vector<mpq_class>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  void append_row(const RationalVector& row);
  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {x : A x = 0}.
  std::vector<RationalVector> nullspace() const;
  // Some x with A x = b, if consistent.
  std::optional<RationalVector> solve(const RationalVector& b) const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<mpq_class> a_;
};

// Rank of the span of a list of vectors of equal length.
std::size_t span_rank(const std::vector<RationalVector>& vs);

}  // namespace gkm
