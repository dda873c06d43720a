#include "gkm/linalg.hpp"

#include <utility>

#include "gkm/errors.hpp"

namespace gkm {

void RationalMatrix::append_row(const RationalVector& row) {
  if (r_ == 0 && a_.empty()) c_ = row.size();
  if (row.size() != c_) throw InputError("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++r_;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (c_ != o.r_) throw InputError("matrix shape mismatch");
  RationalMatrix r(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c_ && row < r_; ++col) {
    std::size_t p = row;
    while (p < r_ && sgn((*this)(p, col)) == 0) ++p;
    if (p == r_) continue;
    if (p != row)
      for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    mpq_class inv = 1 / (*this)(row, col);
    for (std::size_t j = col; j < c_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == row || sgn((*this)(i, col)) == 0) continue;
      mpq_class f = (*this)(i, col);
      for (std::size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m(*this);
  return m.rref().size();
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  RationalMatrix m(*this);
  std::vector<std::size_t> piv = m.rref();
  std::vector<bool> is_pivot(c_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < c_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(c_);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (b.size() != r_) throw InputError("right-hand side length mismatch");
  RationalMatrix aug(r_, c_ + 1);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, c_) = b[i];
  }
  std::vector<std::size_t> piv = aug.rref();
  if (!piv.empty() && piv.back() == c_) return std::nullopt;
  RationalVector x(c_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, c_);
  return x;
}

std::size_t span_rank(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return 0;
  RationalMatrix m;
  for (const auto& v : vs) m.append_row(v);
  return m.rank();
}

}  // namespace gkm
