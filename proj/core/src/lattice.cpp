#include "gkm/lattice.hpp"

#include <sstream>
#include <utility>

#include "gkm/errors.hpp"

namespace gkm {

Weight::Weight(std::initializer_list<long> xs) {
  c_.reserve(xs.size());
  for (long x : xs) c_.emplace_back(x);
}

bool Weight::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Weight Weight::operator+(const Weight& o) const {
  require_same_rank(*this, o);
  Weight r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  require_same_rank(*this, o);
  Weight r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Weight Weight::operator*(const mpz_class& k) const {
  Weight r(*this);
  for (auto& x : r.c_) x *= k;
  return r;
}

Weight operator*(const mpz_class& k, const Weight& w) { return w * k; }

std::string Weight::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ']';
  return os.str();
}

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw InputError("rank mismatch: " + a.str() + " vs " + b.str());
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) throw InputError("ragged matrix literal");
    for (long x : row) a_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<Weight>& ws, std::size_t rank) {
  IntegerMatrix m(rank, ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j) {
    if (ws[j].rank() != rank) throw InputError("rank mismatch in weight list");
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = ws[j][i];
  }
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (c_ != o.r_) throw InputError("matrix shape mismatch");
  IntegerMatrix r(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const mpz_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Weight IntegerMatrix::operator*(const Weight& w) const {
  if (c_ != w.rank()) throw InputError("matrix/weight shape mismatch");
  Weight r(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) r[i] += (*this)(i, j) * w[j];
  return r;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool IntegerMatrix::operator<(const IntegerMatrix& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  if (c_ != o.c_) return c_ < o.c_;
  return a_ < o.a_;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::add_row(std::size_t i, std::size_t j, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntegerMatrix::add_col(std::size_t i, std::size_t j, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < r_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::vector<long> IntegerMatrix::flat_longs() const {
  std::vector<long> out;
  for (const auto& x : a_) {
    if (!x.fits_slong_p()) throw DomainError("matrix entry exceeds machine range");
    out.push_back(x.get_si());
  }
  return out;
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < c_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

mpz_class det(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Floor-free Euclidean quotient used to reduce entries towards zero.
mpz_class quot(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm f{IntegerMatrix::identity(R), m, IntegerMatrix::identity(C)};
  IntegerMatrix& S = f.S;
  std::size_t t = 0;
  while (t < R && t < C) {
    // Pick the nonzero entry of least magnitude in the trailing block.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (S(i, j) != 0 && (pi == R || abs(S(i, j)) < abs(S(pi, pj)))) pi = i, pj = j;
    if (pi == R) break;
    S.swap_rows(t, pi);
    f.U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    f.V.swap_cols(t, pj);

    bool dirty = false;
    for (std::size_t i = t + 1; i < R; ++i) {
      if (S(i, t) == 0) continue;
      mpz_class q = quot(S(i, t), S(t, t));
      S.add_row(i, t, -q);
      f.U.add_row(i, t, -q);
      if (S(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      if (S(t, j) == 0) continue;
      mpz_class q = quot(S(t, j), S(t, t));
      S.add_col(j, t, -q);
      f.V.add_col(j, t, -q);
      if (S(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Enforce divisibility of the trailing block by the pivot.
    bool fixed = false;
    for (std::size_t i = t + 1; i < R && !fixed; ++i)
      for (std::size_t j = t + 1; j < C && !fixed; ++j)
        if (S(i, j) % S(t, t) != 0) {
          S.add_row(t, i, 1);
          f.U.add_row(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
    ++t;
  }
  return f;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  HermiteForm h{IntegerMatrix::identity(R), m, 0};
  IntegerMatrix& H = h.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    // Euclid down the column until a single nonzero entry remains at `row`.
    for (;;) {
      std::size_t p = R;
      for (std::size_t i = row; i < R; ++i)
        if (H(i, col) != 0 && (p == R || abs(H(i, col)) < abs(H(p, col)))) p = i;
      if (p == R) break;
      H.swap_rows(row, p);
      h.U.swap_rows(row, p);
      bool done = true;
      for (std::size_t i = row + 1; i < R; ++i) {
        if (H(i, col) == 0) continue;
        mpz_class q = quot(H(i, col), H(row, col));
        H.add_row(i, row, -q);
        h.U.add_row(i, row, -q);
        if (H(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      H.negate_row(row);
      h.U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(row, col).get_mpz_t());
      H.add_row(i, row, -q);
      h.U.add_row(i, row, -q);
    }
    ++row;
  }
  h.rank = row;
  return h;
}

std::optional<mpz_class> congruent(const Weight& u, const Weight& v, const Weight& w) {
  require_same_rank(u, v);
  require_same_rank(u, w);
  if (w.is_zero()) throw InputError("congruence modulo the zero weight");
  Weight d = u - v;
  std::optional<mpz_class> k;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] == 0) {
      if (d[i] != 0) return std::nullopt;
      continue;
    }
    if (d[i] % w[i] != 0) return std::nullopt;
    mpz_class q = d[i] / w[i];
    if (k && *k != q) return std::nullopt;
    k = q;
  }
  return k;
}

bool parallel(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool pairwise_independent(const std::vector<Weight>& ws) {
  if (ws.empty()) throw InputError("empty weight list");
  for (const auto& w : ws) require_same_rank(w, ws.front());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (parallel(ws[i], ws[j])) return false;
  }
  return true;
}

bool generates_lattice(const std::vector<Weight>& ws) {
  if (ws.empty()) return false;
  const std::size_t n = ws.front().rank();
  if (n == 0) return true;
  SmithForm f = smith_normal_form(IntegerMatrix::from_columns(ws, n));
  if (ws.size() < n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (f.S(i, i) != 1) return false;
  return true;
}

std::size_t rational_rank(const std::vector<Weight>& ws) {
  if (ws.empty()) return 0;
  return hermite_normal_form(IntegerMatrix::from_columns(ws, ws.front().rank())).rank;
}

}  // namespace gkm
