#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

using gkm::GkmGraph;
using gkm::Weight;

std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

void monomials(std::size_t n, unsigned d, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned k = 0; k <= d; ++k) {
    cur.push_back(k);
    monomials(n, d - k, cur, out);
    cur.pop_back();
  }
}

std::map<std::vector<unsigned>, std::size_t> monomial_index(std::size_t n, int d) {
  std::map<std::vector<unsigned>, std::size_t> idx;
  if (d < 0) return idx;
  std::vector<std::vector<unsigned>> ms;
  std::vector<unsigned> cur;
  monomials(n, static_cast<unsigned>(d), cur, ms);
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
  return idx;
}

}  // namespace

std::size_t component_rank(const GkmGraph& g, unsigned degree) {
  if (degree % 2) throw std::invalid_argument("odd degree");
  const int k = static_cast<int>(degree / 2);
  const std::size_t n = g.torus_rank();
  auto fk = monomial_index(n, k);
  auto gk = monomial_index(n, k - 1);
  const std::size_t nv = g.num_vertices(), ne = g.num_edges();
  const std::size_t unknowns = nv * fk.size() + ne * gk.size();
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t e = 0; e < ne; ++e) {
    const Weight& w = g.edges()[e].weight;
    for (const auto& [m, i] : fk) {
      std::vector<mpq_class> row(unknowns);
      row[g.edge_from(e) * fk.size() + i] += 1;
      row[g.edge_to(e) * fk.size() + i] -= 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (m[v] == 0 || w[v] == 0) continue;
        auto mm = m;
        --mm[v];
        row[nv * fk.size() + e * gk.size() + gk.at(mm)] -= mpq_class(w[v]);
      }
      rows.push_back(std::move(row));
    }
  }
  return unknowns - rank(rows);
}

namespace {

mpz_class binomial(long n, long r) {
  if (r < 0 || n < r) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

}  // namespace

mpz_class free_module_rank(const std::vector<mpz_class>& betti, std::size_t torus_rank, unsigned degree) {
  mpz_class total = 0;
  const long n = static_cast<long>(torus_rank);
  for (std::size_t j = 0; j < betti.size() && j <= degree; j += 2) {
    long free_deg = static_cast<long>((degree - j) / 2);
    total += betti[j] * binomial(free_deg + n - 1, n - 1);
  }
  return total;
}

mpq_class pair(const Weight& w, const std::vector<mpq_class>& x) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += mpq_class(w[i]) * x[i];
  return s;
}

std::vector<mpq_class> generic_point(const GkmGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
  for (;;) {
    std::vector<mpq_class> x(g.torus_rank());
    for (auto& c : x) {
      c = mpq_class(num(rng), den(rng));
      c.canonicalize();
    }
    bool ok = true;
    for (const auto& e : g.edges())
      if (pair(e.weight, x) == 0) ok = false;
    if (ok) return x;
  }
}

namespace {

Chern chern_at(const std::vector<std::vector<Weight>>& fps, const std::vector<mpq_class>& x) {
  Chern c{0, 0, 0};
  for (const auto& ws : fps) {
    std::vector<mpq_class> v;
    for (const auto& w : ws) v.push_back(pair(w, x));
    mpq_class s1 = 0, s2 = 0, s3 = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s1 += v[i];
      s3 *= v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) s2 += v[i] * v[j];
    }
    c.c1_cubed += s1 * s1 * s1 / s3;
    c.c1c2 += s1 * s2 / s3;
    c.c3 += s3 / s3;
  }
  return c;
}

Chern chern_consistent(const std::vector<std::vector<Weight>>& fps, std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
  std::optional<Chern> out;
  for (int trial = 0; trial < 3;) {
    std::vector<mpq_class> x(rank);
    for (auto& c : x) {
      c = mpq_class(num(rng), den(rng));
      c.canonicalize();
    }
    bool generic = true;
    for (const auto& ws : fps)
      for (const auto& w : ws)
        if (pair(w, x) == 0) generic = false;
    if (!generic) continue;
    Chern c = chern_at(fps, x);
    if (out && (out->c1_cubed != c.c1_cubed || out->c1c2 != c.c1c2 || out->c3 != c.c3))
      throw std::logic_error("Chern localization sum is not constant");
    out = c;
    ++trial;
  }
  return *out;
}

}  // namespace

Chern chern_numbers(const GkmGraph& g, std::mt19937_64& rng) {
  std::vector<std::vector<Weight>> fps;
  for (std::size_t p = 0; p < g.num_vertices(); ++p) {
    std::vector<Weight> ws;
    for (const auto& e : g.edges()) {
      if (e.from == g.vertex_name(p)) ws.push_back(e.weight);
      if (e.to == g.vertex_name(p)) ws.push_back(-e.weight);
    }
    fps.push_back(ws);
  }
  return chern_consistent(fps, g.torus_rank(), rng);
}

Chern chern_numbers(const std::vector<std::vector<Weight>>& fixed_points, std::mt19937_64& rng) {
  return chern_consistent(fixed_points, fixed_points.at(0).at(0).rank(), rng);
}

namespace {

using Labelled = std::multiset<std::tuple<std::size_t, std::size_t, std::vector<mpz_class>>>;

// Every oriented half-edge as (tail, head, weight).
Labelled half_edges(const GkmGraph& g, const std::vector<std::size_t>& perm, const std::vector<mpz_class>* psi) {
  Labelled out;
  const std::size_t n = g.torus_rank();
  for (const auto& e : g.edges()) {
    std::size_t u = perm[g.vertex_index(e.from)], v = perm[g.vertex_index(e.to)];
    std::vector<mpz_class> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!psi) {
        w[i] = e.weight[i];
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) w[i] += (*psi)[i * n + j] * e.weight[j];
    }
    std::vector<mpz_class> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -w[i];
    out.insert({u, v, w});
    out.insert({v, u, neg});
  }
  return out;
}

mpz_class det(std::vector<mpz_class> m, std::size_t n) {
  // Laplace expansion; n <= 3 here.
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  if (n == 3)
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  throw std::invalid_argument("oracle determinant supports rank <= 3");
}

std::vector<std::vector<mpz_class>> unimodular_matrices(std::size_t n, long bound) {
  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> m(n * n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      mpz_class d = det(m, n);
      if (d == 1 || d == -1) out.push_back(m);
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      m[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

long weight_bound(const GkmGraph& g) {
  long b = 1;
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < e.weight.rank(); ++i) b = std::max(b, std::abs(e.weight[i].get_si()));
  return b;
}

std::size_t count_matches(const GkmGraph& g1, const GkmGraph& g2, bool any_lattice, bool stop_at_first) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges() ||
      g1.torus_rank() != g2.torus_rank())
    return 0;
  std::vector<std::size_t> identity(g2.num_vertices());
  std::iota(identity.begin(), identity.end(), 0);
  const Labelled target = half_edges(g2, identity, nullptr);
  std::vector<std::vector<mpz_class>> psis;
  if (any_lattice) psis = unimodular_matrices(g1.torus_rank(), std::max(weight_bound(g1), weight_bound(g2)));
  std::size_t count = 0;
  std::vector<std::size_t> perm = identity;
  do {
    if (!any_lattice) {
      if (half_edges(g1, perm, nullptr) == target && (++count, stop_at_first)) return count;
      continue;
    }
    for (const auto& psi : psis)
      if (half_edges(g1, perm, &psi) == target && (++count, stop_at_first)) return count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

bool isomorphic_fixed_lattice(const GkmGraph& g1, const GkmGraph& g2) { return count_matches(g1, g2, false, true) > 0; }

bool isomorphic_any_lattice(const GkmGraph& g1, const GkmGraph& g2) { return count_matches(g1, g2, true, true) > 0; }

std::size_t automorphism_count(const GkmGraph& g) { return count_matches(g, g, true, false); }

const Table& table_pairs() {
  // Rows e1..e7, columns e1..e7; -1 is -e0.
  static const Table t{{
      {-1, 4, -3, 6, -5, -8, 7},
      {-4, -1, 2, 7, 8, -5, -6},
      {3, -2, -1, 8, -7, 6, -5},
      {-6, -7, -8, -1, 2, 3, 4},
      {5, -8, 7, -2, -1, -4, 3},
      {8, 5, -6, -3, 4, -1, -2},
      {-7, 6, 5, -4, -3, 2, -1},
  }};
  return t;
}

const Table& table_complex() {
  static const Table t{{
      {-1, 4, -3, 6, -5, 8, -7},
      {-4, -1, 2, -7, 8, 5, -6},
      {3, -2, -1, 8, 7, -6, -5},
      {-6, 7, -8, -1, 2, -3, 4},
      {5, -8, -7, -2, -1, 4, 3},
      {-8, -5, 6, 3, -4, -1, 2},
      {7, 6, 5, -4, -3, -2, -1},
  }};
  return t;
}

namespace {

using Q4 = std::array<mpq_class, 4>;

Q4 qmul(const Q4& a, const Q4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3], a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1]};
}

Q4 qconj(const Q4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

}  // namespace

std::array<mpq_class, 8> cayley_dickson(const std::array<mpq_class, 8>& x, const std::array<mpq_class, 8>& y) {
  Q4 a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]}, c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  Q4 ac = qmul(a, c), db = qmul(qconj(d), b), da = qmul(d, a), bc = qmul(b, qconj(c));
  std::array<mpq_class, 8> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = ac[i] - db[i];
    out[i + 4] = da[i] + bc[i];
  }
  return out;
}

}  // namespace oracle
