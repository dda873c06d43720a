#include "gkm/cohomology.hpp"

#include <algorithm>

#include "gkm/errors.hpp"
#include "gkm/expression.hpp"

namespace gkm {

EquivariantClass EquivariantClass::constant(const GkmGraph& g, const Polynomial& p) {
  return EquivariantClass(std::vector<Polynomial>(g.num_vertices(), p));
}

bool EquivariantClass::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<unsigned> EquivariantClass::homogeneous_degree() const {
  std::optional<unsigned> d;
  for (const auto& p : v_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    unsigned pd = static_cast<unsigned>(p.degree());
    if (d && *d != pd) return std::nullopt;
    d = pd;
  }
  return d ? d : std::optional<unsigned>(0);
}

namespace {

void require_size(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.size() != b.size()) throw InputError("class tables have different vertex counts");
}

}  // namespace

EquivariantClass EquivariantClass::operator-() const {
  EquivariantClass r(*this);
  for (auto& p : r.v_) p = -p;
  return r;
}

EquivariantClass EquivariantClass::operator+(const EquivariantClass& o) const {
  require_size(*this, o);
  EquivariantClass r(*this);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& o) const {
  require_size(*this, o);
  EquivariantClass r(*this);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
  return r;
}

EquivariantClass EquivariantClass::operator*(const EquivariantClass& o) const {
  require_size(*this, o);
  EquivariantClass r(*this);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] *= o.v_[i];
  return r;
}

EquivariantClass EquivariantClass::operator*(const Polynomial& p) const {
  EquivariantClass r(*this);
  for (auto& q : r.v_) q *= p;
  return r;
}

EquivariantClass EquivariantClass::pow(unsigned e) const {
  EquivariantClass r(*this);
  for (auto& q : r.v_) q = q.pow(e);
  return r;
}

RationalVector EquivariantClass::coordinates(unsigned deg) const {
  RationalVector out;
  for (const auto& p : v_) {
    RationalVector c = p.coordinates(deg);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

EquivariantClass EquivariantClass::from_coordinates(const GkmGraph& g, unsigned deg,
                                                    const RationalVector& v) {
  const std::size_t n = g.torus_rank();
  const std::size_t N = count_monomials(n, deg);
  if (v.size() != N * g.num_vertices()) throw InputError("coordinate vector has wrong length");
  std::vector<Polynomial> vals;
  for (std::size_t i = 0; i < g.num_vertices(); ++i)
    vals.push_back(Polynomial::from_coordinates(
        n, deg, RationalVector(v.begin() + i * N, v.begin() + (i + 1) * N)));
  return EquivariantClass(std::move(vals));
}

EquivariantClass class_from_table(const GkmGraph& g, const std::map<std::string, Polynomial>& table) {
  std::vector<Polynomial> vals(g.num_vertices(), Polynomial(g.torus_rank()));
  std::vector<bool> seen(g.num_vertices(), false);
  for (const auto& [name, p] : table) {
    std::size_t v = g.vertex_index(name);
    if (p.nvars() != g.torus_rank()) throw InputError("class value at '" + name + "' has wrong variable count");
    vals[v] = p;
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw InputError("class table is missing vertex '" + g.vertex_name(v) + "'");
  return EquivariantClass(std::move(vals));
}

std::vector<std::string> congruence_failures(const GkmGraph& g, const EquivariantClass& c) {
  if (c.size() != g.num_vertices()) throw InputError("class table does not cover the graph");
  std::vector<std::string> bad;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Polynomial diff = c[g.edge_from(e)] - c[g.edge_to(e)];
    if (!diff.restrict_to_hyperplane(g.edges()[e].weight).is_zero()) bad.push_back(g.edges()[e].id);
  }
  return bad;
}

bool is_class(const GkmGraph& g, const EquivariantClass& c) { return congruence_failures(g, c).empty(); }

namespace {

unsigned half(unsigned degree) {
  if (degree % 2) throw InputError("odd degree " + std::to_string(degree) + " has no classes");
  return degree / 2;
}

// Rows expressing that (f_u - f_v) restricted to alpha(e) = 0 vanishes, per edge.
RationalMatrix constraint_matrix(const GkmGraph& g, unsigned deg) {
  const std::size_t n = g.torus_rank();
  const std::vector<Monomial> monos = monomials_of_degree(n, deg);
  const std::size_t N = monos.size();
  RationalMatrix m(0, N * g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Weight& w = g.edges()[e].weight;
    if (w.is_zero()) throw DomainError("edge '" + g.edges()[e].id + "' has zero weight");
    std::vector<RationalVector> restricted;
    for (const auto& mono : monos)
      restricted.push_back(Polynomial::monomial(mono).restrict_to_hyperplane(w).coordinates(deg));
    const std::size_t u = g.edge_from(e), v = g.edge_to(e);
    if (u == v) continue;
    for (std::size_t out = 0; out < N; ++out) {
      RationalVector row(N * g.num_vertices());
      bool nonzero = false;
      for (std::size_t j = 0; j < N; ++j) {
        const mpq_class& x = restricted[j][out];
        if (x == 0) continue;
        row[u * N + j] += x;
        row[v * N + j] -= x;
        nonzero = true;
      }
      if (nonzero) m.append_row(row);
    }
  }
  return m;
}

std::vector<RationalVector> kernel_vectors(const GkmGraph& g, unsigned deg) {
  RationalMatrix m = constraint_matrix(g, deg);
  if (m.rows() == 0) {
    const std::size_t total = count_monomials(g.torus_rank(), deg) * g.num_vertices();
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < total; ++i) {
      RationalVector v(total);
      v[i] = 1;
      basis.push_back(v);
    }
    return basis;
  }
  return m.nullspace();
}

// Coordinates of sum_i t_i * H^{deg-1}_T inside the degree-deg ambient space.
std::vector<RationalVector> decomposable_vectors(const GkmGraph& g, unsigned deg) {
  std::vector<RationalVector> out;
  if (deg == 0) return out;
  const std::size_t n = g.torus_rank();
  for (const auto& b : component_basis(g, 2 * (deg - 1)))
    for (std::size_t i = 0; i < n; ++i) out.push_back((b * Polynomial::variable(n, i)).coordinates(deg));
  return out;
}

}  // namespace

std::vector<EquivariantClass> component_basis(const GkmGraph& g, unsigned degree) {
  unsigned deg = half(degree);
  std::vector<EquivariantClass> out;
  for (const auto& v : kernel_vectors(g, deg)) out.push_back(EquivariantClass::from_coordinates(g, deg, v));
  return out;
}

std::size_t component_rank(const GkmGraph& g, unsigned degree) {
  unsigned deg = half(degree);
  RationalMatrix m = constraint_matrix(g, deg);
  return count_monomials(g.torus_rank(), deg) * g.num_vertices() - (m.rows() ? m.rank() : 0);
}

PoincareResult ordinary_poincare(const GkmGraph& g, unsigned max_degree) {
  PoincareResult r;
  const std::size_t n = g.torus_rank();
  const unsigned top = max_degree / 2;
  for (unsigned k = 0; k <= top; ++k) r.equivariant_ranks.push_back(component_rank(g, 2 * k));
  // (1 - s)^n in s = t^2.
  std::vector<mpz_class> factor(top + 1, 0);
  for (unsigned j = 0; j <= top && j <= n; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, j);
    factor[j] = (j % 2 ? -b : b);
  }
  r.coefficients.assign(max_degree + 1, 0);
  for (unsigned k = 0; k <= top; ++k) {
    mpz_class c = 0;
    for (unsigned j = 0; j <= k; ++j) c += factor[j] * r.equivariant_ranks[k - j];
    r.coefficients[2 * k] = c;
    if (c < 0) r.free = false;
  }
  return r;
}

std::size_t ordinary_dimension(const GkmGraph& g, unsigned degree) {
  unsigned deg = half(degree);
  return component_rank(g, degree) - span_rank(decomposable_vectors(g, deg));
}

std::vector<EquivariantClass> ordinary_basis(const GkmGraph& g, unsigned degree) {
  unsigned deg = half(degree);
  std::vector<RationalVector> span = decomposable_vectors(g, deg);
  std::size_t r = span_rank(span);
  std::vector<EquivariantClass> out;
  for (const auto& b : component_basis(g, degree)) {
    span.push_back(b.coordinates(deg));
    std::size_t r2 = span_rank(span);
    if (r2 > r) {
      out.push_back(b);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  return out;
}

RationalVector ordinary_image(const GkmGraph& g, const EquivariantClass& c,
                              const std::vector<EquivariantClass>& basis, unsigned degree) {
  unsigned deg = half(degree);
  if (!is_class(g, c)) throw DomainError("input table is not an equivariant class");
  std::vector<RationalVector> dec = decomposable_vectors(g, deg);
  std::size_t rdec = span_rank(dec);
  std::vector<RationalVector> cols;
  for (const auto& b : basis) {
    if (!is_class(g, b)) throw DomainError("basis table is not an equivariant class");
    cols.push_back(b.coordinates(deg));
  }
  std::vector<RationalVector> all = cols;
  all.insert(all.end(), dec.begin(), dec.end());
  if (span_rank(all) != rdec + cols.size())
    throw DomainError("basis images are linearly dependent in ordinary cohomology");
  if (cols.size() != component_rank(g, degree) - rdec)
    throw DomainError("basis images do not span ordinary cohomology in degree " + std::to_string(degree));
  RationalVector target = c.coordinates(deg);
  RationalMatrix a(target.size(), all.size());
  for (std::size_t j = 0; j < all.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) a(i, j) = all[j][i];
  auto x = a.solve(target);
  if (!x) throw DomainError("class lies outside the span of the basis");
  return RationalVector(x->begin(), x->begin() + static_cast<long>(cols.size()));
}

EquivariantClass evaluate_class_expression(const GkmGraph& g, const std::string& expr,
                                           const std::map<std::string, EquivariantClass>& named,
                                           const std::map<std::string, Weight>& weights) {
  const std::size_t n = g.torus_rank();
  Evaluator<EquivariantClass> ev;
  ev.constant = [&](const mpq_class& c) { return EquivariantClass::constant(g, Polynomial(n, c)); };
  ev.ident = [&](const std::string& name) {
    if (auto it = named.find(name); it != named.end()) return it->second;
    if (auto it = weights.find(name); it != weights.end())
      return EquivariantClass::constant(g, linear_form(it->second));
    if (name.size() >= 2 && name[0] == 't' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      std::size_t i = std::stoul(name.substr(1));
      if (i >= 1 && i <= n) return EquivariantClass::constant(g, Polynomial::variable(n, i - 1));
    }
    throw InputError("unknown name '" + name + "' in class expression");
  };
  ev.as_constant = [](const EquivariantClass& c) -> std::optional<mpq_class> {
    if (c.size() == 0 || !c[0].is_constant()) return std::nullopt;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != c[0]) return std::nullopt;
    return c[0].constant_term();
  };
  return ev(parse_expression(expr));
}

bool PresentationReport::pass() const {
  if (!invalid_generators.empty()) return false;
  for (const auto& [rel, ok] : relations)
    if (!ok) return false;
  for (const auto& d : degrees)
    if (d.spanned_rank != d.expected_rank || (d.integral && !*d.integral)) return false;
  return true;
}

namespace {

void generator_monomials(const std::vector<Generator>& gens, std::size_t i, unsigned left,
                         const EquivariantClass& acc, unsigned acc_deg,
                         std::vector<std::pair<EquivariantClass, unsigned>>& out) {
  if (i == gens.size()) {
    out.emplace_back(acc, acc_deg);
    return;
  }
  EquivariantClass cur = acc;
  unsigned d = 0;
  for (;;) {
    generator_monomials(gens, i + 1, left - d, cur, acc_deg + d, out);
    if (gens[i].degree == 0 || d + gens[i].degree > left) break;
    d += gens[i].degree;
    cur = cur * gens[i].table;
  }
}

bool saturated(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return true;
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j].get_den() != 1) return false;
      m(i, j) = rows[i][j].get_num();
    }
  SmithForm f = smith_normal_form(m);
  for (const auto& d : f.invariant_factors())
    if (d != 0 && d != 1) return false;
  return true;
}

}  // namespace

PresentationReport verify_presentation(const GkmGraph& g, const Presentation& p,
                                       unsigned integral_check_degree) {
  PresentationReport r;
  const std::size_t n = g.torus_rank();
  std::map<std::string, EquivariantClass> named;
  bool integral_gens = true;
  for (const auto& gen : p.generators) {
    if (gen.degree == 0 || gen.degree % 2) throw InputError("generator '" + gen.name + "' needs a positive even degree");
    auto hd = gen.table.homogeneous_degree();
    if (gen.table.size() != g.num_vertices() || !is_class(g, gen.table) || !hd ||
        (!gen.table.is_zero() && 2 * *hd != gen.degree))
      r.invalid_generators.push_back(gen.name);
    for (const auto& v : gen.table.values()) integral_gens = integral_gens && v.has_integer_coefficients();
    named.emplace(gen.name, gen.table);
  }
  if (!r.invalid_generators.empty()) return r;
  for (const auto& rel : p.relations)
    r.relations.emplace_back(rel, evaluate_class_expression(g, rel, named, p.weights).is_zero());

  std::vector<std::pair<EquivariantClass, unsigned>> gmonos;
  generator_monomials(p.generators, 0, p.max_degree, EquivariantClass::constant(g, Polynomial(n, 1)), 0,
                      gmonos);
  for (unsigned d = 0; d <= p.max_degree; d += 2) {
    DegreeCheck dc;
    dc.degree = d;
    dc.expected_rank = component_rank(g, d);
    std::vector<RationalVector> rows;
    for (const auto& [mono, md] : gmonos) {
      if (md > d) continue;
      for (const auto& tm : monomials_of_degree(n, (d - md) / 2))
        rows.push_back((mono * Polynomial::monomial(tm)).coordinates(d / 2));
    }
    dc.spanned_rank = span_rank(rows);
    if (d <= integral_check_degree && integral_gens) dc.integral = saturated(rows);
    r.degrees.push_back(dc);
  }
  return r;
}

}  // namespace gkm
