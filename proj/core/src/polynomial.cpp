#include "gkm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkm/errors.hpp"
#include "gkm/expression.hpp"

namespace gkm {

namespace {

unsigned total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Canonical order: higher total degree first, then lexicographically larger first.
bool canonical_before(const Monomial& a, const Monomial& b) {
  unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Monomial mul_mono(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void gen_monomials(std::size_t n, std::size_t i, unsigned left, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[i] = e;
    gen_monomials(n, i + 1, left - e, cur, out);
  }
}

void require_vars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw InputError("polynomial variable count mismatch: " + std::to_string(a.nvars()) +
                     " vs " + std::to_string(b.nvars()));
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, const mpq_class& c) : n_(nvars) {
  if (c != 0) t_[Monomial(nvars, 0)] = c;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return t_.empty() || (t_.size() == 1 && total(t_.begin()->first) == 0);
}

mpq_class Polynomial::constant_term() const { return coeff(Monomial(n_, 0)); }

mpq_class Polynomial::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.size() != n_) throw InputError("monomial length mismatch");
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(total(m)));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  unsigned d = total(t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (total(m) != d) return false;
  return true;
}

Polynomial Polynomial::homogeneous_part(unsigned deg) const {
  Polynomial r(n_);
  for (const auto& [m, c] : t_)
    if (total(m) == deg) r.t_.emplace(m, c);
  return r;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : t_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_vars(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_vars(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_vars(*this, o);
  Polynomial r(n_);
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(mul_mono(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r(*this);
  for (auto& [m, v] : r.t_) v *= c;
  return r;
}

Polynomial operator*(const mpq_class& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc(n_, 1), base(*this);
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& pt) const {
  if (pt.size() != n_) throw InputError("evaluation point has wrong length");
  mpq_class sum = 0;
  for (const auto& [m, c] : t_) {
    mpq_class v = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= pt[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::apply_linear(const IntegerMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw InputError("linear map has wrong shape");
  std::vector<std::vector<Polynomial>> powers(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Polynomial img(n_);
    for (std::size_t j = 0; j < n_; ++j) img.add_term(Polynomial::variable(n_, j).t_.begin()->first,
                                                       mpq_class(m(j, i)));
    powers[i].push_back(Polynomial(n_, 1));
    powers[i].push_back(img);
  }
  Polynomial r(n_);
  for (const auto& [mono, c] : t_) {
    Polynomial term(n_, c);
    for (std::size_t i = 0; i < n_; ++i) {
      while (powers[i].size() <= mono[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      term *= powers[i][mono[i]];
    }
    r += term;
  }
  return r;
}

namespace {

std::size_t pivot_index(const Weight& w, std::size_t n) {
  if (w.rank() != n) throw InputError("weight rank does not match polynomial ring");
  for (std::size_t k = n; k-- > 0;)
    if (w[k] != 0) return k;
  throw InputError("linear form of the zero weight");
}

}  // namespace

Polynomial Polynomial::restrict_to_hyperplane(const Weight& w) const {
  std::size_t k = pivot_index(w, n_);
  // t_k = -(sum_{j != k} w_j t_j) / w_k
  Polynomial sub(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (j == k || w[j] == 0) continue;
    Monomial m(n_, 0);
    m[j] = 1;
    sub.add_term(m, -mpq_class(w[j]) / mpq_class(w[k]));
  }
  std::vector<Polynomial> powers{Polynomial(n_, 1)};
  Polynomial r(n_);
  for (const auto& [mono, c] : t_) {
    while (powers.size() <= mono[k]) powers.push_back(powers.back() * sub);
    Monomial rest = mono;
    rest[k] = 0;
    r += Polynomial::monomial(rest, c) * powers[mono[k]];
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_by_linear(const Weight& w) const {
  std::size_t k = pivot_index(w, n_);
  const mpq_class lead(w[k]);
  Polynomial rem(*this), q(n_);
  for (;;) {
    // Highest power of t_k still present.
    auto it = std::max_element(rem.t_.begin(), rem.t_.end(),
                               [k](const auto& a, const auto& b) { return a.first[k] < b.first[k]; });
    if (it == rem.t_.end() || it->first[k] == 0) break;
    Monomial m = it->first;
    mpq_class c = it->second / lead;
    m[k] -= 1;
    q.add_term(m, c);
    for (std::size_t j = 0; j < n_; ++j) {
      if (w[j] == 0) continue;
      Monomial mj = m;
      mj[j] += 1;
      rem.add_term(mj, -c * mpq_class(w[j]));
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

RationalVector Polynomial::coordinates(unsigned deg) const {
  std::vector<Monomial> basis = monomials_of_degree(n_, deg);
  RationalVector v(basis.size());
  for (const auto& [m, c] : t_) {
    if (total(m) != deg) throw DomainError("polynomial " + str() + " is not homogeneous of degree " +
                                           std::to_string(deg));
    auto pos = std::lower_bound(basis.begin(), basis.end(), m, canonical_before);
    v[static_cast<std::size_t>(pos - basis.begin())] = c;
  }
  return v;
}

Polynomial Polynomial::from_coordinates(std::size_t nvars, unsigned deg, const RationalVector& v) {
  std::vector<Monomial> basis = monomials_of_degree(nvars, deg);
  if (v.size() != basis.size()) throw InputError("coordinate vector has wrong length");
  Polynomial p(nvars);
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  std::vector<Monomial> order;
  for (const auto& [m, c] : t_) order.push_back(m);
  std::sort(order.begin(), order.end(), canonical_before);
  std::ostringstream os;
  bool first = true;
  for (const auto& m : order) {
    mpq_class c = t_.at(m);
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  gen_monomials(n, 0, d, cur, out);
  return out;
}

std::size_t count_monomials(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), d + n - 1, n - 1);
  return r.get_ui();
}

Polynomial linear_form(const Weight& w) {
  Polynomial p(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) {
    Monomial m(w.rank(), 0);
    m[i] = 1;
    p.add_term(m, mpq_class(w[i]));
  }
  return p;
}

Polynomial elementary_symmetric(const std::vector<Weight>& ws, std::size_t i) {
  if (ws.empty()) {
    if (i == 0) throw InputError("elementary symmetric polynomial of an empty list needs a rank");
    throw InputError("index exceeds weight count");
  }
  if (i > ws.size()) throw InputError("index exceeds weight count");
  const std::size_t n = ws.front().rank();
  // e[j] after processing a prefix of ws.
  std::vector<Polynomial> e(i + 1, Polynomial(n));
  e[0] = Polynomial(n, 1);
  for (const auto& w : ws) {
    Polynomial l = linear_form(w);
    for (std::size_t j = i; j >= 1; --j) e[j] += e[j - 1] * l;
  }
  return e[i];
}

Polynomial product_of_linear_forms(const std::vector<Weight>& ws, std::size_t nvars) {
  Polynomial p(nvars, 1);
  for (const auto& w : ws) p *= linear_form(w);
  return p;
}

Polynomial parse_polynomial(const std::string& s, std::size_t nvars) {
  Evaluator<Polynomial> ev;
  ev.constant = [nvars](const mpq_class& c) { return Polynomial(nvars, c); };
  ev.ident = [nvars](const std::string& name) {
    if (name.size() >= 2 && name[0] == 't' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      std::size_t i = std::stoul(name.substr(1));
      if (i >= 1 && i <= nvars) return Polynomial::variable(nvars, i - 1);
    }
    throw InputError("unknown variable '" + name + "' (expected t1..t" + std::to_string(nvars) + ")");
  };
  ev.as_constant = [](const Polynomial& p) -> std::optional<mpq_class> {
    if (!p.is_constant()) return std::nullopt;
    return p.constant_term();
  };
  return ev(parse_expression(s));
}

}  // namespace gkm
