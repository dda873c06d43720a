#include "gkm/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "gkm/errors.hpp"

namespace gkm {

GkmAutomorphism compose(const GkmAutomorphism& a, const GkmAutomorphism& b) {
  GkmAutomorphism r;
  r.vertex_map.resize(b.vertex_map.size());
  for (std::size_t i = 0; i < b.vertex_map.size(); ++i) r.vertex_map[i] = a.vertex_map[b.vertex_map[i]];
  r.edge_map.resize(b.edge_map.size());
  r.edge_reversed.resize(b.edge_map.size());
  for (std::size_t e = 0; e < b.edge_map.size(); ++e) {
    r.edge_map[e] = a.edge_map[b.edge_map[e]];
    r.edge_reversed[e] = a.edge_reversed[b.edge_map[e]] != b.edge_reversed[e];
  }
  r.psi = a.psi * b.psi;
  return r;
}

GkmAutomorphism inverse(const GkmAutomorphism& a) {
  GkmAutomorphism r = a;
  for (std::size_t i = 0; i < a.vertex_map.size(); ++i) r.vertex_map[a.vertex_map[i]] = i;
  for (std::size_t e = 0; e < a.edge_map.size(); ++e) {
    r.edge_map[a.edge_map[e]] = e;
    r.edge_reversed[a.edge_map[e]] = a.edge_reversed[e];
  }
  // psi is unimodular, so its inverse is integral: solve via the adjugate.
  const std::size_t n = a.psi.rows();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a.psi(i, j);
  IntegerMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector ej(n);
    ej[j] = 1;
    auto col = m.solve(ej);
    if (!col) throw DomainError("lattice map is singular");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*col)[i].get_den() != 1) throw DomainError("lattice map is not unimodular");
      inv(i, j) = (*col)[i].get_num();
    }
  }
  r.psi = inv;
  return r;
}

bool same_element(const GkmAutomorphism& a, const GkmAutomorphism& b) {
  return a.vertex_map == b.vertex_map && a.edge_map == b.edge_map && a.edge_reversed == b.edge_reversed &&
         a.psi == b.psi;
}

namespace {

bool is_identity(const GkmAutomorphism& a) {
  for (std::size_t i = 0; i < a.vertex_map.size(); ++i)
    if (a.vertex_map[i] != i) return false;
  for (std::size_t e = 0; e < a.edge_map.size(); ++e)
    if (a.edge_map[e] != e || a.edge_reversed[e]) return false;
  return a.psi.is_identity();
}

std::size_t find_element(const std::vector<GkmAutomorphism>& els, const GkmAutomorphism& x) {
  for (std::size_t i = 0; i < els.size(); ++i)
    if (same_element(els[i], x)) return i;
  return els.size();
}

std::set<std::size_t> generated(const std::vector<GkmAutomorphism>& els, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (std::size_t gi : gens) {
        std::size_t y = find_element(els, compose(els[gi], els[x]));
        if (y < els.size() && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

AutomorphismGroup gkm_automorphisms(const GkmGraph& g) {
  AutomorphismGroup grp;
  grp.elements = all_isomorphisms(g, g, true);
  std::sort(grp.elements.begin(), grp.elements.end(), [](const GkmAutomorphism& a, const GkmAutomorphism& b) {
    bool ia = is_identity(a), ib = is_identity(b);
    if (ia != ib) return ia;
    return std::tie(a.vertex_map, a.psi, a.edge_map) < std::tie(b.vertex_map, b.psi, b.edge_map);
  });
  if (grp.elements.empty() || !is_identity(grp.elements.front()))
    throw DomainError("automorphism search did not find the identity");
  std::set<std::size_t> reached{0};
  for (std::size_t i = 1; i < grp.elements.size() && reached.size() < grp.elements.size(); ++i) {
    if (reached.count(i)) continue;
    grp.generators.push_back(i);
    reached = generated(grp.elements, grp.generators);
  }
  return grp;
}

std::optional<std::string> check_group_axioms(const AutomorphismGroup& grp) {
  const auto& els = grp.elements;
  if (els.empty() || !is_identity(els[0])) return std::string("identity missing");
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (find_element(els, inverse(els[i])) == els.size())
      return "inverse of element " + std::to_string(i) + " missing";
    for (std::size_t j = 0; j < els.size(); ++j)
      if (find_element(els, compose(els[i], els[j])) == els.size())
        return "product of elements " + std::to_string(i) + " and " + std::to_string(j) + " missing";
  }
  return std::nullopt;
}

EquivariantClass act(const GkmGraph& g, const GkmAutomorphism& a, const EquivariantClass& c) {
  if (c.size() != g.num_vertices()) throw InputError("class table does not cover the graph");
  std::vector<Polynomial> out(c.size());
  for (std::size_t p = 0; p < c.size(); ++p) out[a.vertex_map[p]] = c[p].apply_linear(a.psi);
  return EquivariantClass(std::move(out));
}

RationalMatrix induced_action(const GkmGraph& g, const GkmAutomorphism& a, unsigned degree) {
  std::vector<EquivariantClass> basis = ordinary_basis(g, degree);
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    RationalVector col = ordinary_image(g, act(g, a, basis[j]), basis, degree);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<std::size_t> aut_star(const GkmGraph& g, const AutomorphismGroup& grp) {
  // Precompute bases once per degree.
  std::vector<std::size_t> out;
  std::map<unsigned, std::vector<EquivariantClass>> bases;
  for (unsigned d : {2u, 4u, 6u}) bases[d] = ordinary_basis(g, d);
  for (std::size_t i = 0; i < grp.elements.size(); ++i) {
    bool trivial = true;
    for (unsigned d : {2u, 4u, 6u}) {
      const auto& basis = bases[d];
      for (std::size_t j = 0; j < basis.size() && trivial; ++j) {
        RationalVector col = ordinary_image(g, act(g, grp.elements[i], basis[j]), basis, d);
        for (std::size_t r = 0; r < col.size(); ++r)
          if (col[r] != (r == j ? 1 : 0)) trivial = false;
      }
      if (!trivial) break;
    }
    if (trivial) out.push_back(i);
  }
  return out;
}

std::string cycle_notation(const GkmGraph& g, const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + g.vertex_name(j);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace gkm
