#include "gkm/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

GkmGraph::GkmGraph(std::size_t torus_rank, std::vector<std::string> vertices, std::vector<Edge> edges)
    : rank_(torus_rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw InputError("graph has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw InputError("empty vertex name");
    if (!vindex_.emplace(vertices_[i], i).second)
      throw InputError("duplicate vertex name '" + vertices_[i] + "'");
  }
  for (const auto& e : edges_) {
    if (!vindex_.count(e.from)) throw InputError("edge '" + e.id + "' references unknown vertex '" + e.from + "'");
    if (!vindex_.count(e.to)) throw InputError("edge '" + e.id + "' references unknown vertex '" + e.to + "'");
    if (e.weight.rank() != rank_)
      throw InputError("edge '" + e.id + "' weight " + e.weight.str() + " does not have length " +
                       std::to_string(rank_));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.weight, a.id) < std::tie(b.from, b.to, b.weight, b.id);
  });
  slots_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id.empty()) throw InputError("empty edge id");
    if (!eindex_.emplace(e.id, i).second) throw InputError("duplicate edge id '" + e.id + "'");
    std::size_t u = vindex_.at(e.from), v = vindex_.at(e.to);
    ends_.emplace_back(u, v);
    slot_pos_.emplace_back(slots_[u].size(), 0);
    slots_[u].push_back(HalfEdge{i, false, u, v, e.weight});
    slot_pos_.back().second = slots_[v].size();
    slots_[v].push_back(HalfEdge{i, true, v, u, -e.weight});
  }
}

std::size_t GkmGraph::vertex_index(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

std::optional<std::size_t> GkmGraph::find_vertex(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::size_t GkmGraph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw InputError("unknown edge id '" + id + "'");
  return it->second;
}

std::vector<Weight> GkmGraph::weights_at(std::size_t v) const {
  std::vector<Weight> ws;
  for (const auto& h : slots_.at(v)) ws.push_back(h.weight);
  return ws;
}

std::optional<std::size_t> GkmGraph::valence() const {
  std::size_t d = slots_.front().size();
  for (const auto& s : slots_)
    if (s.size() != d) return std::nullopt;
  return d;
}

std::size_t GkmGraph::multiplicity(std::size_t u, std::size_t v) const {
  std::size_t m = 0;
  for (const auto& h : slots_.at(u))
    if (h.to == v && (u != v || !h.reversed)) ++m;
  return m;
}

GkmGraph GkmGraph::with_all_orientations_reversed() const {
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back(Edge{e.id, e.to, e.from, -e.weight});
  return GkmGraph(rank_, vertices_, es);
}

GkmGraph GkmGraph::transformed(const IntegerMatrix& psi) const {
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back(Edge{e.id, e.from, e.to, psi * e.weight});
  return GkmGraph(psi.rows(), vertices_, es);
}

GkmGraph GkmGraph::renamed(const std::map<std::string, std::string>& names) const {
  auto map = [&](const std::string& v) {
    auto it = names.find(v);
    return it == names.end() ? v : it->second;
  };
  std::vector<std::string> vs;
  for (const auto& v : vertices_) vs.push_back(map(v));
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back(Edge{e.id, map(e.from), map(e.to), e.weight});
  return GkmGraph(rank_, vs, es);
}

bool GkmGraph::operator==(const GkmGraph& o) const {
  if (rank_ != o.rank_ || vertices_ != o.vertices_ || edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge &a = edges_[i], &b = o.edges_[i];
    if (a.id != b.id || a.from != b.from || a.to != b.to || a.weight != b.weight) return false;
  }
  return true;
}

bool ValidationReport::valid() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

namespace {

void enumerate_bijections(const GkmGraph& g, std::size_t edge, bool first_only,
                          std::vector<SlotBijection>& out) {
  const std::size_t u = g.edge_from(edge), v = g.edge_to(edge);
  const auto& su = g.slots(u);
  const auto& sv = g.slots(v);
  if (su.size() != sv.size()) return;
  const Weight& w = g.edges()[edge].weight;
  const std::size_t own_u = g.slot_at_from(edge), own_v = g.slot_at_to(edge);
  SlotBijection cur(su.size(), 0);
  std::vector<bool> used(sv.size(), false);
  cur[own_u] = own_v;
  used[own_v] = true;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (first_only && !out.empty()) return;
    if (i == su.size()) {
      out.push_back(cur);
      return;
    }
    if (i == own_u) return rec(i + 1);
    for (std::size_t j = 0; j < sv.size(); ++j) {
      if (used[j]) continue;
      if (!congruent(sv[j].weight, su[i].weight, w)) continue;
      used[j] = true;
      cur[i] = j;
      rec(i + 1);
      used[j] = false;
    }
  };
  rec(0);
}

}  // namespace

std::vector<SlotBijection> connections_along(const GkmGraph& g, std::size_t edge) {
  if (edge >= g.num_edges()) throw InputError("edge index out of range");
  std::vector<SlotBijection> out;
  enumerate_bijections(g, edge, false, out);
  return out;
}

std::vector<SlotBijection> connections_along(const GkmGraph& g, const std::string& edge_id) {
  return connections_along(g, g.edge_index(edge_id));
}

ValidationReport validate(const GkmGraph& g, bool check_effective) {
  ValidationReport r;
  AxiomCheck regular{"regular", true, {}};
  auto val = g.valence();
  if (!val) {
    regular.pass = false;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      regular.witnesses.push_back(g.vertex_name(v) + ": valence " + std::to_string(g.degree(v)));
  }
  // Reversal holds by construction: each edge is stored once and reversed on demand.
  AxiomCheck reversal{"reversal", true, {}};
  AxiomCheck independence{"independence", true, {}};
  std::vector<bool> indep_ok(g.num_vertices(), true);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto ws = g.weights_at(v);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (ws[i].is_zero()) {
        indep_ok[v] = false;
        independence.witnesses.push_back(g.vertex_name(v) + ": zero weight");
      }
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (!ws[i].is_zero() && !ws[j].is_zero() && parallel(ws[i], ws[j])) {
          indep_ok[v] = false;
          independence.witnesses.push_back(g.vertex_name(v) + ": " + ws[i].str() + " and " +
                                           ws[j].str() + " are dependent");
        }
    }
  }
  independence.pass = independence.witnesses.empty();
  AxiomCheck congruence{"congruence", true, {}};
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t u = g.edge_from(e), v = g.edge_to(e);
    if (!indep_ok[u] || !indep_ok[v]) continue;
    if (g.degree(u) != g.degree(v)) {
      congruence.witnesses.push_back(g.edges()[e].id + ": endpoint valences differ");
      continue;
    }
    std::vector<SlotBijection> found;
    enumerate_bijections(g, e, true, found);
    if (found.empty())
      congruence.witnesses.push_back(g.edges()[e].id + ": no congruence bijection mod " +
                                     g.edges()[e].weight.str());
  }
  congruence.pass = congruence.witnesses.empty();
  r.axioms = {regular, reversal, independence, congruence};
  if (check_effective) {
    AxiomCheck eff{"effective", true, {}};
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (!generates_lattice(g.weights_at(v)))
        eff.witnesses.push_back(g.vertex_name(v) + ": weights do not generate the lattice");
    eff.pass = eff.witnesses.empty();
    r.effective = eff;
  }
  return r;
}

namespace {

std::vector<Weight> sorted(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

// Solves psi * src[i] = dst[i] for all i; requires src to span Q^n.
std::optional<IntegerMatrix> solve_lattice_map(const std::vector<Weight>& src,
                                               const std::vector<Weight>& dst, std::size_t n) {
  std::vector<std::size_t> basis;
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < src.size() && basis.size() < n; ++i) {
    RationalVector r;
    for (std::size_t k = 0; k < n; ++k) r.emplace_back(src[i][k]);
    rows.push_back(r);
    if (span_rank(rows) > basis.size())
      basis.push_back(i);
    else
      rows.pop_back();
  }
  if (basis.size() < n) return std::nullopt;
  RationalMatrix a(n, n);  // a = W_I^T
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) a(i, k) = src[basis[i]][k];
  IntegerMatrix psi(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    RationalVector b;
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(dst[basis[i]][r]);
    auto x = a.solve(b);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      if ((*x)[k].get_den() != 1) return std::nullopt;
      psi(r, k) = (*x)[k].get_num();
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i)
    if (psi * src[i] != dst[i]) return std::nullopt;
  mpz_class d = det(psi);
  if (d != 1 && d != -1) return std::nullopt;
  return psi;
}

std::optional<GraphMorphism> match_edges(const GkmGraph& g1, const GkmGraph& g2,
                                         const std::vector<std::size_t>& vmap,
                                         const IntegerMatrix& psi) {
  GraphMorphism m{vmap, std::vector<std::size_t>(g1.num_edges()),
                  std::vector<bool>(g1.num_edges(), false), psi};
  std::vector<bool> used(g2.num_edges(), false);
  for (std::size_t e = 0; e < g1.num_edges(); ++e) {
    std::size_t a = vmap[g1.edge_from(e)], b = vmap[g1.edge_to(e)];
    Weight w = psi * g1.edges()[e].weight;
    bool found = false;
    for (const auto& h : g2.slots(a)) {
      if (used[h.edge] || h.to != b || h.weight != w) continue;
      used[h.edge] = true;
      m.edge_map[e] = h.edge;
      m.edge_reversed[e] = h.reversed;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return m;
}

void permutations_of_groups(const std::vector<std::vector<std::size_t>>& groups, std::size_t gi,
                            std::vector<std::size_t>& cur,
                            const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (gi == groups.size()) {
    emit(cur);
    return;
  }
  std::vector<std::size_t> perm = groups[gi];
  std::sort(perm.begin(), perm.end());
  do {
    std::size_t base = cur.size();
    cur.insert(cur.end(), perm.begin(), perm.end());
    permutations_of_groups(groups, gi + 1, cur, emit);
    cur.resize(base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// All lattice maps compatible with a vertex bijection, derived from half-edge
// bijections at a base vertex whose weights span Q^n.
std::vector<IntegerMatrix> candidate_lattice_maps(const GkmGraph& g1, const GkmGraph& g2,
                                                  const std::vector<std::size_t>& vmap,
                                                  std::size_t base) {
  const std::size_t n = g1.torus_rank();
  const auto& s1 = g1.slots(base);
  const auto& s2 = g2.slots(vmap[base]);
  // Group half-edges at base by neighbour; the images must go to the mapped neighbour.
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> targets;
  std::map<std::size_t, std::size_t> group_of;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    auto [it, fresh] = group_of.try_emplace(s1[i].to, targets.size());
    if (fresh) {
      targets.emplace_back();
      for (std::size_t j = 0; j < s2.size(); ++j)
        if (s2[j].to == vmap[s1[i].to]) targets.back().push_back(j);
    }
  }
  std::vector<std::vector<std::size_t>> sources(targets.size());
  for (std::size_t i = 0; i < s1.size(); ++i) sources[group_of[s1[i].to]].push_back(i);
  for (std::size_t k = 0; k < targets.size(); ++k)
    if (sources[k].size() != targets[k].size()) return {};
  std::vector<Weight> src;
  for (const auto& grp : sources)
    for (std::size_t i : grp) src.push_back(s1[i].weight);
  std::set<IntegerMatrix> found;
  std::vector<std::size_t> cur;
  permutations_of_groups(targets, 0, cur, [&](const std::vector<std::size_t>& tgt) {
    std::vector<Weight> dst;
    for (std::size_t j : tgt) dst.push_back(s2[j].weight);
    if (auto psi = solve_lattice_map(src, dst, n)) found.insert(*psi);
  });
  return {found.begin(), found.end()};
}

}  // namespace

namespace {

std::vector<GraphMorphism> search_isomorphisms(const GkmGraph& g1, const GkmGraph& g2,
                                               bool allow_lattice_change, bool first_only) {
  std::vector<GraphMorphism> out;
  const std::size_t n1 = g1.num_vertices();
  if (n1 != g2.num_vertices() || g1.num_edges() != g2.num_edges() ||
      g1.torus_rank() != g2.torus_rank())
    return out;
  std::optional<std::size_t> base;
  if (allow_lattice_change) {
    for (std::size_t v = 0; v < n1 && !base; ++v)
      if (rational_rank(g1.weights_at(v)) == g1.torus_rank()) base = v;
    if (!base && g1.torus_rank() > 0)
      throw DomainError("no vertex has weights spanning the lattice; lattice map is underdetermined");
  }
  std::vector<std::vector<Weight>> lam1, lam2;
  for (std::size_t v = 0; v < n1; ++v) {
    lam1.push_back(sorted(g1.weights_at(v)));
    lam2.push_back(sorted(g2.weights_at(v)));
  }
  std::vector<std::size_t> vmap(n1);
  std::vector<bool> used(n1, false);
  const IntegerMatrix id = IntegerMatrix::identity(g1.torus_rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (first_only && !out.empty()) return;
    if (i == n1) {
      if (!allow_lattice_change || g1.torus_rank() == 0) {
        if (auto m = match_edges(g1, g2, vmap, id)) out.push_back(*m);
        return;
      }
      for (const auto& psi : candidate_lattice_maps(g1, g2, vmap, *base))
        if (auto m = match_edges(g1, g2, vmap, psi)) out.push_back(*m);
      return;
    }
    for (std::size_t j = 0; j < n1; ++j) {
      if (used[j] || g1.degree(i) != g2.degree(j)) continue;
      if (!allow_lattice_change && lam1[i] != lam2[j]) continue;
      bool ok = g1.multiplicity(i, i) == g2.multiplicity(j, j);
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = g1.multiplicity(i, k) == g2.multiplicity(j, vmap[k]);
      if (!ok) continue;
      used[j] = true;
      vmap[i] = j;
      rec(i + 1);
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<GraphMorphism> all_isomorphisms(const GkmGraph& g1, const GkmGraph& g2,
                                            bool allow_lattice_change) {
  return search_isomorphisms(g1, g2, allow_lattice_change, false);
}

std::optional<GraphMorphism> isomorphic(const GkmGraph& g1, const GkmGraph& g2,
                                        bool allow_lattice_change) {
  auto all = search_isomorphisms(g1, g2, allow_lattice_change, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace gkm
