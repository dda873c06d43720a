#include "gkm/constructions.hpp"

#include <set>

#include "gkm/errors.hpp"

namespace gkm {

std::string catalog_name(CatalogType t) {
  switch (t) {
    case CatalogType::P1: return "P1";
    case CatalogType::P2: return "P2";
    case CatalogType::P3: return "P3";
    case CatalogType::Q1: return "Q1";
    case CatalogType::Q2: return "Q2";
    case CatalogType::S: return "S";
    case CatalogType::S6: return "S6";
  }
  return "?";
}

CatalogType parse_catalog_type(const std::string& name) {
  for (auto t : {CatalogType::P1, CatalogType::P2, CatalogType::P3, CatalogType::Q1, CatalogType::Q2,
                 CatalogType::S, CatalogType::S6})
    if (catalog_name(t) == name) return t;
  throw InputError("unknown catalog type '" + name + "' (expected P1, P2, P3, Q1, Q2, S or S6)");
}

namespace {

Edge edge(const std::string& id, const std::string& from, const std::string& to, const Weight& w) {
  return Edge{id, from, to, w};
}

std::vector<std::string> four() { return {"p1", "p2", "p3", "p4"}; }

void check(const GkmGraph& g, const std::string& what, bool require_effective) {
  ValidationReport r = validate(g, require_effective);
  for (const auto& ax : r.axioms)
    if (!ax.pass)
      throw DomainError(what + " parameters violate the " + ax.name + " axiom: " + ax.witnesses.front());
  if (r.effective && !r.effective->pass)
    throw DomainError(what + " parameters do not give an effective action: " + r.effective->witnesses.front());
}

}  // namespace

GkmGraph catalog(CatalogType t, const CatalogParams& p, bool require_effective) {
  const Weight &a = p.a, &b = p.b;
  require_same_rank(a, b);
  const std::size_t n = a.rank();
  std::vector<Edge> es;
  std::vector<std::string> vs = four();
  switch (t) {
    case CatalogType::P1: {
      if (!p.c) throw InputError("P1 needs parameters a, b, c");
      const Weight& c = *p.c;
      require_same_rank(a, c);
      es = {edge("e1", "p1", "p2", a),     edge("e2", "p1", "p3", b),     edge("e3", "p1", "p4", c),
            edge("e4", "p2", "p3", b - a), edge("e5", "p3", "p4", c - b), edge("e6", "p4", "p2", a - c)};
      break;
    }
    case CatalogType::P2:
      es = {edge("e1", "p2", "p1", a),          edge("e2", "p3", "p1", b),
            edge("e3", "p4", "p1", -a - b),     edge("e4", "p2", "p3", b - a),
            edge("e5", "p3", "p4", -a - b - b), edge("e6", "p4", "p2", a + a + b)};
      break;
    case CatalogType::P3:
      // p1 = {a,b,-a-b}, p2 = {-a,b,a-b}, p3 = {-a,-b,a+b}, p4 = {a,-b,b-a}
      es = {edge("e1", "p1", "p2", a),     edge("e2", "p1", "p4", b), edge("e3", "p1", "p3", -a - b),
            edge("e4", "p2", "p4", a - b), edge("e5", "p2", "p3", b), edge("e6", "p4", "p3", a)};
      break;
    case CatalogType::Q1:
      es = {edge("e1", "p1", "p2", a - b), edge("e2", "p1", "p4", a + b), edge("e3", "p1", "p3", a),
            edge("e4", "p2", "p4", b),     edge("e5", "p2", "p3", a + b), edge("e6", "p4", "p3", a - b)};
      break;
    case CatalogType::Q2:
      es = {edge("e1", "p1", "p2", a - b), edge("e2", "p1", "p4", a + b), edge("e3", "p3", "p1", a),
            edge("e4", "p4", "p2", b),     edge("e5", "p2", "p3", a + b), edge("e6", "p4", "p3", a - b)};
      break;
    case CatalogType::S: {
      // p1 = {a,b,-a-b}, p2 = {a+b,-c,-d}, p3 = {-a,-b,a+b}, p4 = {c,d,-a-b}
      Weight w = a + b;
      Weight c = a - w * mpz_class(p.k), d = b + w * mpz_class(p.k);
      es = {edge("e1", "p2", "p1", w), edge("e2", "p1", "p3", a), edge("e3", "p1", "p3", b),
            edge("e4", "p4", "p2", c), edge("e5", "p4", "p2", d), edge("e6", "p3", "p4", w)};
      break;
    }
    case CatalogType::S6:
      vs = {"n", "s"};
      es = {edge("e1", "n", "s", a), edge("e2", "n", "s", b), edge("e3", "s", "n", a + b)};
      break;
  }
  GkmGraph g(n, vs, es);
  check(g, catalog_name(t), require_effective);
  return g;
}

GkmGraph catalog_standard(CatalogType t, long k) {
  CatalogParams p{Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, k};
  return catalog(t, p);
}

GkmGraph fig_p2_graph(const Weight& a, const Weight& b) {
  std::vector<Edge> es = {edge("e1", "p2", "p1", a),
                          edge("e2", "p3", "p1", a + b),
                          edge("e3", "p4", "p1", -(a + a + b)),
                          edge("e4", "p2", "p3", b),
                          edge("e5", "p3", "p4", -(a + a + a + b + b)),
                          edge("e6", "p4", "p2", a + a + a + b)};
  return GkmGraph(a.rank(), four(), es);
}

namespace {

std::string fresh_name(const GkmGraph& g, const std::string& base) {
  if (g.find_vertex(base)) throw DomainError("generated vertex name '" + base + "' collides with an existing vertex");
  return base;
}

std::string fresh_edge_id(const std::set<std::string>& used, const std::string& base) {
  if (used.count(base)) throw DomainError("generated edge id '" + base + "' collides with an existing edge");
  return base;
}

void require_independent(const std::vector<Weight>& ws, const std::string& vertex) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (ws[i].is_zero() || ws[j].is_zero() || parallel(ws[i], ws[j]))
        throw DomainError("independence fails at new vertex " + vertex + ": " + ws[i].str() + " and " +
                          ws[j].str());
}

}  // namespace

GkmGraph blowup_vertex(const GkmGraph& g, const std::string& vertex) {
  const std::size_t p = g.vertex_index(vertex);
  const auto& slots = g.slots(p);
  if (slots.size() != 3) throw DomainError("vertex blow-up needs a 3-valent vertex; '" + vertex + "' has valence " +
                                           std::to_string(slots.size()));
  for (const auto& h : slots)
    if (h.to == p) throw DomainError("vertex '" + vertex + "' carries a loop");
  std::vector<Weight> w;
  for (const auto& h : slots) w.push_back(h.weight);
  std::vector<std::string> q;
  for (std::size_t i = 0; i < 3; ++i) {
    q.push_back(fresh_name(g, vertex + "." + std::to_string(i + 1)));
    std::vector<Weight> lam{w[i]};
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) lam.push_back(w[j] - w[i]);
    require_independent(lam, q.back());
  }
  std::vector<std::string> vs;
  for (const auto& v : g.vertices())
    if (v != vertex) vs.push_back(v);
  vs.insert(vs.end(), q.begin(), q.end());
  std::vector<Edge> es;
  std::set<std::string> ids;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Edge ed = g.edges()[e];
    ids.insert(ed.id);
    for (std::size_t i = 0; i < 3; ++i)
      if (slots[i].edge == e) (slots[i].reversed ? ed.to : ed.from) = q[i];
    es.push_back(ed);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      es.push_back(Edge{fresh_edge_id(ids, vertex + ".x" + std::to_string(i + 1) + std::to_string(j + 1)), q[i],
                        q[j], w[j] - w[i]});
  return GkmGraph(g.torus_rank(), vs, es);
}

GkmGraph blowup_edge(const GkmGraph& g, const std::string& edge_id, std::optional<std::size_t> connection) {
  const std::size_t e = g.edge_index(edge_id);
  const std::size_t n = g.edge_from(e), s = g.edge_to(e);
  if (n == s) throw DomainError("cannot blow up along a loop");
  if (g.degree(n) != 3 || g.degree(s) != 3) throw DomainError("edge blow-up needs 3-valent endpoints");
  auto conns = connections_along(g, e);
  if (conns.empty()) throw DomainError("no connection along edge '" + edge_id + "'");
  std::size_t pick = 0;
  if (connection) {
    if (*connection >= conns.size())
      throw DomainError("connection index " + std::to_string(*connection) + " out of range; edge '" + edge_id +
                        "' has " + std::to_string(conns.size()) + " connection(s)");
    pick = *connection;
  } else if (conns.size() > 1) {
    throw DomainError("ambiguous connection along edge '" + edge_id + "': " + std::to_string(conns.size()) +
                      " choices; pass a connection index");
  }
  const SlotBijection& conn = conns[pick];
  const Weight& w = g.edges()[e].weight;
  const auto& sn = g.slots(n);
  const auto& ss = g.slots(s);
  std::vector<std::size_t> un;  // the two normal slots at n, in slot order
  for (std::size_t i = 0; i < sn.size(); ++i)
    if (i != g.slot_at_from(e)) un.push_back(i);
  std::vector<std::size_t> vs_slot{conn[un[0]], conn[un[1]]};
  Weight u1 = sn[un[0]].weight, u2 = sn[un[1]].weight;
  Weight v1 = ss[vs_slot[0]].weight, v2 = ss[vs_slot[1]].weight;
  const std::string& nn = g.vertex_name(n);
  const std::string& sname = g.vertex_name(s);
  std::string n1 = fresh_name(g, nn + ".1"), n2 = fresh_name(g, nn + ".2");
  std::string s1 = fresh_name(g, sname + ".1"), s2 = fresh_name(g, sname + ".2");
  require_independent({w, u2 - u1, u1}, n1);
  require_independent({w, u1 - u2, u2}, n2);
  require_independent({-w, v2 - v1, v1}, s1);
  require_independent({-w, v1 - v2, v2}, s2);

  // New endpoint names for every slot at n and s.
  std::map<std::pair<std::size_t, std::size_t>, std::string> slot_owner;
  slot_owner[{n, un[0]}] = n1;
  slot_owner[{n, un[1]}] = n2;
  slot_owner[{s, vs_slot[0]}] = s1;
  slot_owner[{s, vs_slot[1]}] = s2;

  std::vector<std::string> verts;
  for (const auto& v : g.vertices())
    if (v != nn && v != sname) verts.push_back(v);
  verts.insert(verts.end(), {n1, n2, s1, s2});
  std::vector<Edge> es;
  std::set<std::string> ids;
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    ids.insert(g.edges()[f].id);
    if (f == e) continue;
    Edge ed = g.edges()[f];
    std::size_t a = g.edge_from(f), b = g.edge_to(f);
    if (a == n || a == s) ed.from = slot_owner.at({a, g.slot_at_from(f)});
    if (b == n || b == s) ed.to = slot_owner.at({b, g.slot_at_to(f)});
    es.push_back(ed);
  }
  es.push_back(Edge{fresh_edge_id(ids, edge_id + ".1"), n1, s1, w});
  es.push_back(Edge{fresh_edge_id(ids, edge_id + ".2"), n2, s2, w});
  es.push_back(Edge{fresh_edge_id(ids, edge_id + ".n"), n1, n2, u2 - u1});
  es.push_back(Edge{fresh_edge_id(ids, edge_id + ".s"), s1, s2, v2 - v1});
  return GkmGraph(g.torus_rank(), verts, es);
}

namespace {

struct S6Shape {
  std::size_t w_edge;
  std::size_t north, south;
  Weight a, b, w;
};

S6Shape s6_shape(const GkmGraph& g, const std::optional<std::string>& edge, const std::string& label) {
  if (g.num_vertices() != 2 || g.num_edges() != 3)
    throw DomainError(label + " is not an S6-shaped graph (2 vertices, 3 edges)");
  auto val = g.valence();
  if (!val || *val != 3) throw DomainError(label + " is not 3-valent");
  std::size_t we;
  if (edge) {
    we = g.edge_index(*edge);
  } else {
    // The w-edge is the one whose stored orientation differs from the other two.
    std::size_t forward = 0;
    for (std::size_t i = 0; i < 3; ++i) forward += g.edge_from(i) == 0;
    if (forward == 0 || forward == 3)
      throw DomainError(label + ": all edges share one orientation; name the w-edge explicitly");
    bool minority_forward = forward == 1;
    we = 3;
    for (std::size_t i = 0; i < 3; ++i)
      if ((g.edge_from(i) == 0) == minority_forward) we = i;
  }
  S6Shape sh{we, g.edge_to(we), g.edge_from(we), Weight(), Weight(), Weight()};
  if (sh.north == sh.south) throw DomainError(label + ": w-edge is a loop");
  std::vector<Weight> others;
  for (const auto& h : g.slots(sh.north))
    if (h.edge != we) others.push_back(h.weight);
  sh.a = others[0];
  sh.b = others[1];
  // Weight of the w-edge read from the south vertex towards the north vertex.
  sh.w = g.edges()[we].weight;
  return sh;
}

}  // namespace

GlueResult glue_s6(const GkmGraph& g1, const GkmGraph& g2, const std::optional<std::string>& edge1,
                   const std::optional<std::string>& edge2) {
  if (g1.torus_rank() != g2.torus_rank()) throw InputError("glue inputs have different torus ranks");
  S6Shape A = s6_shape(g1, edge1, "first graph"), B = s6_shape(g2, edge2, "second graph");
  if (A.a + A.b != A.w) throw DomainError("first graph: a + b = " + (A.a + A.b).str() + " differs from w = " + A.w.str());
  if (B.a + B.b != B.w) throw DomainError("second graph: c + d = " + (B.a + B.b).str() + " differs from w = " + B.w.str());
  if (A.w != B.w)
    throw DomainError("sums differ: a + b = " + A.w.str() + " but c + d = " + B.w.str());
  const Weight& w = A.w;
  std::optional<mpz_class> k;
  Weight c = B.a, d = B.b;
  for (int swap = 0; swap < 2 && !k; ++swap) {
    if (swap) std::swap(c, d);
    auto kc = congruent(A.a, c, w);  // a - c = k w
    auto kd = congruent(d, A.b, w);  // d - b = k w
    if (kc && kd && *kc == *kd) k = *kc;
  }
  if (!k)
    throw DomainError("congruence fails: {" + A.a.str() + "," + A.b.str() + "} is not congruent to {" + B.a.str() +
                      "," + B.b.str() + "} modulo " + w.str());
  std::vector<std::string> vs{"A.n", "A.s", "B.n", "B.s"};
  std::vector<Edge> es{Edge{"A.e1", "A.n", "A.s", A.a}, Edge{"A.e2", "A.n", "A.s", A.b},
                       Edge{"B.e1", "B.n", "B.s", c},   Edge{"B.e2", "B.n", "B.s", d},
                       Edge{"w1", "A.s", "B.n", w},     Edge{"w2", "B.s", "A.n", w}};
  GkmGraph g(g1.torus_rank(), vs, es);
  return GlueResult{g, *k, A.a, A.b, c, d};
}

}  // namespace gkm
