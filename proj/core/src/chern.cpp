#include "gkm/chern.hpp"

#include "gkm/errors.hpp"
#include "gkm/rational_function.hpp"

namespace gkm {

EquivariantClass equivariant_chern(const GkmGraph& g, std::size_t i) {
  std::vector<Polynomial> vals;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto ws = g.weights_at(v);
    if (i > ws.size()) throw InputError("Chern class index exceeds valence");
    vals.push_back(i == 0 ? Polynomial(g.torus_rank(), 1) : elementary_symmetric(ws, i));
  }
  return EquivariantClass(std::move(vals));
}

mpq_class integrate_weight_data(const std::vector<std::vector<Weight>>& fixed_points,
                                const std::vector<Polynomial>& values) {
  if (fixed_points.size() != values.size()) throw InputError("one value per fixed point required");
  if (fixed_points.empty()) return 0;
  const std::size_t n = values.front().nvars();
  // Common denominator: the product of all Euler classes.
  std::vector<Weight> all;
  std::vector<Polynomial> euler;
  for (const auto& ws : fixed_points) {
    for (const auto& w : ws) {
      if (w.is_zero()) throw DomainError("zero weight at a fixed point");
      all.push_back(w);
    }
    euler.push_back(product_of_linear_forms(ws, n));
  }
  Polynomial num(n);
  for (std::size_t p = 0; p < fixed_points.size(); ++p) {
    Polynomial term = values[p];
    for (std::size_t q = 0; q < fixed_points.size(); ++q)
      if (q != p) term *= euler[q];
    num += term;
  }
  RationalFunction f(num, all);
  RationalFunction r = f.reduced();
  if (!r.is_polynomial())
    throw DomainError("localization sum is not a polynomial; input is not an equivariant class");
  Polynomial res = r.as_polynomial();
  if (!res.is_constant()) throw DomainError("localization sum is not constant: " + res.str());
  return res.constant_term();
}

mpq_class integrate(const GkmGraph& g, const EquivariantClass& c, bool expect_integer) {
  if (c.size() != g.num_vertices()) throw InputError("class table does not cover the graph");
  std::vector<std::vector<Weight>> fps;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) fps.push_back(g.weights_at(v));
  mpq_class r = integrate_weight_data(fps, c.values());
  if (expect_integer && r.get_den() != 1) throw DomainError("integral " + r.get_str() + " is not an integer");
  return r;
}

ChernNumbers chern_numbers(const GkmGraph& g) {
  auto val = g.valence();
  if (!val || *val != 3) throw DomainError("Chern numbers require a 3-valent graph");
  EquivariantClass c1 = equivariant_chern(g, 1), c2 = equivariant_chern(g, 2), c3 = equivariant_chern(g, 3);
  return ChernNumbers{integrate(g, c1.pow(3)), integrate(g, c1 * c2), integrate(g, c3)};
}

mpq_class todd(const GkmGraph& g) { return chern_numbers(g).todd(); }

EquivariantClass pontryagin(const GkmGraph& g) {
  EquivariantClass c1 = equivariant_chern(g, 1), c2 = equivariant_chern(g, 2);
  return c1 * c1 - c2 * Polynomial(g.torus_rank(), 2);
}

ChernNumbers chern_numbers_from_weights(const std::vector<std::vector<Weight>>& fixed_points) {
  if (fixed_points.empty()) throw InputError("no fixed points");
  std::vector<Polynomial> c13, c1c2, c3;
  for (const auto& ws : fixed_points) {
    if (ws.size() != 3) throw DomainError("Chern numbers require three weights per fixed point");
    Polynomial e1 = elementary_symmetric(ws, 1), e2 = elementary_symmetric(ws, 2);
    c13.push_back(e1.pow(3));
    c1c2.push_back(e1 * e2);
    c3.push_back(elementary_symmetric(ws, 3));
  }
  return ChernNumbers{integrate_weight_data(fixed_points, c13), integrate_weight_data(fixed_points, c1c2),
                      integrate_weight_data(fixed_points, c3)};
}

}  // namespace gkm
