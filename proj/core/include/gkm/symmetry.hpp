#pragma once

#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

// A pair (phi, psi) with alpha(phi(e)) = psi * alpha(e).
using GkmAutomorphism = GraphMorphism;

struct AutomorphismGroup {
  std::vector<GkmAutomorphism> elements;  // identity first, then canonical order
  std::vector<std::size_t> generators;    // indices into elements
  std::size_t order() const { return elements.size(); }
};

GkmAutomorphism compose(const GkmAutomorphism& a, const GkmAutomorphism& b);  // a after b
GkmAutomorphism inverse(const GkmAutomorphism& a);
bool same_element(const GkmAutomorphism& a, const GkmAutomorphism& b);

AutomorphismGroup gkm_automorphisms(const GkmGraph& g);

// Checks closure, identity and inverses; returns a description of the first failure.
std::optional<std::string> check_group_axioms(const AutomorphismGroup& grp);

// (a . xi)(phi(p)) = psi(xi(p)).
EquivariantClass act(const GkmGraph& g, const GkmAutomorphism& a, const EquivariantClass& c);

// Matrix of the induced action on H^d(M) in the basis ordinary_basis(g, d)
// (column j = image of basis vector j).
RationalMatrix induced_action(const GkmGraph& g, const GkmAutomorphism& a, unsigned degree);

// Elements acting trivially on H^2, H^4 and H^6.
std::vector<std::size_t> aut_star(const GkmGraph& g, const AutomorphismGroup& grp);

std::string cycle_notation(const GkmGraph& g, const std::vector<std::size_t>& perm);

}  // namespace gkm
