#pragma once

#include <gmpxx.h>

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"

namespace gkm {

EquivariantClass equivariant_chern(const GkmGraph& g, std::size_t i);

// Localization sum over vertices of c(p) / prod of weights at p. The result
// must be a constant; integrality is asserted when requested.
mpq_class integrate(const GkmGraph& g, const EquivariantClass& c, bool expect_integer = false);

struct ChernNumbers {
  mpq_class c1_cubed;
  mpq_class c1c2;
  mpq_class c3;
  mpq_class todd() const { return c1c2 / 24; }
};

ChernNumbers chern_numbers(const GkmGraph& g);
mpq_class todd(const GkmGraph& g);
EquivariantClass pontryagin(const GkmGraph& g);

// Localization for bare weight data (one multiset per fixed point).
mpq_class integrate_weight_data(const std::vector<std::vector<Weight>>& fixed_points,
                                const std::vector<Polynomial>& values);
ChernNumbers chern_numbers_from_weights(const std::vector<std::vector<Weight>>& fixed_points);

}  // namespace gkm
