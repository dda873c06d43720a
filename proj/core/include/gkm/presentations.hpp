#pragma once

#include <string>

#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"

namespace gkm {

// A catalog graph with generator tables and relations for its equivariant
// cohomology ring, plus expressions naming bases of H^2(M) and H^4(M).
struct CatalogPresentation {
  CatalogType type;
  GkmGraph graph;
  Presentation presentation;
  std::string h2_basis;
  std::string h4_basis;
};

// Uses a=(1,0), b=(0,1) (and c=(1,1) for P1); k selects the S member.
CatalogPresentation catalog_presentation(CatalogType t, long k = 0);

}  // namespace gkm
