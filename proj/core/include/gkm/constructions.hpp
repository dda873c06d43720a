#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

enum class CatalogType { P1, P2, P3, Q1, Q2, S, S6 };

struct CatalogParams {
  Weight a, b;
  std::optional<Weight> c;  // P1 only
  long k = 0;               // S only
};

std::string catalog_name(CatalogType t);
CatalogType parse_catalog_type(const std::string& name);

// Builds the named graph; rejects parameters that fail validation (and
// effectiveness when requested).
GkmGraph catalog(CatalogType t, const CatalogParams& p, bool require_effective = true);

// The standard parameters a=(1,0), b=(0,1), c=(1,1).
GkmGraph catalog_standard(CatalogType t, long k = 0);

// Case (E) figure before the change of basis b -> b - a.
GkmGraph fig_p2_graph(const Weight& a, const Weight& b);

GkmGraph blowup_vertex(const GkmGraph& g, const std::string& vertex);
GkmGraph blowup_edge(const GkmGraph& g, const std::string& edge_id,
                     std::optional<std::size_t> connection = std::nullopt);

struct GlueResult {
  GkmGraph graph;
  mpz_class k;  // c = a - k(a+b), d = b + k(a+b)
  Weight a, b, c, d;
};

GlueResult glue_s6(const GkmGraph& g1, const GkmGraph& g2,
                   const std::optional<std::string>& edge1 = std::nullopt,
                   const std::optional<std::string>& edge2 = std::nullopt);

}  // namespace gkm
