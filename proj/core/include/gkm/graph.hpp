#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"

namespace gkm {

struct Edge {
  std::string id;
  std::string from;
  std::string to;
  Weight weight;
};

// An edge seen from one endpoint; reversed edges carry the negated weight.
struct HalfEdge {
  std::size_t edge;
  bool reversed;
  std::size_t from;
  std::size_t to;
  Weight weight;
};

class GkmGraph {
 public:
  GkmGraph() = default;
  // Checks well-formedness only; vertices and edges are stored in canonical order.
  GkmGraph(std::size_t torus_rank, std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t torus_rank() const { return rank_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  std::size_t vertex_index(const std::string& name) const;
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::size_t edge_index(const std::string& id) const;
  std::size_t edge_from(std::size_t e) const { return ends_[e].first; }
  std::size_t edge_to(std::size_t e) const { return ends_[e].second; }

  // Outgoing half-edges at v in slot order.
  const std::vector<HalfEdge>& slots(std::size_t v) const { return slots_[v]; }
  std::vector<Weight> weights_at(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return slots_[v].size(); }
  // Common valence, or nullopt if the graph is not regular.
  std::optional<std::size_t> valence() const;
  // Slot index at the tail / head of edge e for its stored orientation.
  std::size_t slot_at_from(std::size_t e) const { return slot_pos_[e].first; }
  std::size_t slot_at_to(std::size_t e) const { return slot_pos_[e].second; }
  std::size_t multiplicity(std::size_t u, std::size_t v) const;

  GkmGraph with_all_orientations_reversed() const;
  GkmGraph transformed(const IntegerMatrix& psi) const;
  GkmGraph renamed(const std::map<std::string, std::string>& names) const;

  bool operator==(const GkmGraph& o) const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vindex_;
  std::map<std::string, std::size_t> eindex_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<HalfEdge>> slots_;
  std::vector<std::pair<std::size_t, std::size_t>> slot_pos_;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  std::vector<AxiomCheck> axioms;  // regular, reversal, independence, congruence
  std::optional<AxiomCheck> effective;
  bool valid() const;
  bool valid_and_effective() const { return valid() && (!effective || effective->pass); }
};

ValidationReport validate(const GkmGraph& g, bool check_effective);

// Maps slot index at i(e) to slot index at t(e), for the stored orientation of e.
using SlotBijection = std::vector<std::size_t>;

std::vector<SlotBijection> connections_along(const GkmGraph& g, const std::string& edge_id);
std::vector<SlotBijection> connections_along(const GkmGraph& g, std::size_t edge);

// Vertex map, edge map and lattice map with alpha2(edge_map(e)) = psi * alpha1(e),
// reading edge_map(e) in reverse when edge_reversed[e] is set.
struct GraphMorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
  std::vector<bool> edge_reversed;
  IntegerMatrix psi;
};

std::optional<GraphMorphism> isomorphic(const GkmGraph& g1, const GkmGraph& g2,
                                        bool allow_lattice_change);
std::vector<GraphMorphism> all_isomorphisms(const GkmGraph& g1, const GkmGraph& g2,
                                            bool allow_lattice_change);

}  // namespace gkm
