#pragma once

#include <map>
#include <string>

#include "gkm/classify.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"

namespace gkm {

inline constexpr const char* kGraphSchema = "gkm.graph/1";

// Graph documents: {"schema"?, "torus_rank": n, "vertices": [...], "edges": [{"id","from","to","weight"}]}.
// Parse errors and unknown keys raise InputError.
GkmGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const GkmGraph& g);

// Class tables: {"vertex": "polynomial", ...}. Entries may use t1..tn and the given weight names.
EquivariantClass parse_class_json(const GkmGraph& g, const std::string& text,
                                  const std::map<std::string, Weight>& weights = {});
std::string class_to_json(const GkmGraph& g, const EquivariantClass& c);

// {"generators": [{"name","degree","table"}], "relations": [...], "weights": {...}, "max_degree": D}.
Presentation parse_presentation_json(const GkmGraph& g, const std::string& text);
std::string presentation_to_json(const GkmGraph& g, const Presentation& p);

// {"torus_rank": n, "weights": {"vertex": [[...], ...]}}.
WeightData parse_weight_data_json(const std::string& text);
std::string weight_data_to_json(const WeightData& wd);

}  // namespace gkm
