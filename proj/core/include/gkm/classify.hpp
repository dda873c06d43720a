#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gkm/chern.hpp"
#include "gkm/graph.hpp"

namespace gkm {

struct WeightData {
  std::size_t torus_rank = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Weight>> multisets;
};

enum class WeightCase { A, B, C, D, E, F };

WeightCase parse_weight_case(const std::string& s);
std::string weight_case_name(WeightCase c);

// Rank-1 parameters are integers; rank-2 parameters are weights.
// Case D accepts (a, b, c, d) or, in rank 2, (a, b) with k.
struct CaseParams {
  std::map<std::string, Weight> weights;
  std::map<std::string, mpz_class> integers;
};

WeightData case_weights(WeightCase c, const CaseParams& p);
WeightData case_weights_rank1(WeightCase c, const std::vector<long>& params);

struct EnumerateOptions {
  bool dedup_gl = false;
};

std::vector<GkmGraph> enumerate_graphs(const WeightData& wd, const EnumerateOptions& opt = {});

struct DistinctnessRow {
  std::string label;
  mpq_class c1c2, c1_cubed;
  mpq_class expected_c1c2, expected_c1_cubed;
};

struct DistinctnessReport {
  std::vector<DistinctnessRow> rows;     // A, B, D, E, F
  std::vector<DistinctnessRow> case_c;   // a = 1, 2, 3, 4, 5
  bool localization_matches = true;
  bool pairwise_distinct = true;
  bool c_excluded = true;  // a in {1,4,5} differs from every other case
  bool c2_is_a = false;
  bool c3_is_b = false;
  bool pass() const {
    return localization_matches && pairwise_distinct && c_excluded && c2_is_a && c3_is_b;
  }
};

DistinctnessReport distinctness_certificate();

}  // namespace gkm
