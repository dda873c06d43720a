#include "gkm/classify.hpp"

#include <functional>
#include <numeric>

#include "gkm/errors.hpp"

namespace gkm {

WeightCase parse_weight_case(const std::string& s) {
  static const std::map<std::string, WeightCase> m{{"A", WeightCase::A}, {"B", WeightCase::B},
                                                   {"C", WeightCase::C}, {"D", WeightCase::D},
                                                   {"E", WeightCase::E}, {"F", WeightCase::F}};
  auto it = m.find(s);
  if (it == m.end()) throw InputError("unknown case '" + s + "' (expected A-F)");
  return it->second;
}

std::string weight_case_name(WeightCase c) { return std::string(1, static_cast<char>('A' + static_cast<int>(c))); }

namespace {

using WS = std::vector<Weight>;

WeightData make(std::size_t n, std::vector<WS> ms) {
  WeightData wd;
  wd.torus_rank = n;
  for (std::size_t i = 0; i < ms.size(); ++i) wd.names.push_back("p" + std::to_string(i + 1));
  wd.multisets = std::move(ms);
  return wd;
}

// The verbatim lists in terms of a, b, c, d.
WeightData table(WeightCase cs, const Weight& a, const Weight& b, const Weight& c, const Weight& d) {
  const std::size_t n = a.rank();
  switch (cs) {
    case WeightCase::A:
      return make(n, {{a, b, c}, {-a, b - a, c - a}, {-b, a - b, c - b}, {-c, a - c, b - c}});
    case WeightCase::B:
      return make(n, {{a, a + b, a + b + b}, {-a, b, a + b + b}, {-a - b - b, -b, a}, {-a - b - b, -a - b, -a}});
    case WeightCase::D:
      return make(n, {{-a - b, a, b}, {-c - d, c, d}, {-a, -b, a + b}, {-c, -d, c + d}});
    case WeightCase::E: {
      Weight a3 = a + a + a;
      return make(n, {{-a3 - b, a, b}, {-a - a - b, a3 + b, a3 + b + b}, {-a, -a - b, a + a + b},
                      {-b, -a3 - b - b, a + b}});
    }
    case WeightCase::F:
      return make(n, {{-a - b, a + a + b, b}, {-a - a - b, a, b}, {-b, -a - a - b, a + b}, {-a, -b, a + a + b}});
    case WeightCase::C:
      break;
  }
  throw InputError("case C has no weight-parameter form");
}

const Weight& need(const CaseParams& p, const std::string& k) {
  auto it = p.weights.find(k);
  if (it == p.weights.end()) throw InputError("missing weight parameter '" + k + "'");
  return it->second;
}

void require_pairwise(const WeightData& wd) {
  for (std::size_t i = 0; i < wd.multisets.size(); ++i)
    if (!pairwise_independent(wd.multisets[i]))
      throw DomainError("weights at " + wd.names[i] + " are not pairwise independent");
}

mpz_class gcd(const mpz_class& x, const mpz_class& y) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

}  // namespace

WeightData case_weights(WeightCase c, const CaseParams& p) {
  if (p.weights.empty()) {
    std::vector<long> ints;
    for (const char* k : {"a", "b", "c", "d"})
      if (auto it = p.integers.find(k); it != p.integers.end()) {
        if (!it->second.fits_slong_p()) throw InputError("integer parameter out of range");
        ints.push_back(it->second.get_si());
      }
    return case_weights_rank1(c, ints);
  }
  const Weight& a = need(p, "a");
  const Weight& b = need(p, "b");
  require_same_rank(a, b);
  Weight cc(a.rank()), dd(a.rank());
  if (c == WeightCase::A) {
    cc = need(p, "c");
  } else if (c == WeightCase::D) {
    if (p.weights.count("c") || p.weights.count("d")) {
      cc = need(p, "c");
      dd = need(p, "d");
    } else {
      auto it = p.integers.find("k");
      if (it == p.integers.end()) throw InputError("case D needs c, d or k");
      Weight w = a + b;
      cc = a - w * it->second;
      dd = b + w * it->second;
    }
  } else if (c == WeightCase::C) {
    throw InputError("case C is a circle-action case; pass integer parameter a");
  }
  WeightData wd = table(c, a, b, cc, dd);
  require_pairwise(wd);
  return wd;
}

WeightData case_weights_rank1(WeightCase c, const std::vector<long>& v) {
  auto want = [&](std::size_t k) {
    if (v.size() != k)
      throw InputError("case " + weight_case_name(c) + " takes " + std::to_string(k) + " integer parameter(s)");
    for (long x : v)
      if (x <= 0) throw DomainError("case " + weight_case_name(c) + " parameters must be positive");
  };
  auto W = [](long x) { return Weight{x}; };
  switch (c) {
    case WeightCase::A: {
      want(3);
      if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) throw DomainError("case A needs mutually distinct a, b, c");
      if (gcd(gcd(v[0], v[1]), v[2]) != 1) throw DomainError("case A needs gcd(a,b,c) = 1");
      return table(c, W(v[0]), W(v[1]), W(v[2]), W(0));
    }
    case WeightCase::B:
    case WeightCase::E:
    case WeightCase::F:
      want(2);
      if (gcd(v[0], v[1]) != 1) throw DomainError("case " + weight_case_name(c) + " needs gcd(a,b) = 1");
      return table(c, W(v[0]), W(v[1]), W(0), W(0));
    case WeightCase::C: {
      want(1);
      long a = v[0];
      return make(1, {{W(1), W(2), W(3)}, {W(-1), W(1), W(a)}, {W(-1), W(-a), W(1)}, {W(-1), W(-2), W(-3)}});
    }
    case WeightCase::D:
      want(4);
      if (gcd(v[0], v[1]) != 1 || gcd(v[2], v[3]) != 1) throw DomainError("case D needs gcd(a,b) = gcd(c,d) = 1");
      return table(c, W(v[0]), W(v[1]), W(v[2]), W(v[3]));
  }
  throw InputError("unknown case");
}

namespace {

// Is there a bijection lp -> lq sending w to -w with all pairs congruent mod w?
bool congruence_match(const std::vector<Weight>& lp, std::size_t sp, const std::vector<Weight>& lq, std::size_t sq) {
  const Weight& w = lp[sp];
  std::vector<bool> used(lq.size(), false);
  used[sq] = true;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == lp.size()) return true;
    if (i == sp) return rec(i + 1);
    for (std::size_t j = 0; j < lq.size(); ++j) {
      if (used[j] || !congruent(lq[j], lp[i], w)) continue;
      used[j] = true;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return lp.size() == lq.size() && rec(0);
}

}  // namespace

std::vector<GkmGraph> enumerate_graphs(const WeightData& wd, const EnumerateOptions& opt) {
  const std::size_t V = wd.multisets.size();
  if (wd.names.size() != V) throw InputError("weight data names and multisets differ in length");
  for (const auto& ms : wd.multisets) {
    if (ms.empty()) throw InputError("empty weight multiset");
    for (const auto& w : ms)
      if (w.rank() != wd.torus_rank) throw InputError("weight " + w.str() + " has wrong rank");
  }
  struct Slot {
    std::size_t v, i;
  };
  std::vector<Slot> slots;
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t i = 0; i < wd.multisets[v].size(); ++i) slots.push_back({v, i});
  std::vector<bool> paired(slots.size(), false);
  std::vector<Edge> edges;
  std::vector<GkmGraph> out;

  auto emit = [&]() {
    GkmGraph g(wd.torus_rank, wd.names, edges);
    if (!validate(g, false).valid()) return;
    for (const auto& h : out)
      if (isomorphic(h, g, opt.dedup_gl)) return;
    out.push_back(g);
  };

  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < slots.size() && paired[first]) ++first;
    if (first == slots.size()) {
      emit();
      return;
    }
    const Slot s = slots[first];
    const Weight& w = wd.multisets[s.v][s.i];
    paired[first] = true;
    for (std::size_t j = first + 1; j < slots.size(); ++j) {
      if (paired[j]) continue;
      const Slot t = slots[j];
      if (t.v == s.v) continue;  // a loop would put w and -w at one vertex
      if (wd.multisets[t.v][t.i] != -w) continue;
      if (!congruence_match(wd.multisets[s.v], s.i, wd.multisets[t.v], t.i)) continue;
      paired[j] = true;
      edges.push_back(Edge{"e" + std::to_string(edges.size() + 1), wd.names[s.v], wd.names[t.v], w});
      rec();
      edges.pop_back();
      paired[j] = false;
    }
    paired[first] = false;
  };
  rec();
  return out;
}

DistinctnessReport distinctness_certificate() {
  DistinctnessReport r;
  struct Ref {
    const char* label;
    WeightCase c;
    std::vector<long> params;
    long c1c2, c13;
  };
  const std::vector<Ref> refs{{"A", WeightCase::A, {1, 2, 3}, 24, 64},
                              {"B", WeightCase::B, {1, 1}, 24, 54},
                              {"D", WeightCase::D, {1, 2, 3, 1}, 0, 0},
                              {"E", WeightCase::E, {1, 1}, 0, -8},
                              {"F", WeightCase::F, {1, 1}, 0, -2}};
  for (const auto& ref : refs) {
    WeightData wd = case_weights_rank1(ref.c, ref.params);
    ChernNumbers cn = chern_numbers_from_weights(wd.multisets);
    r.rows.push_back({ref.label, cn.c1c2, cn.c1_cubed, ref.c1c2, ref.c13});
    if (cn.c1c2 != ref.c1c2 || cn.c1_cubed != ref.c13) r.localization_matches = false;
  }
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t j = i + 1; j < r.rows.size(); ++j)
      if (r.rows[i].c1c2 == r.rows[j].c1c2 && r.rows[i].c1_cubed == r.rows[j].c1_cubed) r.pairwise_distinct = false;
  for (long a = 1; a <= 5; ++a) {
    WeightData wd = case_weights_rank1(WeightCase::C, {a});
    ChernNumbers cn = chern_numbers_from_weights(wd.multisets);
    DistinctnessRow row{"C(a=" + std::to_string(a) + ")", cn.c1c2, cn.c1_cubed, 24, 72 - 2 * a * a};
    if (cn.c1c2 != row.expected_c1c2 || cn.c1_cubed != row.expected_c1_cubed) r.localization_matches = false;
    bool coincides = false;
    for (const auto& other : r.rows)
      if (other.c1c2 == row.c1c2 && other.c1_cubed == row.c1_cubed) {
        coincides = true;
        if (a == 2 && other.label == "A") r.c2_is_a = true;
        if (a == 3 && other.label == "B") r.c3_is_b = true;
      }
    if ((a == 1 || a >= 4) && coincides) r.c_excluded = false;
    r.case_c.push_back(row);
  }
  return r;
}

}  // namespace gkm
