#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Vertex table indexed like GkmGraph::vertices().
class EquivariantClass {
 public:
  EquivariantClass() = default;
  explicit EquivariantClass(std::vector<Polynomial> values) : v_(std::move(values)) {}
  static EquivariantClass constant(const GkmGraph& g, const Polynomial& p);

  std::size_t size() const { return v_.size(); }
  const Polynomial& operator[](std::size_t i) const { return v_[i]; }
  Polynomial& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Polynomial>& values() const { return v_; }

  bool is_zero() const;
  // Common homogeneous degree in the variables, or nullopt if mixed.
  std::optional<unsigned> homogeneous_degree() const;

  EquivariantClass operator-() const;
  EquivariantClass operator+(const EquivariantClass& o) const;
  EquivariantClass operator-(const EquivariantClass& o) const;
  EquivariantClass operator*(const EquivariantClass& o) const;
  EquivariantClass operator*(const Polynomial& p) const;
  EquivariantClass pow(unsigned e) const;
  bool operator==(const EquivariantClass& o) const { return v_ == o.v_; }
  bool operator!=(const EquivariantClass& o) const { return v_ != o.v_; }

  // Concatenated monomial coordinates of a homogeneous class of polynomial degree deg.
  RationalVector coordinates(unsigned deg) const;
  static EquivariantClass from_coordinates(const GkmGraph& g, unsigned deg, const RationalVector& v);

 private:
  std::vector<Polynomial> v_;
};

// Builds a class from vertex name -> polynomial.
EquivariantClass class_from_table(const GkmGraph& g, const std::map<std::string, Polynomial>& table);

bool is_class(const GkmGraph& g, const EquivariantClass& c);
// Edges (ids) whose congruence fails.
std::vector<std::string> congruence_failures(const GkmGraph& g, const EquivariantClass& c);

// Topological degree is twice the polynomial degree throughout.
std::size_t component_rank(const GkmGraph& g, unsigned degree);
std::vector<EquivariantClass> component_basis(const GkmGraph& g, unsigned degree);

struct PoincareResult {
  std::vector<mpz_class> coefficients;  // index = topological degree
  bool free = true;
  std::vector<std::size_t> equivariant_ranks;  // index = degree / 2
};

PoincareResult ordinary_poincare(const GkmGraph& g, unsigned max_degree);

// Ordinary quotient H^d = H^d_T / sum_i t_i H^{d-2}_T.
std::size_t ordinary_dimension(const GkmGraph& g, unsigned degree);

// Coordinates of the image of c in H^d(M) in terms of the images of `basis`.
RationalVector ordinary_image(const GkmGraph& g, const EquivariantClass& c,
                              const std::vector<EquivariantClass>& basis, unsigned degree);

// Representatives of a basis of H^d(M), drawn from the rational class basis.
std::vector<EquivariantClass> ordinary_basis(const GkmGraph& g, unsigned degree);

struct Generator {
  std::string name;
  unsigned degree = 0;  // topological
  EquivariantClass table;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<std::string> relations;
  std::map<std::string, Weight> weights;  // named elements of H^2(BT) usable in expressions
  unsigned max_degree = 12;
};

// Evaluates an expression in generators, t1..tn and named weights.
EquivariantClass evaluate_class_expression(const GkmGraph& g, const std::string& expr,
                                           const std::map<std::string, EquivariantClass>& named,
                                           const std::map<std::string, Weight>& weights);

struct DegreeCheck {
  unsigned degree = 0;
  std::size_t expected_rank = 0;
  std::size_t spanned_rank = 0;
  std::optional<bool> integral;  // spanning set saturated in the integer lattice
};

struct PresentationReport {
  std::vector<std::string> invalid_generators;
  std::vector<std::pair<std::string, bool>> relations;
  std::vector<DegreeCheck> degrees;
  bool pass() const;
};

PresentationReport verify_presentation(const GkmGraph& g, const Presentation& p,
                                       unsigned integral_check_degree = 8);

}  // namespace gkm
