#pragma once

#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// numerator / (scale * prod of linear forms). Keeping the denominator factored
// makes cancellation of linear factors exact and detectable.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num) : num_(std::move(num)) {}
  RationalFunction(Polynomial num, std::vector<Weight> den_factors, mpq_class scale = 1);

  const Polynomial& numerator() const { return num_; }
  const std::vector<Weight>& denominator_factors() const { return den_; }
  const mpq_class& scale() const { return scale_; }
  Polynomial denominator() const;

  // Cancels every denominator factor that divides the numerator.
  RationalFunction reduced() const;
  bool is_polynomial() const { return den_.empty(); }
  // Numerator / scale when the denominator is trivial.
  Polynomial as_polynomial() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator-() const;
  // Equality by cross-multiplication.
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Polynomial num_;
  std::vector<Weight> den_;
  mpq_class scale_ = 1;
};

}  // namespace gkm
