#include "gkm/rational_function.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm {

RationalFunction::RationalFunction(Polynomial num, std::vector<Weight> den_factors, mpq_class scale)
    : num_(std::move(num)), den_(std::move(den_factors)), scale_(std::move(scale)) {
  if (scale_ == 0) throw DomainError("zero denominator");
  for (const auto& w : den_)
    if (w.is_zero()) throw DomainError("zero denominator factor");
  std::sort(den_.begin(), den_.end());
}

Polynomial RationalFunction::denominator() const {
  return product_of_linear_forms(den_, num_.nvars()) * scale_;
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction r(*this);
  std::vector<Weight> kept;
  for (const auto& w : r.den_) {
    if (auto q = r.num_.divide_by_linear(w))
      r.num_ = std::move(*q);
    else
      kept.push_back(w);
  }
  r.den_ = std::move(kept);
  return r;
}

Polynomial RationalFunction::as_polynomial() const {
  if (!den_.empty()) throw DomainError("rational function has a nontrivial denominator: " + str());
  return num_ * (1 / scale_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_)
    return RationalFunction(num_ * o.scale_ + o.num_ * scale_, den_, scale_ * o.scale_);
  std::vector<Weight> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  Polynomial n = num_ * product_of_linear_forms(o.den_, num_.nvars()) * o.scale_ +
                 o.num_ * product_of_linear_forms(den_, num_.nvars()) * scale_;
  return RationalFunction(std::move(n), std::move(den), scale_ * o.scale_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, scale_); }

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  std::vector<Weight> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return RationalFunction(num_ * o.num_, std::move(den), scale_ * o.scale_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.denominator() == o.num_ * denominator();
}

std::string RationalFunction::str() const {
  if (den_.empty() && scale_ == 1) return num_.str();
  return "(" + num_.str() + ")/(" + denominator().str() + ")";
}

}  // namespace gkm
