#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkm/errors.hpp"

namespace gkm {

// Arithmetic expression over identifiers and rational literals:
//   expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom := integer | identifier | '(' expr ')'
struct Expr {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  mpq_class number;
  std::string name;
  unsigned exponent = 0;
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);
std::set<std::string> identifiers(const ExprPtr& e);

// Evaluates in any ring T with +, -, * and unary minus. Division is
// restricted to divisors that `as_constant` recognises as nonzero rationals.
template <class T>
struct Evaluator {
  std::function<T(const mpq_class&)> constant;
  std::function<T(const std::string&)> ident;
  std::function<std::optional<mpq_class>(const T&)> as_constant;

  T operator()(const ExprPtr& e) const {
    switch (e->kind) {
      case Expr::Kind::Number:
        return constant(e->number);
      case Expr::Kind::Ident:
        return ident(e->name);
      case Expr::Kind::Neg:
        return -(*this)(e->lhs);
      case Expr::Kind::Add:
        return (*this)(e->lhs) + (*this)(e->rhs);
      case Expr::Kind::Sub:
        return (*this)(e->lhs) - (*this)(e->rhs);
      case Expr::Kind::Mul:
        return (*this)(e->lhs) * (*this)(e->rhs);
      case Expr::Kind::Div: {
        T d = (*this)(e->rhs);
        std::optional<mpq_class> c = as_constant ? as_constant(d) : std::nullopt;
        if (!c || *c == 0) throw InputError("division by a non-constant or zero expression");
        return (*this)(e->lhs) * constant(1 / *c);
      }
      case Expr::Kind::Pow: {
        T base = (*this)(e->lhs);
        T acc = constant(1);
        for (unsigned i = 0; i < e->exponent; ++i) acc = acc * base;
        return acc;
      }
    }
    throw InputError("corrupt expression");
  }
};

}  // namespace gkm
