#include "gkm/expression.hpp"

#include <cctype>

namespace gkm {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression parse error at offset " + std::to_string(i_) + ": " + what +
                     " in \"" + s_ + "\"");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind k, ExprPtr l, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (eat('+'))
        e = node(Expr::Kind::Add, e, term());
      else if (eat('-'))
        e = node(Expr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (eat('*'))
        e = node(Expr::Kind::Mul, e, unary());
      else if (eat('/'))
        e = node(Expr::Kind::Div, e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (eat('-')) return node(Expr::Kind::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a non-negative integer exponent");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->lhs = base;
    e->exponent = static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start)));
    return e;
  }

  ExprPtr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->number = mpq_class(mpz_class(s_.substr(start, i_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Ident;
      e->name = s_.substr(start, i_ - start);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

void collect(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::Ident) out.insert(e->name);
  collect(e->lhs, out);
  collect(e->rhs, out);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::set<std::string> identifiers(const ExprPtr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

}  // namespace gkm
