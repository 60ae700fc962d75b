#include "mage/expr.hpp"

#include <cctype>

#include "mage/errors.hpp"

namespace mage {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> children) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->children = std::move(children);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = node(Expr::Kind::add, {lhs, term()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = node(Expr::Kind::mul, {lhs, factor()});
      } else if (accept('/')) {
        lhs = node(Expr::Kind::div, {lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) return node(Expr::Kind::negate, {factor()});
    ExprPtr base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      if (pos_ < s_.size() && s_[pos_] == '.') {
        pos_ = start;
        fail("exponent must be a non-negative integer");
      }
      auto digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      auto e = node(Expr::Kind::pow, {base});
      std::const_pointer_cast<Expr>(e)->exponent = std::stoul(std::string(digits));
      return e;
    }
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::constant;
      try {
        e->value = parse_rational(s_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        pos_ = start;
        fail("malformed number");
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::variable;
      try {
        e->var = classify_variable(s_.substr(start, pos_ - start), n_);
      } catch (const Error& err) {
        pos_ = start;
        fail(err.what());
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text, int n) {
  if (n < 2 || n > kMaxDimension) throw Error("n must be between 2 and 9");
  return Parser(text, n).run();
}

RationalFunction lower(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::constant:
      return RationalFunction(e.value);
    case K::variable:
      return RationalFunction::variable(e.var.name);
    case K::negate:
      return -lower(*e.children[0]);
    case K::pow:
      return pow(lower(*e.children[0]), static_cast<long>(e.exponent));
    case K::add:
      return lower(*e.children[0]) + lower(*e.children[1]);
    case K::sub:
      return lower(*e.children[0]) - lower(*e.children[1]);
    case K::mul:
      return lower(*e.children[0]) * lower(*e.children[1]);
    case K::div: {
      RationalFunction d = lower(*e.children[1]);
      if (d.is_zero()) throw DomainError("division by zero");
      return lower(*e.children[0]) / d;
    }
  }
  throw Error("internal: unknown expression node");
}

RationalFunction parse_function(std::string_view text, int n) { return lower(*parse(text, n)); }

std::string to_tree_string(const Expr& e) {
  using K = Expr::Kind;
  auto bin = [&](const char* name) {
    return std::string(name) + "(" + to_tree_string(*e.children[0]) + ", " + to_tree_string(*e.children[1]) + ")";
  };
  switch (e.kind) {
    case K::constant:
      return to_string(e.value);
    case K::variable:
      return e.var.name;
    case K::negate:
      return "Neg(" + to_tree_string(*e.children[0]) + ")";
    case K::pow:
      return "Pow(" + to_tree_string(*e.children[0]) + ", " + std::to_string(e.exponent) + ")";
    case K::add:
      return bin("Add");
    case K::sub:
      return bin("Sub");
    case K::mul:
      return bin("Mul");
    case K::div:
      return bin("Div");
  }
  return "?";
}

std::string format(const RationalFunction& f) { return to_string(f); }

}  // namespace mage
