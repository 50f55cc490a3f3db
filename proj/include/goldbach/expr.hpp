#pragma once

// Small arithmetic-expression evaluator over intervals: +, -, *, /, ^, sqrt,
// exp, log, sin, cos, erf, abs, pow, plus named inputs x0, x1, ...  Used by
// the containment self-tests and the `oracle` CLI subcommand.

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "goldbach/interval.hpp"

namespace goldbach {

struct Expr {
  enum class Kind { kConst, kInput, kUnary, kBinary } kind;
  double value = 0;       // kConst
  int input = 0;          // kInput
  char op = 0;            // kBinary: + - * / ^
  std::string fn;         // kUnary: neg sqrt exp log sin cos erf abs
  std::unique_ptr<Expr> a, b;
};

using ExprPtr = std::unique_ptr<Expr>;

inline Interval iv_eval(const Expr& e, const std::vector<Interval>& inputs) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      return Interval(e.value);
    case Expr::Kind::kInput:
      if (e.input < 0 || e.input >= static_cast<int>(inputs.size()))
        throw domain_error("expression input index out of range");
      return inputs[e.input];
    case Expr::Kind::kUnary: {
      Interval v = iv_eval(*e.a, inputs);
      if (e.fn == "neg") return -v;
      if (e.fn == "sqrt") return sqrt(v);
      if (e.fn == "exp") return exp(v);
      if (e.fn == "log") return log(v);
      if (e.fn == "sin") return sin(v);
      if (e.fn == "cos") return cos(v);
      if (e.fn == "erf") return erf(v);
      if (e.fn == "abs") return abs(v);
      throw domain_error("unknown function: " + e.fn);
    }
    case Expr::Kind::kBinary: {
      Interval x = iv_eval(*e.a, inputs);
      Interval y = iv_eval(*e.b, inputs);
      switch (e.op) {
        case '+': return x + y;
        case '-': return x - y;
        case '*': return x * y;
        case '/': return y.contains_zero()
                      ? throw domain_error("division by interval containing 0")
                      : x / y;
        case '^': return pow(x, y);
      }
      throw domain_error("unknown operator");
    }
  }
  throw domain_error("corrupt expression node");
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ != s_.size()) throw domain_error("trailing input in expression");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    while (true) {
      if (eat('+')) e = binary('+', std::move(e), product());
      else if (eat('-')) e = binary('-', std::move(e), product());
      else return e;
    }
  }
  ExprPtr product() {
    ExprPtr e = power();
    while (true) {
      if (eat('*')) e = binary('*', std::move(e), power());
      else if (eat('/')) e = binary('/', std::move(e), power());
      else return e;
    }
  }
  ExprPtr power() {
    ExprPtr e = atom();
    if (eat('^')) e = binary('^', std::move(e), power());
    return e;
  }
  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw domain_error("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!eat(')')) throw domain_error("missing ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return unary("neg", atom());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t used = 0;
      double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::kConst;
      e->value = v;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "pi") {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::kConst;
        e->value = detail::kPiHi;  // callers needing tight pi use iv_pi()
        return e;
      }
      if (name.size() >= 2 && name[0] == 'x') {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::kInput;
        e->input = std::stoi(name.substr(1));
        return e;
      }
      if (!eat('(')) throw domain_error("expected '(' after " + name);
      ExprPtr arg = sum();
      if (!eat(')')) throw domain_error("missing ')' after " + name);
      return unary(name, std::move(arg));
    }
    throw domain_error(std::string("unexpected character '") + c + "'");
  }

  static ExprPtr unary(const std::string& fn, ExprPtr a) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::kUnary;
    e->fn = fn;
    e->a = std::move(a);
    return e;
  }
  static ExprPtr binary(char op, ExprPtr a, ExprPtr b) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::kBinary;
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) {
  return detail::ExprParser(text).parse();
}

inline Interval iv_eval(const std::string& text,
                        const std::vector<Interval>& inputs) {
  return iv_eval(*parse_expr(text), inputs);
}

}  // namespace goldbach
