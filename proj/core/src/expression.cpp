#include "digitop/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "digitop/error.hpp"

namespace digitop {

struct ScalarField::Node {
  enum class Op { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Call1, Call2 };

  Op op = Op::Constant;
  double value = 0.0;
  int var = 0;
  double (*f1)(double) = nullptr;
  double (*f2)(double, double) = nullptr;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(const double* p) const {
    switch (op) {
      case Op::Constant: return value;
      case Op::Variable: return p[var];
      case Op::Add: return args[0]->eval(p) + args[1]->eval(p);
      case Op::Sub: return args[0]->eval(p) - args[1]->eval(p);
      case Op::Mul: return args[0]->eval(p) * args[1]->eval(p);
      case Op::Div: return args[0]->eval(p) / args[1]->eval(p);
      case Op::Pow: return std::pow(args[0]->eval(p), args[1]->eval(p));
      case Op::Neg: return -args[0]->eval(p);
      case Op::Call1: return f1(args[0]->eval(p));
      case Op::Call2: return f2(args[0]->eval(p), args[1]->eval(p));
    }
    return 0.0;
  }
};

namespace {

using Node = ScalarField::Node;
using NodePtr = std::shared_ptr<const Node>;

double fabs1(double a) { return std::fabs(a); }
double fsin(double a) { return std::sin(a); }
double fcos(double a) { return std::cos(a); }
double ftan(double a) { return std::tan(a); }
double fexp(double a) { return std::exp(a); }
double flog(double a) { return std::log(a); }
double fsqrt(double a) { return std::sqrt(a); }
double fmin2(double a, double b) { return std::fmin(a, b); }
double fmax2(double a, double b) { return std::fmax(a, b); }
double fpow2(double a, double b) { return std::pow(a, b); }

struct Func1 {
  const char* name;
  double (*fn)(double);
};
struct Func2 {
  const char* name;
  double (*fn)(double, double);
};

constexpr Func1 kFunc1[] = {{"sin", fsin}, {"cos", fcos}, {"tan", ftan},  {"exp", fexp},
                            {"log", flog}, {"sqrt", fsqrt}, {"abs", fabs1}};
constexpr Func2 kFunc2[] = {{"min", fmin2}, {"max", fmax2}, {"pow", fpow2}};

NodePtr make(Node::Op op, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    auto n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

  int max_var = 0;

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression: " + what + " at offset " + std::to_string(pos_));
  }

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

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = make(Node::Op::Add, {lhs, term()});
      else if (eat('-'))
        lhs = make(Node::Op::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (eat('*'))
        lhs = make(Node::Op::Mul, {lhs, unary()});
      else if (eat('/'))
        lhs = make(Node::Op::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Node::Op::Neg, {unary()});
    if (eat('+')) return unary();
    auto base = primary();
    if (eat('^')) return make(Node::Op::Pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto n = expr();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string rest(s_.substr(pos_));
      char* end = nullptr;
      double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("bad number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      auto n = std::make_shared<Node>();
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "x" || name == "y" || name == "z") {
        auto n = std::make_shared<Node>();
        n->op = Node::Op::Variable;
        n->var = name[0] - 'x';
        max_var = std::max(max_var, n->var);
        return n;
      }
      if (name == "pi") {
        auto n = std::make_shared<Node>();
        n->value = std::numbers::pi;
        return n;
      }
      for (const auto& f : kFunc1) {
        if (name == f.name) {
          if (!eat('(')) fail("expected '(' after " + name);
          auto a = expr();
          if (!eat(')')) fail("expected ')'");
          auto n = std::make_shared<Node>();
          n->op = Node::Op::Call1;
          n->f1 = f.fn;
          n->args = {a};
          return n;
        }
      }
      for (const auto& f : kFunc2) {
        if (name == f.name) {
          if (!eat('(')) fail("expected '(' after " + name);
          auto a = expr();
          if (!eat(',')) fail("expected ','");
          auto b = expr();
          if (!eat(')')) fail("expected ')'");
          auto n = std::make_shared<Node>();
          n->op = Node::Op::Call2;
          n->f2 = f.fn;
          n->args = {a, b};
          return n;
        }
      }
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField ScalarField::parse(std::string_view text) {
  Parser p(text);
  ScalarField f;
  f.root_ = p.parse();
  f.text_ = std::string(text);
  f.dim_ = p.max_var >= 2 ? 3 : 2;
  return f;
}

double ScalarField::operator()(double x, double y, double z) const {
  const double p[3] = {x, y, z};
  return root_->eval(p);
}

}  // namespace digitop
