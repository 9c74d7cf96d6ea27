#include "dirac_shell/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>

#include "dirac_shell/types.hpp"

namespace dirac_shell {

struct Expression::Node {
  enum Kind { Number, Variable, Unary, Binary, Call } kind = Number;
  double number = 0.0;
  std::size_t variable = 0;
  char op = 0;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> a, b;

  double eval(std::span<const double> v) const {
    switch (kind) {
    case Number:
      return number;
    case Variable:
      return v[variable];
    case Unary:
      return -a->eval(v);
    case Call:
      return fn(a->eval(v));
    case Binary: {
      const double x = a->eval(v), y = b->eval(v);
      switch (op) {
      case '+': return x + y;
      case '-': return x - y;
      case '*': return x * y;
      case '/': return x / y;
      default: return std::pow(x, y);
      }
    }
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

const std::map<std::string, double (*)(double)> &functions() {
  static const std::map<std::string, double (*)(double)> f{
      {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
      {"tan", [](double x) { return std::tan(x); }},   {"asin", [](double x) { return std::asin(x); }},
      {"acos", [](double x) { return std::acos(x); }}, {"atan", [](double x) { return std::atan(x); }},
      {"sinh", [](double x) { return std::sinh(x); }}, {"cosh", [](double x) { return std::cosh(x); }},
      {"tanh", [](double x) { return std::tanh(x); }}, {"exp", [](double x) { return std::exp(x); }},
      {"log", [](double x) { return std::log(x); }},   {"sqrt", [](double x) { return std::sqrt(x); }},
      {"abs", [](double x) { return std::abs(x); }},
  };
  return f;
}

class Parser {
public:
  Parser(const std::string &s, const std::vector<std::string> &vars) : s_(s), vars_(vars) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr make(Expression::Node n) { return std::make_shared<const Expression::Node>(n); }
  static NodePtr binary(char op, NodePtr a, NodePtr b) {
    Expression::Node n;
      n.kind = Expression::Node::Binary;
    n.op = op;
    n.a = std::move(a);
    n.b = std::move(b);
    return make(n);
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+'))
        n = binary('+', n, term());
      else if (accept('-'))
        n = binary('-', n, term());
      else
        return n;
    }
  }
  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*'))
        n = binary('*', n, unary());
      else if (accept('/'))
        n = binary('/', n, unary());
      else
        return n;
    }
  }
  NodePtr unary() {
    if (accept('-')) {
      Expression::Node n;
      n.kind = Expression::Node::Unary;
      n.a = unary();
      return make(n);
    }
    if (accept('+'))
      return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^'))
      return binary('^', base, unary()); // right associative
    return base;
  }
  NodePtr primary() {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')'))
        fail("expected ')'");
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char *begin = s_.c_str() + pos_;
      char *end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin)
        fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      Expression::Node n;
      n.kind = Expression::Node::Number;
      n.number = v;
      return make(n);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) {
          Expression::Node n;
      n.kind = Expression::Node::Variable;
          n.variable = k;
          return make(n);
        }
      if (name == "pi" || name == "e") {
        Expression::Node n;
      n.kind = Expression::Node::Number;
        n.number = name == "pi" ? kPi : std::exp(1.0);
        return make(n);
      }
      auto it = functions().find(name);
      if (it == functions().end()) {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      if (!accept('('))
        fail("expected '(' after " + name);
      Expression::Node n;
      n.kind = Expression::Node::Call;
      n.fn = it->second;
      n.a = expr();
      if (!accept(')'))
        fail("expected ')'");
      return make(n);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string &s_;
  const std::vector<std::string> &vars_;
  std::size_t pos_ = 0;
};

} // namespace

Expression Expression::parse(const std::string &text, const std::vector<std::string> &variables) {
  Expression e;
  e.text_ = text;
  e.variables_ = variables;
  e.root_ = Parser(e.text_, e.variables_).parse();
  return e;
}

double Expression::evaluate(std::span<const double> values) const {
  if (values.size() < variables_.size())
    throw std::invalid_argument("Expression::evaluate: missing variable values");
  return root_->eval(values);
}

double evaluate_constant(const std::string &text) { return Expression::parse(text).evaluate(); }

} // namespace dirac_shell
