#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dirac_shell {

/// Real-valued arithmetic expression: + - * / ^, unary minus, parentheses,
/// the constants pi and e, named variables and the functions
/// sin cos tan asin acos atan sinh cosh tanh exp log sqrt abs.
class Expression {
public:
  /// Throws ParseError naming the offending position.
  static Expression parse(const std::string &text, const std::vector<std::string> &variables = {});

  double evaluate(std::span<const double> values = {}) const;
  double operator()(double x) const { return evaluate(std::span<const double>(&x, 1)); }

  const std::string &text() const { return text_; }
  const std::vector<std::string> &variables() const { return variables_; }

  struct Node;

private:
  std::string text_;
  std::vector<std::string> variables_;
  std::shared_ptr<const Node> root_;
};

/// Evaluates a constant expression such as "sqrt(5)" or "-pi/2".
double evaluate_constant(const std::string &text);

} // namespace dirac_shell
