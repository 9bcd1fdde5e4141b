#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace digitop {

/// Scalar field f(x, y[, z]) parsed from an infix expression. Supports
/// + - * / ^, unary minus, parentheses, the constant `pi`, and the functions
/// sin cos tan exp log sqrt abs (one argument) and min max pow (two).
class ScalarField {
 public:
  static ScalarField parse(std::string_view text);

  double operator()(double x, double y, double z = 0.0) const;

  /// 3 when the expression mentions z, otherwise 2.
  int dimension() const noexcept { return dim_; }
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  int dim_ = 2;
};

}  // namespace digitop
