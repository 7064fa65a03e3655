#pragma once

// Integrand expressions in the single variable z.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-'? atom
//   atom   := number | 'z' | func '(' expr ')' | '(' expr ')'
//   func   := sin | cos | exp | log | abs | sqrt | sinh | cosh

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "improper/distint.hpp"

namespace improper {

enum class Func { Sin, Cos, Exp, Log, Abs, Sqrt, Sinh, Cosh };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

const char* to_string(Func f);
char to_char(BinaryOp op);

struct ExprNode;

class Expression {
 public:
  /// Non-negative literals become Number nodes, negative ones Negate(Number).
  static Expression number(double value);
  static Expression variable();
  static Expression negate(Expression operand);
  static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
  static Expression call(Func func, Expression arg);

  const ExprNode& node() const { return *node_; }

  double operator()(double z) const;

  /// Integrand view; the expression is shared, not copied.
  Integrand integrand(bool singular_origin = false) const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  explicit Expression(std::shared_ptr<const ExprNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

struct NumberNode {
  double value;
};
struct VariableNode {};
struct NegateNode {
  Expression operand;
};
struct BinaryNode {
  BinaryOp op;
  Expression lhs;
  Expression rhs;
};
struct CallNode {
  Func func;
  Expression arg;
};

struct ExprNode {
  std::variant<NumberNode, VariableNode, NegateNode, BinaryNode, CallNode> v;
};

/// Throws ParseError carrying the byte offset and the expected tokens.
Expression parse_expression(std::string_view source);

/// Fully parenthesised text that parses back to an equal tree. Literals are
/// written with 17 significant digits.
std::string print(const Expression& e);

}  // namespace improper
