#include "improper/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "improper/errors.hpp"

namespace improper {

namespace {

struct FuncName {
  Func func;
  std::string_view name;
};

constexpr std::array<FuncName, 8> kFunctions{{{Func::Sin, "sin"},
                                              {Func::Cos, "cos"},
                                              {Func::Exp, "exp"},
                                              {Func::Log, "log"},
                                              {Func::Abs, "abs"},
                                              {Func::Sqrt, "sqrt"},
                                              {Func::Sinh, "sinh"},
                                              {Func::Cosh, "cosh"}}};

double apply(Func f, double x) {
  switch (f) {
    case Func::Sin: return std::sin(x);
    case Func::Cos: return std::cos(x);
    case Func::Exp: return std::exp(x);
    case Func::Log: return std::log(x);
    case Func::Abs: return std::abs(x);
    case Func::Sqrt: return std::sqrt(x);
    case Func::Sinh: return std::sinh(x);
    case Func::Cosh: return std::cosh(x);
  }
  return 0.0;
}

bool is_zero_literal(const Expression& e) {
  if (const auto* n = std::get_if<NumberNode>(&e.node().v))
    return n->value == 0.0;
  if (const auto* neg = std::get_if<NegateNode>(&e.node().v))
    return is_zero_literal(neg->operand);
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression parse() {
    skip_space();
    if (pos_ == src_.size())
      throw ParseError("empty expression", 0, {"expression"});
    Expression e = expr();
    skip_space();
    if (pos_ != src_.size())
      fail(fmt::format("unexpected '{}'", src_[pos_]),
           {"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected) const {
    throw ParseError(fmt::format("{} at offset {}", what, pos_), pos_,
                     std::move(expected));
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = Expression::binary(BinaryOp::Add, lhs, term());
      else if (accept('-'))
        lhs = Expression::binary(BinaryOp::Sub, lhs, term());
      else
        return lhs;
    }
  }

  Expression term() {
    Expression lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expression::binary(BinaryOp::Mul, lhs, factor());
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        Expression rhs = factor();
        if (is_zero_literal(rhs))
          throw ParseError(
              fmt::format("division by literal zero at offset {}", at), at,
              {"nonzero divisor"});
        lhs = Expression::binary(BinaryOp::Div, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  Expression factor() {
    Expression base = unary();
    if (accept('^')) return Expression::binary(BinaryOp::Pow, base, factor());
    return base;
  }

  Expression unary() {
    if (accept('-')) return Expression::negate(atom());
    return atom();
  }

  Expression atom() {
    skip_space();
    if (pos_ == src_.size())
      fail("unexpected end of input", {"number", "z", "function", "("});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      if (!accept(')')) fail("missing ')'", {")"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(fmt::format("unexpected '{}'", c), {"number", "z", "function", "("});
  }

  Expression number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number", {"digit"});
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
        ++pos_;
      if (digits() == 0) fail("malformed exponent", {"digit"});
    }
    const std::string text(src_.substr(start, pos_ - start));
    const double value = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(value)) {
      pos_ = start;
      fail("literal out of range", {"finite number"});
    }
    return Expression::number(value);
  }

  Expression identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalnum(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "z") return Expression::variable();
    for (const auto& f : kFunctions) {
      if (f.name != name) continue;
      if (!accept('(')) fail(fmt::format("'{}' needs '('", name), {"("});
      Expression arg = expr();
      if (!accept(')')) fail("missing ')'", {")"});
      return Expression::call(f.func, arg);
    }
    std::vector<std::string> expected{"z"};
    for (const auto& f : kFunctions) expected.emplace_back(f.name);
    throw ParseError(fmt::format("unknown identifier '{}' at offset {}", name,
                                 start),
                     start, std::move(expected));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_to(const Expression& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          out += fmt::format("{:.17g}", n.value);
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          out += 'z';
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          out += "-(";
          print_to(n.operand, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          out += '(';
          print_to(n.lhs, out);
          out += ' ';
          out += to_char(n.op);
          out += ' ';
          print_to(n.rhs, out);
          out += ')';
        } else {
          out += to_string(n.func);
          out += '(';
          print_to(n.arg, out);
          out += ')';
        }
      },
      e.node().v);
}

}  // namespace

const char* to_string(Func f) {
  for (const auto& entry : kFunctions)
    if (entry.func == f) return entry.name.data();
  return "?";
}

char to_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

Expression Expression::number(double value) {
  if (!std::isfinite(value)) throw DomainError("literal must be finite");
  if (std::signbit(value)) return negate(number(-value));
  return Expression(std::make_shared<const ExprNode>(ExprNode{NumberNode{value}}));
}

Expression Expression::variable() {
  return Expression(std::make_shared<const ExprNode>(ExprNode{VariableNode{}}));
}

Expression Expression::negate(Expression operand) {
  return Expression(std::make_shared<const ExprNode>(ExprNode{NegateNode{std::move(operand)}}));
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const ExprNode>(
      ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

Expression Expression::call(Func func, Expression arg) {
  return Expression(std::make_shared<const ExprNode>(ExprNode{CallNode{func, std::move(arg)}}));
}

double Expression::operator()(double z) const {
  return std::visit(
      [z](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return z;
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return -n.operand(z);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const double a = n.lhs(z);
          const double b = n.rhs(z);
          switch (n.op) {
            case BinaryOp::Add: return a + b;
            case BinaryOp::Sub: return a - b;
            case BinaryOp::Mul: return a * b;
            case BinaryOp::Div: return a / b;
            case BinaryOp::Pow: return std::pow(a, b);
          }
          return 0.0;
        } else {
          return apply(n.func, n.arg(z));
        }
      },
      node_->v);
}

Integrand Expression::integrand(bool singular_origin) const {
  return {[e = *this](double z) { return e(z); }, singular_origin};
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().v;
  const auto& y = b.node().v;
  if (x.index() != y.index()) return false;
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        const auto& m = std::get<T>(y);
        if constexpr (std::is_same_v<T, NumberNode>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, NegateNode>) {
          return n.operand == m.operand;
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return n.op == m.op && n.lhs == m.lhs && n.rhs == m.rhs;
        } else {
          return n.func == m.func && n.arg == m.arg;
        }
      },
      x);
}

Expression parse_expression(std::string_view source) {
  return Parser(source).parse();
}

std::string print(const Expression& e) {
  std::string out;
  print_to(e, out);
  return out;
}

}  // namespace improper
