#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "improper/errors.hpp"
#include "improper/expression.hpp"

using namespace improper;

namespace {

Expression random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  std::uniform_int_distribution<int> func(0, 7);
  std::uniform_int_distribution<int> op(0, 4);
  std::uniform_real_distribution<double> lit(0.0, 50.0);
  std::uniform_int_distribution<int> mag(-8, 8);
  switch (pick(rng)) {
    case 0: return Expression::number(lit(rng) * std::pow(10.0, mag(rng)));
    case 1: return Expression::variable();
    case 2: return Expression::negate(random_tree(rng, depth - 1));
    case 3: return Expression::call(static_cast<Func>(func(rng)), random_tree(rng, depth - 1));
    default: {
      const auto o = static_cast<BinaryOp>(op(rng));
      Expression rhs = random_tree(rng, depth - 1);
      while (o == BinaryOp::Div && print(rhs).find_first_not_of("-(0)") == std::string::npos)
        rhs = random_tree(rng, depth - 1);
      return Expression::binary(o, random_tree(rng, depth - 1), rhs);
    }
  }
}

}  // namespace

TEST_CASE("parse examples") {
  const auto c = parse_expression("cos(z)");
  const auto* call = std::get_if<CallNode>(&c.node().v);
  REQUIRE(call);
  CHECK(call->func == Func::Cos);
  CHECK(std::holds_alternative<VariableNode>(call->arg.node().v));

  const auto d = parse_expression("1/abs(z)");
  CHECK(d == Expression::binary(BinaryOp::Div, Expression::number(1.0),
                                Expression::call(Func::Abs, Expression::variable())));

  for (double z : {-2.0, 0.0, 3.5}) CHECK(parse_expression("2^3^2")(z) == 512.0);
}

TEST_CASE("precedence and evaluation") {
  CHECK(parse_expression("1 + 2 * 3")(0.0) == 7.0);
  CHECK(parse_expression("(1 + 2) * 3")(0.0) == 9.0);
  CHECK(parse_expression("-z^2")(3.0) == 9.0);  // unary binds to the atom
  CHECK(parse_expression("-(z^2)")(3.0) == -9.0);
  CHECK(parse_expression("8 / 4 / 2")(0.0) == 1.0);
  CHECK(parse_expression("10 - 4 - 3")(0.0) == 3.0);
  CHECK(parse_expression("abs(z)*exp(-z)")(-1.0) == doctest::Approx(std::exp(1.0)));
  CHECK(parse_expression("1.5e-3 + .5")(0.0) == doctest::Approx(0.5015));
  CHECK(parse_expression("sqrt(sinh(z)^2 + 1) - cosh(z)")(0.7) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::isinf(parse_expression("1/abs(z)")(0.0)));
  CHECK(std::isnan(parse_expression("log(z)")(-1.0)));
}

TEST_CASE("parse errors carry offsets and expectations") {
  try {
    parse_expression("1 + * 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(!e.expected().empty());
  }
  try {
    parse_expression("foo(z)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
    CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
  }
  try {
    parse_expression("cos(z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(e.expected() == std::vector<std::string>{")"});
  }
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("   "), ParseError);
  CHECK_THROWS_AS(parse_expression("z z"), ParseError);
  CHECK_THROWS_AS(parse_expression("--z"), ParseError);
  CHECK_THROWS_AS(parse_expression("1e"), ParseError);
  CHECK_THROWS_AS(parse_expression("1e999"), ParseError);
  CHECK_THROWS_AS(parse_expression("sin z"), ParseError);
}

TEST_CASE("division by a literal zero is rejected") {
  CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expression("z/(0.0)"), ParseError);
  CHECK_THROWS_AS(parse_expression("z/-0"), ParseError);
  CHECK_NOTHROW(parse_expression("1/(z-z)"));
  try {
    parse_expression("z / 0");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("round trip over generated trees") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const Expression e = random_tree(rng, 5);
    const std::string text = print(e);
    CAPTURE(text);
    const Expression back = parse_expression(text);
    CHECK(back == e);
    CHECK(print(back) == text);
  }
}

TEST_CASE("negative literals become negations") {
  const auto e = Expression::number(-2.5);
  CHECK(std::holds_alternative<NegateNode>(e.node().v));
  CHECK(parse_expression(print(e)) == e);
  CHECK_THROWS_AS(Expression::number(std::nan("")), DomainError);
}

TEST_CASE("integrand view") {
  const auto f = parse_expression("1/abs(z)").integrand(true);
  CHECK(f.singular_origin);
  CHECK(f(0.5) == 2.0);
}
