#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vpwave::expr {

enum class Func { sin, cos, tan, exp, log, sqrt, abs, sign, tanh };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Number {
  double value;
};
struct Variable {};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // one of + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  unsigned exponent;
};
struct Call {
  Func func;
  ExprPtr arg;
};

/// Expression tree in the single variable x.
struct Expr {
  std::variant<Number, Variable, Negate, Binary, Power, Call> node;
};

/// Syntax error at a byte offset of the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Domain failure during evaluation (log of a non-positive value, ...).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar, loosest to tightest:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)*
///   primary := number | 'x' | func '(' sum ')' | '(' sum ')'
ExprPtr parse(std::string_view src);

double evaluate(const Expr& e, double x);

/// Minimal-parenthesis rendering; parse(to_string(e)) rebuilds e.
std::string to_string(const Expr& e);

std::string_view func_name(Func f);

}  // namespace vpwave::expr
