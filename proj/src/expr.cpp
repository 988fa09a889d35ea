#include "vpwave/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <system_error>

namespace vpwave::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 9> kFuncs{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"exp", Func::exp},
    {"log", Func::log},
    {"sqrt", Func::sqrt},
    {"abs", Func::abs},
    {"sign", Func::sign},
    {"tanh", Func::tanh},
}};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

std::string format_error(std::size_t offset, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = "offset " + std::to_string(offset) + ": " + message;
  if (!expected.empty()) out += " (expected " + join(expected) + ")";
  return out;
}

ExprPtr make(auto node) { return std::make_unique<Expr>(Expr{std::move(node)}); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_sum();
    skip_space();
    if (pos_ != src_.size()) {
      throw ParseError(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'",
                       {"operator", "')'", "end of input"});
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<char> peek_op(std::string_view ops) {
    skip_space();
    if (pos_ < src_.size() && ops.find(src_[pos_]) != std::string_view::npos) return src_[pos_];
    return std::nullopt;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (auto op = peek_op("+-")) {
      ++pos_;
      lhs = make(Binary{*op, std::move(lhs), parse_product()});
    }
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (auto op = peek_op("*/")) {
      ++pos_;
      lhs = make(Binary{*op, std::move(lhs), parse_unary()});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (accept('-')) return make(Negate{parse_unary()});
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    while (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "exponent must be a nonnegative integer", {"integer"});
      unsigned exponent = 0;
      auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, exponent);
      if (ec != std::errc{} || ptr != src_.data() + pos_) throw ParseError(start, "exponent too large");
      base = make(Power{std::move(base), exponent});
    }
    return base;
  }

  ExprPtr parse_primary() {
    skip_space();
    static const std::vector<std::string> kExpected{"number", "'x'", "function", "'('", "'-'"};
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input", kExpected);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_sum();
      expect_close();
      return inner;
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'", kExpected);
  }

  void expect_close() {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ')') {
      ++pos_;
      return;
    }
    throw ParseError(pos_, pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'" : "unclosed '('",
                     {"')'", "operator"});
  }

  ExprPtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError(start, "malformed number '" + std::string(src_.substr(start, pos_ - start)) + "'");
    }
    return make(Number{value});
  }

  ExprPtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Variable{});
    for (const auto& [fname, func] : kFuncs) {
      if (name != fname) continue;
      if (!accept('(')) throw ParseError(pos_, "expected '(' after " + std::string(name), {"'('"});
      ExprPtr arg = parse_sum();
      expect_close();
      return make(Call{func, std::move(arg)});
    }
    throw ParseError(start, "unknown identifier '" + std::string(name) + "'", {"'x'", "function"});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw EvalError(std::string(what) + " produced a non-finite value");
  return value;
}

struct Evaluator {
  double x;

  double operator()(const Number& n) const { return n.value; }
  double operator()(const Variable&) const { return x; }
  double operator()(const Negate& n) const { return -evaluate(*n.operand, x); }
  double operator()(const Power& p) const {
    const double base = evaluate(*p.base, x);
    double result = 1.0;
    for (unsigned i = 0; i < p.exponent; ++i) result *= base;
    return checked(result, "'^'");
  }
  double operator()(const Binary& b) const {
    const double l = evaluate(*b.lhs, x);
    const double r = evaluate(*b.rhs, x);
    switch (b.op) {
      case '+': return checked(l + r, "'+'");
      case '-': return checked(l - r, "'-'");
      case '*': return checked(l * r, "'*'");
      default:
        if (r == 0.0) throw EvalError("division by zero");
        return checked(l / r, "'/'");
    }
  }
  double operator()(const Call& c) const {
    const double v = evaluate(*c.arg, x);
    switch (c.func) {
      case Func::sin: return std::sin(v);
      case Func::cos: return std::cos(v);
      case Func::tan: return checked(std::tan(v), "tan");
      case Func::exp: return checked(std::exp(v), "exp");
      case Func::log:
        if (v <= 0.0) throw EvalError("log of non-positive value " + std::to_string(v));
        return std::log(v);
      case Func::sqrt:
        if (v < 0.0) throw EvalError("sqrt of negative value " + std::to_string(v));
        return std::sqrt(v);
      case Func::abs: return std::abs(v);
      case Func::sign: return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
      case Func::tanh: return std::tanh(v);
    }
    return 0.0;
  }
};

// Binding strength: sum 1, product 2, unary minus 3, power 4, atoms 5.
int precedence(const Expr& e) {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Binary>) return (node.op == '+' || node.op == '-') ? 1 : 2;
        if constexpr (std::is_same_v<T, Negate>) return 3;
        if constexpr (std::is_same_v<T, Power>) return 4;
        return 5;
      },
      e.node);
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + to_string(e) + ")" : to_string(e); }

}  // namespace

ParseError::ParseError(std::size_t offset, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_error(offset, message, expected)), offset_(offset), expected_(std::move(expected)) {}

ExprPtr parse(std::string_view src) { return Parser(src).parse_all(); }

double evaluate(const Expr& e, double x) { return std::visit(Evaluator{x}, e.node); }

std::string_view func_name(Func f) {
  for (const auto& [name, func] : kFuncs) {
    if (func == f) return name;
  }
  return "?";
}

std::string to_string(const Expr& e) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Number>) {
          std::array<char, 64> buf{};
          auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), node.value);
          return std::string(buf.data(), ptr);
        } else if constexpr (std::is_same_v<T, Variable>) {
          return "x";
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + wrap(*node.operand, precedence(*node.operand) < 3);
        } else if constexpr (std::is_same_v<T, Power>) {
          return wrap(*node.base, precedence(*node.base) < 4) + "^" + std::to_string(node.exponent);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(e);
          return wrap(*node.lhs, precedence(*node.lhs) < p) + " " + node.op + " " +
                 wrap(*node.rhs, precedence(*node.rhs) <= p);
        } else {
          return std::string(func_name(node.func)) + "(" + to_string(*node.arg) + ")";
        }
      },
      e.node);
}

}  // namespace vpwave::expr
