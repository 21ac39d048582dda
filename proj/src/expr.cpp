#include "carengel/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

namespace carengel {

using Node = ScalarFieldExpr::Node;
using Kind = ScalarFieldExpr::Kind;

namespace {

std::shared_ptr<const Node> make(Kind k, std::shared_ptr<const Node> a = nullptr,
                                 std::shared_ptr<const Node> b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

double check_finite(double v) {
  if (!std::isfinite(v)) throw PoleError("nonfinite value in evaluation");
  return v;
}

double eval_node(const Node& n, const Point4& p) {
  switch (n.kind) {
    case Kind::kConstant:
      return n.constant;
    case Kind::kVariable:
      return p[n.var];
    case Kind::kAdd:
      return eval_node(*n.a, p) + eval_node(*n.b, p);
    case Kind::kSub:
      return eval_node(*n.a, p) - eval_node(*n.b, p);
    case Kind::kMul:
      return eval_node(*n.a, p) * eval_node(*n.b, p);
    case Kind::kDiv: {
      double d = eval_node(*n.b, p);
      if (std::abs(d) < kPoleGuard) throw PoleError("division by ~zero value");
      return eval_node(*n.a, p) / d;
    }
    case Kind::kPow:
      return check_finite(std::pow(eval_node(*n.a, p), n.exponent));
    case Kind::kNeg:
      return -eval_node(*n.a, p);
    case Kind::kSin:
      return std::sin(eval_node(*n.a, p));
    case Kind::kCos:
      return std::cos(eval_node(*n.a, p));
    case Kind::kTan: {
      double c = std::cos(eval_node(*n.a, p));
      if (std::abs(c) < kPoleGuard) throw PoleError("tan at cos ~ 0");
      return std::sin(eval_node(*n.a, p)) / c;
    }
    case Kind::kSec: {
      double c = std::cos(eval_node(*n.a, p));
      if (std::abs(c) < kPoleGuard) throw PoleError("sec at cos ~ 0");
      return 1.0 / c;
    }
    case Kind::kSqrt: {
      double v = eval_node(*n.a, p);
      if (v <= 0.0) throw PoleError("sqrt at nonpositive value");
      return std::sqrt(v);
    }
  }
  throw Error("corrupt expression node");
}

Jet jet_node(const Node& n, const Point4& p, int order) {
  switch (n.kind) {
    case Kind::kConstant:
      return Jet::constant(p, order, n.constant);
    case Kind::kVariable:
      return Jet::variable(p, order, n.var);
    case Kind::kAdd:
      return jet_node(*n.a, p, order) + jet_node(*n.b, p, order);
    case Kind::kSub:
      return jet_node(*n.a, p, order) - jet_node(*n.b, p, order);
    case Kind::kMul:
      return jet_node(*n.a, p, order) * jet_node(*n.b, p, order);
    case Kind::kDiv:
      return jet_node(*n.a, p, order) / jet_node(*n.b, p, order);
    case Kind::kPow:
      return jet_node(*n.a, p, order).pow_int(n.exponent);
    case Kind::kNeg:
      return -jet_node(*n.a, p, order);
    case Kind::kSin:
      return sin(jet_node(*n.a, p, order));
    case Kind::kCos:
      return cos(jet_node(*n.a, p, order));
    case Kind::kTan:
      return tan(jet_node(*n.a, p, order));
    case Kind::kSec:
      return sec(jet_node(*n.a, p, order));
    case Kind::kSqrt:
      return sqrt(jet_node(*n.a, p, order));
  }
  throw Error("corrupt expression node");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  if (v < 0) s = "(0-" + s.substr(1) + ")";  // keep literals nonnegative
  return s;
}

// Parenthesize children conservatively; output stays grammar-valid.
std::string print_node(const Node& n) {
  switch (n.kind) {
    case Kind::kConstant:
      return fmt_double(n.constant);
    case Kind::kVariable:
      return n.var_name;
    case Kind::kAdd:
      return "(" + print_node(*n.a) + "+" + print_node(*n.b) + ")";
    case Kind::kSub:
      return "(" + print_node(*n.a) + "-" + print_node(*n.b) + ")";
    case Kind::kMul:
      return "(" + print_node(*n.a) + "*" + print_node(*n.b) + ")";
    case Kind::kDiv:
      return "(" + print_node(*n.a) + "/" + print_node(*n.b) + ")";
    case Kind::kPow:
      return "(" + print_node(*n.a) + ")^" + std::to_string(n.exponent);
    case Kind::kNeg:
      return "(-(" + print_node(*n.a) + "))";
    case Kind::kSin:
      return "sin(" + print_node(*n.a) + ")";
    case Kind::kCos:
      return "cos(" + print_node(*n.a) + ")";
    case Kind::kTan:
      return "tan(" + print_node(*n.a) + ")";
    case Kind::kSec:
      return "sec(" + print_node(*n.a) + ")";
    case Kind::kSqrt:
      return "sqrt(" + print_node(*n.a) + ")";
  }
  throw Error("corrupt expression node");
}

class Parser {
 public:
  Parser(const std::string& text, const Chart& chart)
      : text_(text), chart_(chart) {}

  std::shared_ptr<const Node> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  std::shared_ptr<const Node> expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = make(Kind::kAdd, lhs, term());
      } else if (accept('-')) {
        lhs = make(Kind::kSub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<const Node> term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = make(Kind::kMul, lhs, factor());
      } else if (accept('/')) {
        lhs = make(Kind::kDiv, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  std::shared_ptr<const Node> factor() {
    skip_ws();
    bool neg = accept('-');
    auto a = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      bool negexp = accept('-');
      if (pos_ >= text_.size() || !std::isdigit(uc(text_[pos_])))
        throw ParseError(at, "malformed power: integer exponent expected");
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      auto n = std::make_shared<Node>();
      n->kind = Kind::kPow;
      n->exponent = static_cast<int>(negexp ? -v : v);
      n->a = a;
      a = n;
    }
    return neg ? make(Kind::kNeg, a) : a;
  }

  std::shared_ptr<const Node> atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(uc(c)) || c == '.') return number();
    if (std::isalpha(uc(c)) || c == '_') return ident_or_func();
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::shared_ptr<const Node> number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(uc(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    // optional exponent part
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        ++pos_;
      if (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) ++pos_;
      } else {
        pos_ = save;  // 'e' belongs to an identifier context; not a number
      }
    }
    std::string tok = text_.substr(start, pos_ - start);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size())
      throw ParseError(start, "malformed number '" + tok + "'");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kConstant;
    n->constant = v;
    return n;
  }

  std::shared_ptr<const Node> ident_or_func() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      Kind k;
      if (name == "sin")
        k = Kind::kSin;
      else if (name == "cos")
        k = Kind::kCos;
      else if (name == "tan")
        k = Kind::kTan;
      else if (name == "sec")
        k = Kind::kSec;
      else if (name == "sqrt")
        k = Kind::kSqrt;
      else
        throw ParseError(start, "unknown function '" + name + "'");
      expect('(');
      auto e = expr();
      expect(')');
      return make(k, e);
    }
    for (int i = 0; i < 4; ++i) {
      if (chart_[i] == name) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::kVariable;
        n->var = i;
        n->var_name = name;
        return n;
      }
    }
    throw ParseError(start, "unknown variable '" + name + "'");
  }

  static int uc(char c) { return static_cast<unsigned char>(c); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  const std::string& text_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarFieldExpr ScalarFieldExpr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->constant = v;
  return ScalarFieldExpr(n);
}

ScalarFieldExpr ScalarFieldExpr::variable(int var, const Chart& chart) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVariable;
  n->var = var;
  n->var_name = chart[var];
  return ScalarFieldExpr(n);
}

double ScalarFieldExpr::eval(const Point4& p) const {
  return eval_node(*node_, p);
}

Jet ScalarFieldExpr::eval_jet(const Point4& p, int order) const {
  return jet_node(*node_, p, order);
}

std::string ScalarFieldExpr::print() const { return print_node(*node_); }

ScalarFieldExpr operator+(ScalarFieldExpr a, ScalarFieldExpr b) {
  return ScalarFieldExpr(make(Kind::kAdd, a.node_, b.node_));
}
ScalarFieldExpr operator-(ScalarFieldExpr a, ScalarFieldExpr b) {
  return ScalarFieldExpr(make(Kind::kSub, a.node_, b.node_));
}
ScalarFieldExpr operator*(ScalarFieldExpr a, ScalarFieldExpr b) {
  return ScalarFieldExpr(make(Kind::kMul, a.node_, b.node_));
}
ScalarFieldExpr operator/(ScalarFieldExpr a, ScalarFieldExpr b) {
  return ScalarFieldExpr(make(Kind::kDiv, a.node_, b.node_));
}
ScalarFieldExpr operator-(ScalarFieldExpr a) {
  return ScalarFieldExpr(make(Kind::kNeg, a.node_));
}

ScalarFieldExpr parse_expr(const std::string& text, const Chart& chart) {
  Parser p(text, chart);
  return ScalarFieldExpr(p.parse());
}

}  // namespace carengel
