#ifndef CARENGEL_EXPR_HPP
#define CARENGEL_EXPR_HPP

#include <array>
#include <memory>
#include <string>

#include "carengel/jet.hpp"

namespace carengel {

// Names of the 4 coordinates of a chart, e.g. {"x","y","alpha","beta"}.
using Chart = std::array<std::string, 4>;

// Expression tree for a closed-form scalar field on a 4-coordinate chart.
//
// Grammar (EBNF):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' integer]
//   atom   := number | ident | func '(' expr ')' | '(' expr ')'
//   func   in {sin, cos, tan, sec, sqrt}
// Identifiers must match chart names exactly.
class ScalarFieldExpr {
 public:
  enum class Kind {
    kConstant,
    kVariable,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,  // integer power
    kNeg,
    kSin,
    kCos,
    kTan,
    kSec,
    kSqrt,
  };

  static ScalarFieldExpr constant(double v);
  static ScalarFieldExpr variable(int var, const Chart& chart);

  Kind kind() const;

  double eval(const Point4& p) const;
  Jet eval_jet(const Point4& p, int order) const;

  // Prints in grammar-compatible form: print-then-parse round-trips.
  std::string print() const;

  friend ScalarFieldExpr operator+(ScalarFieldExpr a, ScalarFieldExpr b);
  friend ScalarFieldExpr operator-(ScalarFieldExpr a, ScalarFieldExpr b);
  friend ScalarFieldExpr operator*(ScalarFieldExpr a, ScalarFieldExpr b);
  friend ScalarFieldExpr operator/(ScalarFieldExpr a, ScalarFieldExpr b);
  friend ScalarFieldExpr operator-(ScalarFieldExpr a);

  struct Node;
  explicit ScalarFieldExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

struct ScalarFieldExpr::Node {
  Kind kind;
  double constant = 0.0;                 // kConstant
  int var = -1;                          // kVariable
  std::string var_name;                  // kVariable
  int exponent = 0;                      // kPow
  std::shared_ptr<const Node> a, b;      // children
};

inline ScalarFieldExpr::Kind ScalarFieldExpr::kind() const {
  return node_->kind;
}

// Parses `text` over the given chart. Throws ParseError on syntax errors
// (with byte offset) and on identifiers that are not chart names.
ScalarFieldExpr parse_expr(const std::string& text, const Chart& chart);

}  // namespace carengel

#endif
