#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "decaylab/errors.hpp"

namespace decaylab {

/// One node of a parsed damping expression. Trees are immutable after
/// construction; DampingSpec copies share them.
struct ExprNode {
  enum class Kind {
    Number,
    Var,  // the spectral variable s
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sqrt,
    Exp,
    Log,
    Abs,
    Min,
    Max,
  };

  Kind kind;
  double number = 0.0;
  std::shared_ptr<const ExprNode> a;
  std::shared_ptr<const ExprNode> b;
};

enum class DampingKind { Constant, Power, Expr };

/// The damping function f on sigma(A): a positive constant, a power a*s^theta
/// with theta in [0, 1], or a parsed expression in s.
class DampingSpec {
 public:
  static DampingSpec constant(double a);
  static DampingSpec power(double a, double theta);
  static DampingSpec expression(std::shared_ptr<const ExprNode> ast,
                                std::string text);

  DampingKind kind() const { return kind_; }

  /// Constant/Power coefficient a.
  double amplitude() const { return a_; }
  /// Power exponent theta.
  double exponent() const { return theta_; }

  const std::shared_ptr<const ExprNode>& ast() const { return ast_; }

  /// Canonical text rendering; parsing it reproduces the same function.
  const std::string& text() const { return text_; }

  double operator()(double s) const;

 private:
  DampingSpec() = default;

  DampingKind kind_ = DampingKind::Constant;
  double a_ = 0.0;
  double theta_ = 0.0;
  std::shared_ptr<const ExprNode> ast_;
  std::string text_;
};

/// Parses the infix grammar documented in the README (precedence
/// ^ > unary - > * / > + -, right-associative ^, functions sqrt exp log
/// min max abs). Throws ParseError; never crashes on any input.
DampingSpec parse_damping(std::string_view text);

/// f(s) as a finite positive real. Throws EvalError on domain violations,
/// non-finite results, or f(s) <= 0.
double eval_damping(const DampingSpec& spec, double s);

}  // namespace decaylab
