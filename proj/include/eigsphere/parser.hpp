#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "eigsphere/polynomial.hpp"

namespace eigsphere {

/// Parsed polynomial expression.
///
/// Grammar (whitespace ignored):
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := ('-' | '+') factor | power
///   power   := primary ('^' INT)?
///   primary := INT ('/' INT)? | 'i' | 'x' INT | 'z' INT
///            | 'conj' '(' expr ')' | '(' expr ')'
///
/// `zj` stands for x_{2j-1} + i*x_{2j}. Multiplication is always explicit.
namespace ast {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Integer { Rational value; };
struct RationalLit { Rational value; };
struct ImaginaryUnit {};
struct RealVar { std::size_t index; };     // 1-based
struct ComplexVar { std::size_t index; };  // 1-based
struct Negate { NodePtr operand; };
struct Conjugate { NodePtr operand; };
struct Sum { std::vector<NodePtr> terms; std::vector<bool> negated; };
struct Product { std::vector<NodePtr> factors; };
struct Power { NodePtr base; unsigned exponent; };

struct Node {
  std::variant<Integer, RationalLit, ImaginaryUnit, RealVar, ComplexVar, Negate,
               Conjugate, Sum, Product, Power>
      value;
  std::size_t position = 0;
};

}  // namespace ast

/// Syntax only; variable ranges are checked during expansion.
ast::NodePtr parse_expression(std::string_view text);

/// Expand an AST into a canonical polynomial in nvars real variables.
Polynomial expand(const ast::Node& node, std::size_t nvars);

/// parse_expression + expand. Throws SyntaxError, Error(VariableOutOfRange),
/// Error(NegativeExponent).
Polynomial parse(std::string_view text, std::size_t nvars);

}  // namespace eigsphere
