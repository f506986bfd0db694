#pragma once

// Polynomial/rational expressions in x1..xN, evaluable over any scalar ring.
//
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' digits)?
//   atom   := number | 'x' digits | '(' expr ')'
//
// '^' binds tighter than unary minus, so -x1^2 is -(x1^2). A chain such as
// x1^2^3 associates to the right and is folded into a single literal
// exponent at parse time.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercurv/dual.hpp"
#include "hypercurv/errors.hpp"

namespace hypercurv {

class ExpressionTree {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg };

  struct Node {
    Kind kind;
    double constant = 0.0;    // Constant
    std::size_t variable = 0;  // Variable, zero-based
    std::uint64_t exponent = 0;  // Pow
    int lhs = -1;              // operand of Neg/Pow, left of binaries
    int rhs = -1;
  };

  ExpressionTree(std::vector<Node> nodes, int root, std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int root() const noexcept { return root_; }

  template <typename Ring>
  Ring evaluate(std::span<const Ring> args) const {
    if (args.size() != arity_) throw ArityMismatch(arity_, args.size());
    return eval_node<Ring>(root_, args);
  }

 private:
  template <typename Ring>
  Ring eval_node(int index, std::span<const Ring> args) const {
    const Node& node = nodes_[static_cast<std::size_t>(index)];
    switch (node.kind) {
      case Kind::Constant:
        return Ring(node.constant);
      case Kind::Variable:
        return args[node.variable];
      case Kind::Add:
        return eval_node(node.lhs, args) + eval_node(node.rhs, args);
      case Kind::Sub:
        return eval_node(node.lhs, args) - eval_node(node.rhs, args);
      case Kind::Mul:
        return eval_node(node.lhs, args) * eval_node(node.rhs, args);
      case Kind::Div:
        return ring_divide(eval_node(node.lhs, args), eval_node(node.rhs, args));
      case Kind::Pow:
        return ipow(eval_node(node.lhs, args), node.exponent);
      case Kind::Neg:
        return -eval_node(node.lhs, args);
    }
    return Ring(0);
  }

  std::vector<Node> nodes_;
  int root_;
  std::size_t arity_;
};

/// Parses `text` into a tree over `arity` variables. Throws ParseError.
ExpressionTree parse_expression(std::string_view text, std::size_t arity);

/// Fully parenthesised text that parses back to an equivalent tree.
std::string to_string(const ExpressionTree& tree);

}  // namespace hypercurv
