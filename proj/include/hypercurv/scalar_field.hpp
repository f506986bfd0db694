#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hypercurv/errors.hpp"
#include "hypercurv/expression.hpp"
#include "hypercurv/linalg.hpp"

namespace hypercurv {

namespace detail {

// Cofactor expansion of rows [row, n) over the columns not yet in `used`.
// Division-free, so valid over any commutative ring.
template <typename Ring>
Ring cofactor_det(std::span<const Ring> a, std::size_t n, std::size_t row, std::uint32_t used) {
  if (row + 1 == n) {
    for (std::size_t j = 0; j < n; ++j)
      if (!(used & (1U << j))) return a[row * n + j];
  }
  Ring sum(0);
  bool first = true;
  bool negative = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1U << j)) continue;
    const Ring term = a[row * n + j] * cofactor_det(a, n, row + 1, used | (1U << j));
    if (first)
      sum = negative ? -term : term;
    else if (negative)
      sum = sum - term;
    else
      sum = sum + term;
    first = false;
    negative = !negative;
  }
  return sum;
}

}  // namespace detail

/// A scalar function on R^N that can be evaluated over double, Dual and
/// HyperDual arguments alike.
class ScalarField {
 public:
  struct Determinant {
    std::size_t n;
  };
  /// Σ w_k x_k²
  struct DiagonalQuadric {
    std::vector<double> weights;
  };
  struct Expression {
    std::shared_ptr<const ExpressionTree> tree;
    std::string text;
  };
  using Body = std::variant<Determinant, DiagonalQuadric, Expression>;

  std::size_t arity() const noexcept { return arity_; }
  const Body& body() const noexcept { return body_; }
  std::string description() const;

  template <typename Ring>
  Ring evaluate(std::span<const Ring> args) const {
    if (args.size() != arity_) throw ArityMismatch(arity_, args.size());
    return std::visit([&](const auto& body) { return eval_body<Ring>(body, args); }, body_);
  }

  double operator()(const VectorXd& p) const {
    return evaluate<double>(std::span<const double>(p.data(), std::size_t(p.size())));
  }

  friend ScalarField determinant_field(std::size_t n);
  friend ScalarField quadric_field(std::vector<double> weights);
  friend ScalarField expression_field(std::string_view text, std::size_t arity);
  friend ScalarField expression_field(ExpressionTree tree);

 private:
  ScalarField(std::size_t arity, Body body) : arity_(arity), body_(std::move(body)) {}

  template <typename Ring>
  static Ring eval_body(const Determinant& d, std::span<const Ring> args) {
    return detail::cofactor_det(args, d.n, 0, 0);
  }

  template <typename Ring>
  static Ring eval_body(const DiagonalQuadric& q, std::span<const Ring> args) {
    Ring sum(0);
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (q.weights[k] == 0.0) continue;
      sum = sum + Ring(q.weights[k]) * (args[k] * args[k]);
    }
    return sum;
  }

  template <typename Ring>
  static Ring eval_body(const Expression& e, std::span<const Ring> args) {
    return e.tree->evaluate(args);
  }

  std::size_t arity_;
  Body body_;
};

/// det of the row-major n×n matrix held in the n² arguments; 1 ≤ n ≤ 6.
ScalarField determinant_field(std::size_t n);

/// Σ w_k x_k² over weights.size() variables.
ScalarField quadric_field(std::vector<double> weights);

/// x1² + … + xN²
ScalarField sphere_field(std::size_t dim);

/// x1² + x2² in R^dim (dim ≥ 2); level 1 is the unit round cylinder.
ScalarField cylinder_field(std::size_t dim);

ScalarField expression_field(std::string_view text, std::size_t arity);
ScalarField expression_field(ExpressionTree tree);

}  // namespace hypercurv
