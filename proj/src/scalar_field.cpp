#include "hypercurv/scalar_field.hpp"

namespace hypercurv {

std::string ScalarField::description() const {
  struct Describe {
    std::string operator()(const Determinant& d) const { return "det(n=" + std::to_string(d.n) + ")"; }
    std::string operator()(const DiagonalQuadric& q) const {
      return "quadric(N=" + std::to_string(q.weights.size()) + ")";
    }
    std::string operator()(const Expression& e) const { return e.text; }
  };
  return std::visit(Describe{}, body_);
}

ScalarField determinant_field(std::size_t n) {
  if (n < 1 || n > 6)
    throw InvalidArgument("determinant_field: n must be in 1..6, got " + std::to_string(n));
  return ScalarField(n * n, ScalarField::Determinant{n});
}

ScalarField quadric_field(std::vector<double> weights) {
  if (weights.empty()) throw InvalidArgument("quadric_field needs at least one weight");
  const std::size_t arity = weights.size();
  return ScalarField(arity, ScalarField::DiagonalQuadric{std::move(weights)});
}

ScalarField sphere_field(std::size_t dim) { return quadric_field(std::vector<double>(dim, 1.0)); }

ScalarField cylinder_field(std::size_t dim) {
  if (dim < 2) throw InvalidArgument("cylinder_field needs dim >= 2");
  std::vector<double> weights(dim, 0.0);
  weights[0] = 1.0;
  weights[1] = 1.0;
  return quadric_field(std::move(weights));
}

ScalarField expression_field(std::string_view text, std::size_t arity) {
  auto tree = std::make_shared<const ExpressionTree>(parse_expression(text, arity));
  return ScalarField(arity, ScalarField::Expression{std::move(tree), std::string(text)});
}

ScalarField expression_field(ExpressionTree tree) {
  const std::size_t arity = tree.arity();
  std::string text = to_string(tree);
  return ScalarField(arity, ScalarField::Expression{std::make_shared<const ExpressionTree>(std::move(tree)),
                                                    std::move(text)});
}

}  // namespace hypercurv
