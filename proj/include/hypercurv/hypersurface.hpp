#pragma once

// Extrinsic curvature of a level set S = f⁻¹(c) ⊂ R^N.
//
// Orientation is N = ∇f/‖∇f‖ and the Weingarten map is L = −dN restricted
// to the tangent space. With T an orthonormal basis of ∇f^⊥, H the Hessian
// of f and g = ‖∇f‖, the matrix of L in the basis T is −TᵀHT/g: the
// derivative of ∇f/‖∇f‖ differs from H/g by a term whose range is spanned
// by ∇f, which Tᵀ annihilates.
//
// With this convention the round sphere Σx² = r² has every principal
// curvature equal to −1/r.

#include <cmath>
#include <vector>

#include "hypercurv/linalg.hpp"
#include "hypercurv/scalar_field.hpp"

namespace hypercurv {

class ImplicitHypersurface {
 public:
  ImplicitHypersurface(ScalarField field, double level);
  ImplicitHypersurface(ScalarField field, double level, double on_surface_tol);

  const ScalarField& field() const noexcept { return field_; }
  double level() const noexcept { return level_; }
  std::size_t ambient_dim() const noexcept { return field_.arity(); }
  double on_surface_tol() const noexcept { return on_surface_tol_; }

  double residual(const VectorXd& p) const { return field_(p) - level_; }
  bool contains(const VectorXd& p) const { return std::abs(residual(p)) <= on_surface_tol_; }

  static double default_on_surface_tol(double level) { return 1e-9 * (1.0 + std::abs(level)); }

 private:
  ScalarField field_;
  double level_;
  double on_surface_tol_;
};

inline constexpr double kCriticalGradientNorm = 1e-10;
inline constexpr double kDefaultClusterTol = 1e-6;

VectorXd unit_normal(const ImplicitHypersurface& s, const VectorXd& p);

struct WeingartenMatrix {
  MatrixXd matrix;         // (N−1)×(N−1), symmetric
  MatrixXd tangent_basis;  // N×(N−1), orthonormal columns
};

WeingartenMatrix weingarten_matrix(const ImplicitHypersurface& s, const VectorXd& p);

/// −TᵀHT/g, symmetrised. Exposed so callers can use a basis of their own.
MatrixXd project_shape_operator(const MatrixXd& hessian, const MatrixXd& tangent_basis,
                                double gradient_norm);

/// Ambient form of L_p(v) = −(I − NNᵀ)Hv/g. v must be tangent.
VectorXd weingarten_apply(const ImplicitHypersurface& s, const VectorXd& p, const VectorXd& v);

/// ⟨L_p v, w⟩
double second_fundamental_form(const ImplicitHypersurface& s, const VectorXd& p,
                               const VectorXd& v, const VectorXd& w);

struct CurvatureReport {
  VectorXd point;
  VectorXd normal;
  MatrixXd tangent_basis;
  MatrixXd weingarten;
  VectorXd principal;  // all eigenvalues, descending
  std::vector<Cluster<double>> curvatures;
  double gauss_kronecker = 0.0;
  double mean = 0.0;
};

CurvatureReport curvature_report(const ImplicitHypersurface& s, const VectorXd& p,
                                 double cluster_tol = kDefaultClusterTol);

/// Central-difference Hessian from plain evaluations of the field,
/// independent of the dual-number path.
MatrixXd fd_hessian_oracle(const ScalarField& field, const VectorXd& p, double step);

}  // namespace hypercurv
