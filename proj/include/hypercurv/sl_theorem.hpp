#pragma once

// Closed-form extrinsic geometry of SL(n,R) = det⁻¹(1) ⊂ R^{n²}.
//
// Gauss map:     N(A) = (A⁻¹)ᵀ / ‖A⁻¹‖_F
// Image:         unit-norm matrices with positive determinant
// At I:          L_I(H) = n^{-1/2} Hᵀ on trace-zero H, so trace-zero
//                symmetric matrices have curvature +n^{-1/2} and skew ones
//                −n^{-1/2}.
//
// Mean curvature here is trace(L)/(n²−1).

#include <cstdint>
#include <utility>
#include <vector>

#include "hypercurv/linalg.hpp"

namespace hypercurv {

/// A matrix with |det − 1| ≤ 1e-9. Construction validates.
class SLPoint {
 public:
  static constexpr double kDetTol = 1e-9;

  explicit SLPoint(MatrixXd matrix);

  std::size_t n() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const MatrixXd& matrix() const noexcept { return matrix_; }
  VectorXd flat() const { return vec(matrix_); }

 private:
  MatrixXd matrix_;
};

struct SLCurvatureSummary {
  int n;
  double kappa_plus;
  int mult_plus;
  double kappa_minus;
  int mult_minus;
  double gauss_kronecker;
  double mean;
};

MatrixXd gauss_map(const SLPoint& a);

/// True iff det(U) > 0. U must have unit Frobenius norm (within 1e-9).
bool spherical_image_contains(const MatrixXd& u);

/// B ∈ SL(n) with gauss_map(B) = U, via C = det(U)^{-1/n}·U and B = (C⁻¹)ᵀ.
SLPoint gauss_map_preimage(const MatrixXd& u);

/// n^{-1/2}·Hᵀ for trace-zero H.
MatrixXd weingarten_identity(const MatrixXd& h, std::size_t n);

struct SymSkewParts {
  MatrixXd sym;
  MatrixXd skew;
};

SymSkewParts sym_skew_decompose(const MatrixXd& h);

std::vector<Cluster<double>> principal_curvatures_identity(std::size_t n);

SLCurvatureSummary curvature_summary(std::size_t n);

struct FundamentalForms {
  double first;   // tr(HᵀH)
  double second;  // n^{-1/2}·tr(H²)
};

FundamentalForms fundamental_forms(const MatrixXd& h, std::size_t n);

/// Deterministic in (n, seed): uniform [−1, 1] entries, rejection while
/// |det| < 0.05, row 0 negated if det < 0, then scaled by det^{-1/n}.
SLPoint random_sl(std::size_t n, std::uint64_t seed);

/// Householder QR of a seeded random matrix, diagonal of R made positive,
/// one column negated if needed so det = +1.
SLPoint random_special_orthogonal(std::size_t n, std::uint64_t seed);

/// Seeded trace-zero matrix with entries roughly in [−1, 1].
MatrixXd random_trace_zero(std::size_t n, std::uint64_t seed);

}  // namespace hypercurv
