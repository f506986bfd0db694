#include "hypercurv/sl_theorem.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hypercurv/errors.hpp"
#include "hypercurv/random.hpp"

namespace hypercurv {

namespace {

void require_square(const MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix");
}

void require_n_at_least_two(std::size_t n, const char* what) {
  if (n < 2) throw InvalidArgument(std::string(what) + ": n must be at least 2, got " + std::to_string(n));
}

void require_trace_zero(const MatrixXd& h, const char* what) {
  require_square(h, what);
  const double tr = h.trace();
  if (!(std::abs(tr) <= 1e-9 * (1.0 + h.norm()))) {
    std::ostringstream msg;
    msg << what << ": matrix is not tangent at I (trace " << tr << ")";
    throw NonZeroTraceError(msg.str());
  }
}

void require_unit_norm(const MatrixXd& u, const char* what) {
  require_square(u, what);
  const double norm = u.norm();
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    std::ostringstream msg;
    msg << what << ": matrix does not have unit Frobenius norm (" << norm << ")";
    throw NotUnitNormError(msg.str());
  }
}

}  // namespace

SLPoint::SLPoint(MatrixXd matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, "SLPoint");
  const double det = matrix_.determinant();
  if (!(std::abs(det - 1.0) <= kDetTol)) {
    std::ostringstream msg;
    msg << "SLPoint: determinant is " << det << ", not 1";
    throw DeterminantNotOneError(msg.str());
  }
}

MatrixXd gauss_map(const SLPoint& a) {
  const MatrixXd inv = det_inverse(a.matrix()).inv;
  return inv.transpose() / frobenius_norm(inv);
}

bool spherical_image_contains(const MatrixXd& u) {
  require_unit_norm(u, "spherical_image_contains");
  return u.determinant() > 0.0;
}

SLPoint gauss_map_preimage(const MatrixXd& u) {
  require_unit_norm(u, "gauss_map_preimage");
  const double d = u.determinant();
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg << "gauss_map_preimage: det(U) = " << d << " is not positive";
    throw NonPositiveDeterminantError(msg.str());
  }
  const auto n = static_cast<double>(u.rows());
  const MatrixXd c = std::pow(d, -1.0 / n) * u;
  return SLPoint(det_inverse(c).inv.transpose());
}

MatrixXd weingarten_identity(const MatrixXd& h, std::size_t n) {
  require_trace_zero(h, "weingarten_identity");
  if (static_cast<std::size_t>(h.rows()) != n)
    throw InvalidArgument("weingarten_identity: H is not n×n");
  return h.transpose() / std::sqrt(double(n));
}

SymSkewParts sym_skew_decompose(const MatrixXd& h) {
  require_trace_zero(h, "sym_skew_decompose");
  MatrixXd sym = (h + h.transpose()) / 2.0;
  MatrixXd skew = (h - h.transpose()) / 2.0;
  return {std::move(sym), std::move(skew)};
}

std::vector<Cluster<double>> principal_curvatures_identity(std::size_t n) {
  require_n_at_least_two(n, "principal_curvatures_identity");
  const double kappa = std::sqrt(1.0 / double(n));
  const auto nn = static_cast<int>(n);
  return {{kappa, (nn * nn + nn - 2) / 2}, {-kappa, (nn * nn - nn) / 2}};
}

SLCurvatureSummary curvature_summary(std::size_t n) {
  require_n_at_least_two(n, "curvature_summary");
  const auto clusters = principal_curvatures_identity(n);
  SLCurvatureSummary s{};
  s.n = static_cast<int>(n);
  s.kappa_plus = clusters[0].value;
  s.mult_plus = clusters[0].multiplicity;
  s.kappa_minus = clusters[1].value;
  s.mult_minus = clusters[1].multiplicity;
  const double nd = double(n);
  const double sign = (s.mult_minus % 2 == 0) ? 1.0 : -1.0;
  s.gauss_kronecker = sign * std::pow(nd, -(nd * nd - 1.0) / 2.0);
  s.mean = 1.0 / (std::sqrt(nd) * (nd + 1.0));
  return s;
}

FundamentalForms fundamental_forms(const MatrixXd& h, std::size_t n) {
  require_trace_zero(h, "fundamental_forms");
  if (static_cast<std::size_t>(h.rows()) != n) throw InvalidArgument("fundamental_forms: H is not n×n");
  return {(h.transpose() * h).trace(), (h * h).trace() / std::sqrt(double(n))};
}

SLPoint random_sl(std::size_t n, std::uint64_t seed) {
  require_n_at_least_two(n, "random_sl");
  constexpr int kMaxAttempts = 1000;
  Rng rng(seed);
  const auto dim = static_cast<Eigen::Index>(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    MatrixXd a = rng.uniform_matrix(dim, dim);
    double det = a.determinant();
    if (std::abs(det) < 0.05) continue;
    if (det < 0.0) {
      a.row(0) *= -1.0;
      det = -det;
    }
    a *= std::pow(det, -1.0 / double(n));
    return SLPoint(std::move(a));
  }
  throw ConvergenceError("random_sl: no usable sample in " + std::to_string(kMaxAttempts) + " attempts");
}

SLPoint random_special_orthogonal(std::size_t n, std::uint64_t seed) {
  require_n_at_least_two(n, "random_special_orthogonal");
  Rng rng(seed);
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::HouseholderQR<MatrixXd> qr(rng.uniform_matrix(dim, dim));
  MatrixXd q = qr.householderQ();
  const MatrixXd& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k)
    if (r(k, k) < 0.0) q.col(k) *= -1.0;
  if (q.determinant() < 0.0) q.col(dim - 1) *= -1.0;
  return SLPoint(std::move(q));
}

MatrixXd random_trace_zero(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto dim = static_cast<Eigen::Index>(n);
  MatrixXd h = rng.uniform_matrix(dim, dim);
  h.diagonal().array() -= h.trace() / double(n);
  return h;
}

}  // namespace hypercurv
