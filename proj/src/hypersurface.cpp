#include "hypercurv/hypersurface.hpp"

#include <sstream>

#include "hypercurv/autodiff.hpp"

namespace hypercurv {

ImplicitHypersurface::ImplicitHypersurface(ScalarField field, double level)
    : ImplicitHypersurface(std::move(field), level, default_on_surface_tol(level)) {}

ImplicitHypersurface::ImplicitHypersurface(ScalarField field, double level, double on_surface_tol)
    : field_(std::move(field)), level_(level), on_surface_tol_(on_surface_tol) {
  if (!(on_surface_tol_ > 0.0)) throw InvalidArgument("on_surface_tol must be positive");
}

namespace {

struct LocalFrame {
  VectorXd gradient;
  double gradient_norm;
};

LocalFrame local_frame(const ImplicitHypersurface& s, const VectorXd& p) {
  if (static_cast<std::size_t>(p.size()) != s.ambient_dim())
    throw ArityMismatch(s.ambient_dim(), static_cast<std::size_t>(p.size()));
  const double r = s.residual(p);
  if (!(std::abs(r) <= s.on_surface_tol())) {
    std::ostringstream msg;
    msg << "point is off the surface: |f(p) - c| = " << std::abs(r) << " > " << s.on_surface_tol();
    throw OffSurfaceError(msg.str());
  }
  VectorXd g = gradient(s.field(), p);
  const double norm = g.norm();
  if (!(norm > kCriticalGradientNorm)) {
    std::ostringstream msg;
    msg << "critical point: |grad f(p)| = " << norm;
    throw CriticalPointError(msg.str());
  }
  return {std::move(g), norm};
}

void require_tangent(const VectorXd& v, const LocalFrame& frame) {
  if (v.size() != frame.gradient.size())
    throw ArityMismatch(static_cast<std::size_t>(frame.gradient.size()), static_cast<std::size_t>(v.size()));
  const double dot = v.dot(frame.gradient);
  if (!(std::abs(dot) <= 1e-8 * v.norm() * frame.gradient_norm)) {
    std::ostringstream msg;
    msg << "vector is not tangent: <v, grad f> = " << dot;
    throw NonTangentError(msg.str());
  }
}

}  // namespace

VectorXd unit_normal(const ImplicitHypersurface& s, const VectorXd& p) {
  const LocalFrame frame = local_frame(s, p);
  return frame.gradient / frame.gradient_norm;
}

MatrixXd project_shape_operator(const MatrixXd& hessian, const MatrixXd& tangent_basis,
                                double gradient_norm) {
  const MatrixXd w = -(tangent_basis.transpose() * hessian * tangent_basis) / gradient_norm;
  return (w + w.transpose()) / 2.0;
}

WeingartenMatrix weingarten_matrix(const ImplicitHypersurface& s, const VectorXd& p) {
  const LocalFrame frame = local_frame(s, p);
  MatrixXd basis = complement_basis(frame.gradient);
  MatrixXd w = project_shape_operator(hessian(s.field(), p), basis, frame.gradient_norm);
  return {std::move(w), std::move(basis)};
}

VectorXd weingarten_apply(const ImplicitHypersurface& s, const VectorXd& p, const VectorXd& v) {
  const LocalFrame frame = local_frame(s, p);
  require_tangent(v, frame);
  const VectorXd normal = frame.gradient / frame.gradient_norm;
  const VectorXd hv = hessian(s.field(), p) * v;
  return -(hv - normal * normal.dot(hv)) / frame.gradient_norm;
}

double second_fundamental_form(const ImplicitHypersurface& s, const VectorXd& p, const VectorXd& v,
                               const VectorXd& w) {
  const LocalFrame frame = local_frame(s, p);
  require_tangent(v, frame);
  require_tangent(w, frame);
  const VectorXd normal = frame.gradient / frame.gradient_norm;
  const MatrixXd h = hessian(s.field(), p);
  // Averaged over both orders so the form is exactly symmetric.
  const VectorXd hv = h * v;
  const VectorXd lv = -(hv - normal * normal.dot(hv)) / frame.gradient_norm;
  const VectorXd hw = h * w;
  const VectorXd lw = -(hw - normal * normal.dot(hw)) / frame.gradient_norm;
  return (lv.dot(w) + lw.dot(v)) / 2.0;
}

CurvatureReport curvature_report(const ImplicitHypersurface& s, const VectorXd& p, double cluster_tol) {
  CurvatureReport report;
  report.point = p;
  report.normal = unit_normal(s, p);
  auto [w, basis] = weingarten_matrix(s, p);
  report.tangent_basis = std::move(basis);
  report.weingarten = std::move(w);

  const EigenSpectrum<double> spectrum = jacobi_eigh(report.weingarten, 1e-14);
  report.principal = spectrum.values;
  report.curvatures = cluster_multiplicities(spectrum.values, cluster_tol);
  report.gauss_kronecker = 1.0;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < spectrum.values.size(); ++k) {
    report.gauss_kronecker *= spectrum.values(k);
    sum += spectrum.values(k);
  }
  report.mean = spectrum.values.size() > 0 ? sum / double(spectrum.values.size()) : 0.0;
  return report;
}

MatrixXd fd_hessian_oracle(const ScalarField& field, const VectorXd& p, double step) {
  if (!(step > 0.0)) throw InvalidArgument("fd_hessian_oracle: step must be positive");
  const Eigen::Index n = p.size();
  if (static_cast<std::size_t>(n) != field.arity())
    throw ArityMismatch(field.arity(), static_cast<std::size_t>(n));
  MatrixXd h(n, n);
  VectorXd x = p;
  auto shifted = [&](Eigen::Index i, double si, Eigen::Index j, double sj) {
    x = p;
    x(i) += si * step;
    x(j) += sj * step;
    return field(x);
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      h(i, j) = (shifted(i, 1, j, 1) - shifted(i, 1, j, -1) - shifted(i, -1, j, 1) +
                 shifted(i, -1, j, -1)) /
                (4.0 * step * step);
    }
  }
  return (h + h.transpose()) / 2.0;
}

}  // namespace hypercurv
