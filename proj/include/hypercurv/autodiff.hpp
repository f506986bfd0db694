#pragma once

// Exact gradients and Hessians by forward-mode evaluation.

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "hypercurv/dual.hpp"
#include "hypercurv/errors.hpp"
#include "hypercurv/linalg.hpp"

namespace hypercurv {

/// Anything evaluable over the three scalar rings with a fixed arity.
template <typename F>
concept RingField = requires(const F& f, std::span<const double> x, std::span<const Dual<double>> xd,
                             std::span<const HyperDual<double>> xh) {
  { f.arity() } -> std::convertible_to<std::size_t>;
  { f.template evaluate<double>(x) } -> std::convertible_to<double>;
  { f.template evaluate<Dual<double>>(xd) } -> std::convertible_to<Dual<double>>;
  { f.template evaluate<HyperDual<double>>(xh) } -> std::convertible_to<HyperDual<double>>;
};

/// One Dual evaluation per coordinate, seeded with deriv = 1 in that slot.
template <RingField F>
VectorXd gradient(const F& field, const VectorXd& p) {
  const auto n = static_cast<std::size_t>(p.size());
  if (field.arity() != n) throw ArityMismatch(field.arity(), n);
  std::vector<Dual<double>> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = Dual<double>(p(Eigen::Index(k)));

  VectorXd g(p.size());
  for (std::size_t k = 0; k < n; ++k) {
    x[k].deriv = 1.0;
    g(Eigen::Index(k)) = field.template evaluate<Dual<double>>(x).deriv;
    x[k].deriv = 0.0;
  }
  return g;
}

/// One HyperDual evaluation per unordered pair (i ≤ j); both triangles are
/// written from the same value, so the result is exactly symmetric.
template <RingField F>
MatrixXd hessian(const F& field, const VectorXd& p) {
  const auto n = static_cast<std::size_t>(p.size());
  if (field.arity() != n) throw ArityMismatch(field.arity(), n);
  std::vector<HyperDual<double>> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = HyperDual<double>(p(Eigen::Index(k)));

  MatrixXd h(p.size(), p.size());
  for (std::size_t i = 0; i < n; ++i) {
    x[i].d1 = 1.0;
    for (std::size_t j = i; j < n; ++j) {
      x[j].d2 = 1.0;
      const double hij = field.template evaluate<HyperDual<double>>(x).d12;
      x[j].d2 = 0.0;
      h(Eigen::Index(i), Eigen::Index(j)) = hij;
      h(Eigen::Index(j), Eigen::Index(i)) = hij;
    }
    x[i].d1 = 0.0;
  }
  return h;
}

}  // namespace hypercurv
