#pragma once

#include <cstdint>
#include <random>

#include "hypercurv/linalg.hpp"

namespace hypercurv {

/// Seeded source of uniform reals. The mapping from engine output to
/// doubles is spelled out here rather than left to
/// std::uniform_real_distribution, so sequences match across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double canonical() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo = -1.0, double hi = 1.0) {
    MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  VectorXd uniform_vector(Eigen::Index size, double lo = -1.0, double hi = 1.0) {
    VectorXd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypercurv
