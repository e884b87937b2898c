#pragma once

// Reference computations for the tests, written without the library's
// algebra so that they fail independently.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "lawson/exterior_algebra.hpp"

namespace oracle {

inline Eigen::Vector4d vec(const lawson::Vector4& v) { return {v[0], v[1], v[2], v[3]}; }

inline Eigen::Matrix4d mat(const lawson::Matrix4& m) {
  Eigen::Matrix4d out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m(r, c);
  return out;
}

/// Determinant by the Leibniz sum over all 24 permutations.
inline double leibniz_det(const std::array<std::array<double, 4>, 4>& cols) {
  std::array<int, 4> p{0, 1, 2, 3};
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    double term = inversions % 2 ? -1.0 : 1.0;
    for (int c = 0; c < 4; ++c) term *= cols[c][p[c]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Bivector coordinates as the antisymmetric matrix v w^T - w v^T.
inline Eigen::Matrix4d antisym(const Eigen::Vector4d& v, const Eigen::Vector4d& w) {
  return v * w.transpose() - w * v.transpose();
}

inline Eigen::Matrix<double, 6, 1> flatten(const Eigen::Matrix4d& a) {
  Eigen::Matrix<double, 6, 1> out;
  out << a(0, 1), a(0, 2), a(0, 3), a(1, 2), a(1, 3), a(2, 3);
  return out;
}

inline Eigen::Matrix<double, 6, 1> six(const lawson::Bivector6& b) {
  Eigen::Matrix<double, 6, 1> out;
  for (int i = 0; i < 6; ++i) out(i) = b[i];
  return out;
}

/// Numerical rank from singular values relative to the largest.
inline int svd_rank(const std::vector<lawson::Bivector6>& cols, double rel = 1e-7) {
  Eigen::MatrixXd a(6, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = six(cols[j]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > rel * s(0);
  return r;
}

inline long chi_xi(long m, long k) { return 2 * (1 - (m - 1) * (k - 1)); }

inline long chi_eta(long m, long k) {
  return k % 2 == 0 ? 1 - (m - 1) * (k - 1) : 2 * (1 - (m - 1) * (k - 1));
}

}  // namespace oracle
