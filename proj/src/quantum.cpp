// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/quantum.hpp"

#include <cmath>

namespace opkit::quantum {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

std::vector<CMat> hermitian_basis(int d) {
  std::vector<CMat> basis;
  basis.reserve(static_cast<size_t>(d) * d);
  basis.push_back(CMat::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CMat f = CMat::Zero(d, d);
      f(i, j) = s;
      f(j, i) = s;
      basis.push_back(f);
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CMat f = CMat::Zero(d, d);
      f(i, j) = -kI * s;
      f(j, i) = kI * s;
      basis.push_back(f);
    }
  for (int l = 1; l < d; ++l) {
    CMat f = CMat::Zero(d, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) f(m, m) = norm;
    f(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(f);
  }
  return basis;
}

std::vector<int> antisymmetric_indices(int d) {
  std::vector<int> idx;
  int off = 1 + d * (d - 1) / 2;
  for (int k = 0; k < d * (d - 1) / 2; ++k) idx.push_back(off + k);
  return idx;
}

Vec coords_from_matrix(const std::vector<CMat>& basis, const CMat& x) {
  Vec v(static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = (basis[k].adjoint() * x).trace().real();
  return v;
}

CMat matrix_from_coords(const std::vector<CMat>& basis, const Vec& v) {
  CMat x = CMat::Zero(basis[0].rows(), basis[0].cols());
  for (size_t k = 0; k < basis.size(); ++k)
    x += v(static_cast<Eigen::Index>(k)) * basis[k];
  return x;
}

Mat kraus_to_coords(const std::vector<CMat>& basis,
                    const std::vector<CMat>& kraus) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Mat m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    CMat out = CMat::Zero(basis[0].rows(), basis[0].cols());
    for (const auto& k : kraus)
      out += k * basis[static_cast<size_t>(j)] * k.adjoint();
    m.col(j) = coords_from_matrix(basis, out);
  }
  return m;
}

CMat apply_to_matrix(const std::vector<CMat>& basis, const Mat& coords,
                     const CMat& x) {
  CMat h = (x + x.adjoint()) / 2.0;
  CMat a = (x - x.adjoint()) / (2.0 * kI);
  CMat out_h =
      matrix_from_coords(basis, coords * coords_from_matrix(basis, h));
  CMat out_a =
      matrix_from_coords(basis, coords * coords_from_matrix(basis, a));
  return out_h + kI * out_a;
}

CMat choi_matrix(const std::vector<CMat>& basis, const Mat& coords) {
  const auto d = basis[0].rows();
  CMat choi = CMat::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      CMat unit = CMat::Zero(d, d);
      unit(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) = apply_to_matrix(basis, coords, unit);
    }
  return choi;
}

}  // namespace opkit::quantum
