// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Independent density-matrix-level oracles for the tests. These
// deliberately re-derive everything from plain Eigen so that library
// results are checked against a second code path.

#ifndef OPKIT_TESTS_ORACLES_HPP
#define OPKIT_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <vector>

namespace oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline CMat kraus_apply(const std::vector<CMat>& kraus, const CMat& rho) {
  CMat out = CMat::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

inline double trace_norm(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  return es.eigenvalues().cwiseAbs().sum();
}

inline double min_eigenvalue(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  return es.eigenvalues().minCoeff();
}

/// Partial trace of a (d1*d2)x(d1*d2) matrix over the named factor
/// (kron index convention: row = i1*d2 + i2).
inline CMat partial_trace(const CMat& rho, int d1, int d2, int traced_factor) {
  if (traced_factor == 1) {
    CMat out = CMat::Zero(d2, d2);
    for (int i = 0; i < d1; ++i)
      out += rho.block(i * d2, i * d2, d2, d2);
    return out;
  }
  CMat out = CMat::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) {
      std::complex<double> tr = 0.0;
      for (int k = 0; k < d2; ++k) tr += rho(i * d2 + k, j * d2 + k);
      out(i, j) = tr;
    }
  return out;
}

/// Choi matrix sum_ij |i><j| (x) K(|i><j|).
inline CMat choi(const std::vector<CMat>& kraus, int d) {
  CMat out = CMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMat unit = CMat::Zero(d, d);
      unit(i, j) = 1.0;
      out.block(i * d, j * d, d, d) = kraus_apply(kraus, unit);
    }
  return out;
}

/// Independent copy of the generalized Gell-Mann ordering used by the
/// library's file-format convention (identity, symmetric, antisymmetric,
/// diagonal), written from scratch.
inline std::vector<CMat> gell_mann_basis(int d) {
  const std::complex<double> im(0.0, 1.0);
  std::vector<CMat> out;
  out.push_back(CMat::Identity(d, d) / std::sqrt(double(d)));
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        CMat f = CMat::Zero(d, d);
        if (pass == 0) {
          f(i, j) = f(j, i) = 1.0 / std::sqrt(2.0);
        } else {
          f(i, j) = -im / std::sqrt(2.0);
          f(j, i) = im / std::sqrt(2.0);
        }
        out.push_back(f);
      }
  for (int l = 1; l < d; ++l) {
    CMat f = CMat::Zero(d, d);
    for (int m = 0; m < l; ++m) f(m, m) = 1.0;
    f(l, l) = -double(l);
    f /= std::sqrt(double(l) * (l + 1));
    out.push_back(f);
  }
  return out;
}

inline Vec coords(const std::vector<CMat>& basis, const CMat& x) {
  Vec v(static_cast<Eigen::Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = (basis[k] * x).trace().real();
  return v;
}

/// Coordinate matrix of rho -> sum_k K rho K^dag, derived column by
/// column from the oracle Kraus action.
inline Mat kraus_coords(const std::vector<CMat>& kraus, int d) {
  auto basis = gell_mann_basis(d);
  Mat m(d * d, d * d);
  for (int j = 0; j < d * d; ++j)
    m.col(j) = coords(basis, kraus_apply(kraus, basis[size_t(j)]));
  return m;
}

inline std::vector<CMat> transpose_kraus(const std::vector<CMat>& kraus) {
  std::vector<CMat> out;
  for (const auto& k : kraus) out.push_back(k.transpose());
  return out;
}

inline std::vector<CMat> adjoint_kraus(const std::vector<CMat>& kraus) {
  std::vector<CMat> out;
  for (const auto& k : kraus) out.push_back(k.adjoint());
  return out;
}

inline std::vector<CMat> conjugate_kraus(const std::vector<CMat>& kraus) {
  std::vector<CMat> out;
  for (const auto& k : kraus) out.push_back(k.conjugate());
  return out;
}

/// Outcome probabilities of a projective measurement given by kets.
inline Vec projective_probabilities(const CMat& rho,
                                    const std::vector<CVec>& kets) {
  Vec p(static_cast<Eigen::Index>(kets.size()));
  for (size_t i = 0; i < kets.size(); ++i)
    p(static_cast<Eigen::Index>(i)) =
        (kets[i].adjoint() * rho * kets[i]).value().real();
  return p;
}

}  // namespace oracle

#endif
