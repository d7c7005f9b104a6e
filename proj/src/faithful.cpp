// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/faithful.hpp"

#include <Eigen/QR>
#include <cmath>

#include "opkit/rng.hpp"

namespace opkit {

namespace {

/// Joint coordinates of phi reshaped to n x n (row-major over the
/// factor-1 index).
Mat reshape_rowmajor(const Vec& v, Eigen::Index n1, Eigen::Index n2) {
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                        Eigen::RowMajor>>(v.data(), n1, n2);
}

Vec flatten_rowmajor(const Mat& m) {
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm =
      m;
  return Eigen::Map<const Vec>(rm.data(), rm.size());
}

Mat unit_frobenius(Mat m) {
  double f = m.norm();
  if (f > 0) m /= f;
  return m;
}

Mat random_matrix(int n, CounterRng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  return unit_frobenius(std::move(m));
}

}  // namespace

FaithfulCalculus::FaithfulCalculus(BipartiteState phi, double rank_tol)
    : phi_(std::move(phi)) {
  const TheoryPtr& t1 = phi_.composite.factor1;
  const TheoryPtr& t2 = phi_.composite.factor2;
  if (t1->n() != t2->n())
    throw Error(ErrorCode::InvalidArgument,
                "faithful-state calculus needs two identical factors");
  const int n = t1->n();
  // W is the reshaped coordinate matrix of phi: (A,I)phi has reshape A*W
  // and (I,B)phi has reshape W*B^T.
  Mat w = reshape_rowmajor(phi_.weight.coords, n, n);
  l_ = Mat(n * n, n * n);
  r_ = Mat(n * n, n * n);
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) {
      Mat e = Mat::Zero(n, n);
      e(p, q) = 1.0;
      // Column index matches column-major vec(A).
      l_.col(q * n + p) = flatten_rowmajor(e * w);
      r_.col(q * n + p) = flatten_rowmajor(w * e.transpose());
    }
  Eigen::CompleteOrthogonalDecomposition<Mat> cod_r(r_);
  cod_r.setThreshold(rank_tol);
  r_rank_ = static_cast<int>(cod_r.rank());
  transpose_map_ = cod_r.solve(l_);
  Eigen::CompleteOrthogonalDecomposition<Mat> cod_l(l_);
  cod_l.setThreshold(rank_tol);
  l_rank_ = static_cast<int>(cod_l.rank());
}

double FaithfulCalculus::pairing(const Transformation& a,
                                 const Transformation& b) const {
  Weight out = schrodinger_apply(embed_local(phi_.composite, a, b),
                                 phi_.weight);
  return phi_.composite.joint->unit_effect().dot(out.coords);
}

bool FaithfulCalculus::is_symmetric(double tol) const {
  const int n = theory()->n();
  Mat w = reshape_rowmajor(phi_.weight.coords, n, n);
  return (w - w.transpose()).lpNorm<Eigen::Infinity>() <= tol;
}

bool FaithfulCalculus::is_dynamically_faithful() const {
  const int n = theory()->n();
  return l_rank_ == n * n;
}

PreparationResult FaithfulCalculus::preparation_transformation(
    const Weight& joint, double tol) const {
  require_same_theory(phi_.composite.joint, joint.theory);
  const int n = theory()->n();
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(l_);
  Vec x = cod.solve(joint.coords);
  double residual = (l_ * x - joint.coords).lpNorm<Eigen::Infinity>();
  if (residual > tol)
    throw Error(ErrorCode::NotPreparable,
                "joint state is not reachable by a local transformation "
                "from this faithful state");
  Transformation t{theory(), Eigen::Map<const Mat>(x.data(), n, n), "prep"};
  PreparationResult r;
  r.probability = phi_.composite.joint->unit_effect().dot(l_ * x);
  r.residual = residual;
  r.physical = is_physical_transformation(t);
  r.transformation = std::move(t);
  return r;
}

Transformation FaithfulCalculus::transpose(const Transformation& a) const {
  require_same_theory(theory(), a.theory);
  const int n = theory()->n();
  if (l_rank_ < n * n || r_rank_ < n * n)
    throw Error(ErrorCode::NotFaithful,
                "transpose needs a dynamically faithful state in both slots");
  Vec x = transpose_map_ * Eigen::Map<const Vec>(a.matrix.data(), n * n);
  return {a.theory, Eigen::Map<const Mat>(x.data(), n, n), a.label + "'"};
}

double FaithfulCalculus::transpose_residual(const Transformation& a) const {
  Transformation at = transpose(a);
  const int n = theory()->n();
  Vec lhs = l_ * Eigen::Map<const Vec>(a.matrix.data(), n * n);
  Vec rhs = r_ * Eigen::Map<const Vec>(at.matrix.data(), n * n);
  return (lhs - rhs).lpNorm<Eigen::Infinity>();
}

TranspositionAxiomReport FaithfulCalculus::verify_transposition_axioms(
    std::uint64_t seed, int samples, double tol) const {
  const int n = theory()->n();
  TranspositionAxiomReport rep;
  CounterRng rng(seed);
  for (int s = 0; s < samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a{theory(), random_matrix(n, sub), "a"};
    Transformation b{theory(), random_matrix(n, sub), "b"};
    Transformation c{theory(), random_matrix(n, sub), "c"};
    Mat sum_t = transpose({theory(), a.matrix + b.matrix, "a+b"}).matrix;
    rep.additivity = std::max(
        rep.additivity,
        (sum_t - transpose(a).matrix - transpose(b).matrix)
            .lpNorm<Eigen::Infinity>());
    rep.involutivity = std::max(
        rep.involutivity,
        (transpose(transpose(a)).matrix - a.matrix).lpNorm<Eigen::Infinity>());
    Mat comp_t = transpose(compose(a, b)).matrix;
    rep.anti_homomorphism = std::max(
        rep.anti_homomorphism,
        (comp_t - transpose(b).matrix * transpose(a).matrix)
            .lpNorm<Eigen::Infinity>());
    double lhs = pairing(compose(b, a), c);
    double rhs = pairing(b, compose(c, transpose(a)));
    rep.pairing_identity =
        std::max(rep.pairing_identity, std::abs(lhs - rhs));
  }
  rep.pass = rep.additivity <= tol && rep.involutivity <= tol &&
             rep.anti_homomorphism <= tol && rep.pairing_identity <= tol;
  return rep;
}

}  // namespace opkit
