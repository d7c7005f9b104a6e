// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/theories.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "opkit/quantum.hpp"
#include "opkit/rng.hpp"

namespace opkit {

namespace {

CMat random_complex_matrix(int rows, int cols, CounterRng& rng) {
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = std::complex<double>(rng.normal(), rng.normal());
  return m;
}

CMat inverse_sqrt(const CMat& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es(x);
  Vec v = es.eigenvalues();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    v(k) = v(k) > 1e-14 ? 1.0 / std::sqrt(v(k)) : 0.0;
  return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TheoryPtr build_classical(int k) {
  if (k < 2)
    throw Error(ErrorCode::InvalidArgument, "classical theory needs k >= 2");
  FiniteExtremeModel model;
  model.extreme_states = Mat::Identity(k, k);
  DeclaredIdim idim;
  idim.value = k;
  idim.witness_states = Mat::Identity(k, k);
  idim.witness_effects = Mat::Identity(k, k);
  return std::make_shared<const TheorySpace>(
      "classical" + std::to_string(k), Vec::Ones(k), std::move(model),
      std::move(idim));
}

TheoryPtr build_quantum(int d) {
  if (d < 2)
    throw Error(ErrorCode::InvalidArgument, "quantum theory needs d >= 2");
  QuantumSpectralModel model;
  model.d = d;
  model.basis = quantum::hermitian_basis(d);
  Vec unit = quantum::coords_from_matrix(model.basis, CMat::Identity(d, d));
  DeclaredIdim idim;
  idim.value = d;
  idim.witness_states = Mat(d * d, d);
  for (int i = 0; i < d; ++i) {
    CMat p = CMat::Zero(d, d);
    p(i, i) = 1.0;
    idim.witness_states.col(i) = quantum::coords_from_matrix(model.basis, p);
  }
  idim.witness_effects = idim.witness_states;
  return std::make_shared<const TheorySpace>(
      "quantum" + std::to_string(d), unit, std::move(model), std::move(idim));
}

TheoryPtr build_gbit() {
  // Coordinates (normalization, x, y); state set the square |x|,|y| <= 1.
  FiniteExtremeModel model;
  model.extreme_states = Mat(3, 4);
  model.extreme_states << 1, 1, 1, 1,
                          1, 1, -1, -1,
                          1, -1, 1, -1;
  Vec unit(3);
  unit << 1, 0, 0;
  return std::make_shared<const TheorySpace>("gbit", unit, std::move(model));
}

BipartiteState build_bell_state(int d) {
  TheoryPtr q = build_quantum(d);
  CompositeTheory c = make_composite(q, q);
  CVec phi = CVec::Zero(d * d);
  for (int i = 0; i < d; ++i)
    phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  Weight w{c.joint, c.joint->from_matrix((phi * phi.adjoint()).eval())};
  return {std::move(c), std::move(w)};
}

BipartiteState build_classical_correlated(const Vec& p) {
  const int k = static_cast<int>(p.size());
  if (k < 2 || p.minCoeff() <= 0.0 || std::abs(p.sum() - 1.0) > 1e-10)
    throw Error(ErrorCode::InvalidArgument,
                "correlated state needs a strictly positive distribution");
  TheoryPtr t = build_classical(k);
  CompositeTheory c = make_composite(t, t);
  Vec coords = Vec::Zero(k * k);
  for (int i = 0; i < k; ++i) coords(i * k + i) = p(i);
  Weight w{c.joint, std::move(coords)};
  return {std::move(c), std::move(w)};
}

BipartiteState build_product_state(const TheoryPtr& t, const Vec& w) {
  CompositeTheory c = make_composite(t, t);
  Weight joint = product_state(c, {t, w}, {t, w});
  return {std::move(c), std::move(joint)};
}

QuantumOperationSample random_quantum_channel(const TheoryPtr& t,
                                              std::uint64_t seed,
                                              int kraus_count) {
  const auto& q = t->quantum();
  CounterRng rng(seed);
  std::vector<CMat> kraus;
  CMat sum = CMat::Zero(q.d, q.d);
  for (int i = 0; i < kraus_count; ++i) {
    kraus.push_back(random_complex_matrix(q.d, q.d, rng));
    sum += kraus.back().adjoint() * kraus.back();
  }
  CMat norm = inverse_sqrt(sum);
  for (auto& k : kraus) k = k * norm;
  return {{t, quantum::kraus_to_coords(q.basis, kraus), "channel"}, kraus};
}

QuantumOperationSample random_quantum_operation(const TheoryPtr& t,
                                                std::uint64_t seed,
                                                int kraus_count) {
  const auto& q = t->quantum();
  CounterRng rng(seed);
  std::vector<CMat> kraus;
  CMat sum = CMat::Zero(q.d, q.d);
  for (int i = 0; i < kraus_count; ++i) {
    kraus.push_back(random_complex_matrix(q.d, q.d, rng));
    sum += kraus.back().adjoint() * kraus.back();
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(sum);
  double scale = 1.0 / std::sqrt(es.eigenvalues().maxCoeff());
  for (auto& k : kraus) k *= scale;
  return {{t, quantum::kraus_to_coords(q.basis, kraus), "operation"}, kraus};
}

Weight random_state(const TheoryPtr& t, std::uint64_t seed) {
  CounterRng rng(seed);
  if (t->is_quantum()) {
    const auto& q = t->quantum();
    // Mixed state from a random rank-d purification.
    CMat g = random_complex_matrix(q.d, q.d, rng);
    CMat rho = g * g.adjoint();
    rho /= rho.trace();
    return {t, t->from_matrix(rho)};
  }
  const Mat& v = t->finite_extreme().extreme_states;
  Vec lambda(v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) lambda(c) = rng.uniform() + 1e-3;
  lambda /= lambda.sum();
  return {t, v * lambda};
}

Experiment random_instrument(const TheoryPtr& t, int outcomes,
                             std::uint64_t seed) {
  if (outcomes < 1)
    throw Error(ErrorCode::InvalidArgument, "instrument needs outcomes >= 1");
  CounterRng rng(seed);
  Experiment e;
  e.theory = t;
  if (t->is_quantum()) {
    const auto& q = t->quantum();
    std::vector<CMat> kraus;
    CMat sum = CMat::Zero(q.d, q.d);
    for (int i = 0; i < outcomes; ++i) {
      kraus.push_back(random_complex_matrix(q.d, q.d, rng));
      sum += kraus.back().adjoint() * kraus.back();
    }
    CMat norm = inverse_sqrt(sum);
    for (int i = 0; i < outcomes; ++i) {
      std::vector<CMat> single{kraus[static_cast<size_t>(i)] * norm};
      e.transformations.push_back(
          {t, quantum::kraus_to_coords(q.basis, single),
           "k" + std::to_string(i)});
      e.labels.push_back("k" + std::to_string(i));
    }
    return e;
  }
  // Classical simplex: random nonnegative members normalized so their sum
  // is column-stochastic.
  const Mat& v = t->finite_extreme().extreme_states;
  if (!v.isApprox(Mat::Identity(t->n(), t->n()), 1e-12))
    throw Error(ErrorCode::InvalidArgument,
                "random instruments are provided for classical and quantum "
                "theories only");
  const int n = t->n();
  std::vector<Mat> members;
  Mat total = Mat::Zero(n, n);
  for (int i = 0; i < outcomes; ++i) {
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rng.uniform() + 1e-6;
    members.push_back(m);
    total += m;
  }
  Vec colsum = total.colwise().sum();
  for (int i = 0; i < outcomes; ++i) {
    Mat m = members[static_cast<size_t>(i)];
    for (int c = 0; c < n; ++c) m.col(c) /= colsum(c);
    e.transformations.push_back({t, std::move(m), "m" + std::to_string(i)});
    e.labels.push_back("m" + std::to_string(i));
  }
  return e;
}

}  // namespace opkit
