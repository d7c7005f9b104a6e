// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/theory.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <utility>

#include "opkit/linprog.hpp"
#include "opkit/quantum.hpp"

namespace opkit {

namespace {

Mat quantum_probe_states(const QuantumSpectralModel& q) {
  // Tomography set: basis projectors |i><i|, then for each i < j the
  // states (|i>+|j>)/sqrt(2) and (|i>+i|j>)/sqrt(2). Spans the weight
  // space (d*d states).
  const int d = q.d;
  std::vector<CVec> kets;
  for (int i = 0; i < d; ++i) {
    CVec k = CVec::Zero(d);
    k(i) = 1.0;
    kets.push_back(k);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CVec k = CVec::Zero(d);
      k(i) = 1.0 / std::sqrt(2.0);
      k(j) = 1.0 / std::sqrt(2.0);
      kets.push_back(k);
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CVec k = CVec::Zero(d);
      k(i) = 1.0 / std::sqrt(2.0);
      k(j) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
      kets.push_back(k);
    }
  Mat probes(d * d, static_cast<Eigen::Index>(kets.size()));
  for (size_t c = 0; c < kets.size(); ++c) {
    CMat rho = kets[c] * kets[c].adjoint();
    probes.col(static_cast<Eigen::Index>(c)) =
        quantum::coords_from_matrix(q.basis, rho);
  }
  return probes;
}

}  // namespace

TheorySpace::TheorySpace(
    std::string name, Vec unit_effect,
    std::variant<FiniteExtremeModel, QuantumSpectralModel> model,
    std::optional<DeclaredIdim> declared_idim)
    : name_(std::move(name)),
      unit_(std::move(unit_effect)),
      model_(std::move(model)),
      declared_idim_(std::move(declared_idim)) {
  validate();
  if (is_quantum())
    probes_ = quantum_probe_states(quantum());
  else
    probes_ = finite_extreme().extreme_states;
}

void TheorySpace::validate() const {
  if (is_quantum()) {
    const auto& q = quantum();
    if (q.d < 2) throw Error(ErrorCode::InvalidArgument, "quantum d must be >= 2");
    if (n() != q.d * q.d)
      throw Error(ErrorCode::DimensionMismatch, "quantum model needs n = d*d");
  } else {
    const auto& f = finite_extreme();
    if (f.extreme_states.rows() != n())
      throw Error(ErrorCode::DimensionMismatch,
                  "extreme state rows must equal effect dimension");
    if (f.extreme_states.cols() < 1)
      throw Error(ErrorCode::InvalidArgument, "need at least one extreme state");
    Vec pair = f.extreme_states.transpose() * unit_;
    for (Eigen::Index k = 0; k < pair.size(); ++k)
      if (std::abs(pair(k) - 1.0) > 1e-9)
        throw Error(ErrorCode::InvalidArgument,
                    "extreme states must be normalized against the unit effect");
  }
}

double TheorySpace::sup_pairing(const Vec& effect) const {
  if (is_quantum()) {
    CMat e = to_matrix(effect);
    Eigen::SelfAdjointEigenSolver<CMat> es(e);
    return es.eigenvalues().maxCoeff();
  }
  return (finite_extreme().extreme_states.transpose() * effect).maxCoeff();
}

double TheorySpace::inf_pairing(const Vec& effect) const {
  if (is_quantum()) {
    CMat e = to_matrix(effect);
    Eigen::SelfAdjointEigenSolver<CMat> es(e);
    return es.eigenvalues().minCoeff();
  }
  return (finite_extreme().extreme_states.transpose() * effect).minCoeff();
}

bool TheorySpace::effect_cone_test(const Vec& effect, double tol) const {
  return inf_pairing(effect) >= -tol && sup_pairing(effect) <= 1.0 + tol;
}

bool TheorySpace::is_state_vector(const Vec& w, double tol) const {
  if (std::abs(unit_.dot(w) - 1.0) > tol) return false;
  if (is_quantum()) {
    CMat rho = to_matrix(w);
    Eigen::SelfAdjointEigenSolver<CMat> es(rho);
    return es.eigenvalues().minCoeff() >= -tol;
  }
  // Convex hull membership: find lambda >= 0 with V lambda = w, sum = 1.
  const Mat& v = finite_extreme().extreme_states;
  const int k = static_cast<int>(v.cols());
  Mat a_ub(k, k);
  a_ub = -Mat::Identity(k, k);
  Vec b_ub = Vec::Constant(k, tol);
  Mat a_eq(v.rows(), k);
  a_eq = v;
  Vec b_eq = w;
  auto r = SimplexSolver::feasible_point(a_ub, b_ub, a_eq, b_eq, tol);
  return r.feasible;
}

CMat TheorySpace::to_matrix(const Vec& v) const {
  return quantum::matrix_from_coords(quantum().basis, v);
}

Vec TheorySpace::from_matrix(const CMat& m) const {
  return quantum::coords_from_matrix(quantum().basis, m);
}

Vec TheorySpace::barycenter() const {
  if (is_quantum()) {
    const auto& q = quantum();
    return from_matrix(CMat::Identity(q.d, q.d) / static_cast<double>(q.d));
  }
  return finite_extreme().extreme_states.rowwise().mean();
}

void require_same_theory(const TheoryPtr& a, const TheoryPtr& b) {
  if (!a || !b || a.get() != b.get())
    throw Error(ErrorCode::DimensionMismatch,
                "operands belong to different theory spaces");
}

double probability(const GeneralizedEffect& effect, const Weight& state) {
  require_same_theory(effect.theory, state.theory);
  return effect.coords.dot(state.coords);
}

Weight schrodinger_apply(const Transformation& a, const Weight& w) {
  require_same_theory(a.theory, w.theory);
  return {w.theory, a.matrix * w.coords};
}

GeneralizedEffect heisenberg_apply(const Transformation& a,
                                   const GeneralizedEffect& b) {
  require_same_theory(a.theory, b.theory);
  return {b.theory, a.matrix.transpose() * b.coords};
}

GeneralizedEffect induced_effect(const Transformation& a) {
  return {a.theory, a.matrix.transpose() * a.theory->unit_effect()};
}

Transformation compose(const Transformation& b, const Transformation& a) {
  require_same_theory(a.theory, b.theory);
  return {a.theory, b.matrix * a.matrix, b.label + "*" + a.label};
}

Transformation identity_transformation(const TheoryPtr& t) {
  return {t, Mat::Identity(t->n(), t->n()), "id"};
}

ConditionedState conditional_state(const Weight& w, const Transformation& a,
                                   double tol) {
  Weight out = schrodinger_apply(a, w);
  double p = w.theory->unit_effect().dot(out.coords);
  if (p <= tol)
    throw Error(ErrorCode::ZeroProbability,
                "cannot condition on a zero-probability outcome");
  return {{w.theory, out.coords / p}, p};
}

bool are_informationally_equivalent(const Transformation& a,
                                    const Transformation& b, double tol) {
  require_same_theory(a.theory, b.theory);
  Vec da = a.matrix.transpose() * a.theory->unit_effect();
  Vec db = b.matrix.transpose() * b.theory->unit_effect();
  return (da - db).lpNorm<Eigen::Infinity>() <= tol;
}

bool are_dynamically_equivalent(const Transformation& a,
                                const Transformation& b, double tol) {
  require_same_theory(a.theory, b.theory);
  const Mat& probes = a.theory->probe_states();
  Mat diff = (a.matrix - b.matrix) * probes;
  return diff.cwiseAbs().maxCoeff() <= tol;
}

double coexistence_slack(const Transformation& a, const Transformation& b) {
  require_same_theory(a.theory, b.theory);
  Vec sum = (a.matrix + b.matrix).transpose() * a.theory->unit_effect();
  return a.theory->sup_pairing(sum);
}

Transformation add_coexistent(const Transformation& a, const Transformation& b,
                              double tol) {
  if (coexistence_slack(a, b) > 1.0 + tol)
    throw Error(ErrorCode::NotCoexistent,
                "transformations are not coexistent; induced effects exceed "
                "the unit effect");
  return {a.theory, a.matrix + b.matrix, a.label + "+" + b.label};
}

Transformation scalar_multiply(double lambda, const Transformation& a) {
  if (lambda < 0.0 || lambda > 1.0)
    throw Error(ErrorCode::InvalidArgument,
                "scalar multiplier must lie in [0, 1]");
  return {a.theory, lambda * a.matrix, a.label};
}

Transformation convex_mix(double lambda, const Transformation& a1,
                          const Transformation& a2) {
  require_same_theory(a1.theory, a2.theory);
  if (lambda < 0.0 || lambda > 1.0)
    throw Error(ErrorCode::InvalidArgument, "mixing weight must lie in [0, 1]");
  return {a1.theory, lambda * a1.matrix + (1.0 - lambda) * a2.matrix,
          a1.label + "|" + a2.label};
}

Weight convex_mix(double lambda, const Weight& w1, const Weight& w2) {
  require_same_theory(w1.theory, w2.theory);
  if (lambda < 0.0 || lambda > 1.0)
    throw Error(ErrorCode::InvalidArgument, "mixing weight must lie in [0, 1]");
  return {w1.theory, lambda * w1.coords + (1.0 - lambda) * w2.coords};
}

bool is_physical_state(const Weight& w, double tol) {
  return w.theory->is_state_vector(w.coords, tol);
}

bool is_physical_effect(const GeneralizedEffect& a, double tol) {
  return a.theory->effect_cone_test(a.coords, tol);
}

bool is_physical_transformation(const Transformation& a, double tol) {
  const TheoryPtr& t = a.theory;
  if (t->is_quantum()) {
    // Complete positivity via the Choi matrix plus the induced effect
    // lying under the unit effect.
    CMat choi = quantum::choi_matrix(t->quantum().basis, a.matrix);
    Eigen::SelfAdjointEigenSolver<CMat> es(choi);
    if (es.eigenvalues().minCoeff() < -tol) return false;
    return t->effect_cone_test(induced_effect(a).coords, tol);
  }
  // Each extreme state must map to a subnormalized physical weight.
  const Mat& v = t->finite_extreme().extreme_states;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Vec out = a.matrix * v.col(c);
    double p = t->unit_effect().dot(out);
    if (p < -tol || p > 1.0 + tol) return false;
    if (p > tol) {
      if (!t->is_state_vector(out / p, std::max(tol, 1e-8))) return false;
    } else {
      if (out.lpNorm<Eigen::Infinity>() > std::sqrt(tol)) return false;
    }
  }
  return true;
}

ExperimentReport validate_experiment(const Experiment& e, double tol) {
  ExperimentReport rep;
  if (e.transformations.empty())
    throw Error(ErrorCode::InvalidArgument, "experiment has no outcomes");
  const TheoryPtr& t = e.theory;
  Mat sum = Mat::Zero(t->n(), t->n());
  for (const auto& a : e.transformations) {
    require_same_theory(t, a.theory);
    sum += a.matrix;
    rep.member_physical.push_back(is_physical_transformation(a, tol));
  }
  Vec total = sum.transpose() * t->unit_effect();
  rep.completeness_deviation =
      (total - t->unit_effect()).lpNorm<Eigen::Infinity>();
  rep.complete = rep.completeness_deviation <= tol;
  rep.pass = rep.complete;
  for (bool ok : rep.member_physical) rep.pass = rep.pass && ok;
  return rep;
}

}  // namespace opkit
