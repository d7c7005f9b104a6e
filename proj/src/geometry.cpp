// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>

#include "opkit/linprog.hpp"
#include "opkit/quantum.hpp"
#include "opkit/rng.hpp"

namespace opkit {

namespace {

CVec random_pure_ket(int d, CounterRng& rng) {
  CVec psi(d);
  for (int i = 0; i < d; ++i)
    psi(i) = std::complex<double>(rng.normal(), rng.normal());
  return psi / psi.norm();
}

double trace_norm(const CMat& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es(x);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Sign function of a Hermitian matrix (zero eigenvalues get +1).
CMat matrix_sign(const CMat& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es(x);
  Vec s = es.eigenvalues();
  for (Eigen::Index k = 0; k < s.size(); ++k) s(k) = s(k) < 0.0 ? -1.0 : 1.0;
  return es.eigenvectors() * s.asDiagonal() *
         es.eigenvectors().adjoint();
}

/// All subsets of {0..count-1} of the given size, lexicographic.
void for_each_subset(int count, int size,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    if (fn(idx)) return;
    int i = size - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == count - size + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

/// Feasibility of a discriminating observable for the given witness
/// states (columns): effects a_1..a_k with sum u, physical on all extreme
/// states, and a_i(w_m) = delta_im. Returns the effects on success.
bool discriminating_effects(const TheoryPtr& t, const Mat& witness,
                            Mat* effects_out) {
  const int n = t->n();
  const int k = static_cast<int>(witness.cols());
  const Mat& v = t->finite_extreme().extreme_states;
  const int nv = static_cast<int>(v.cols());
  const int nvar = n * k;  // effect i occupies block [i*n, (i+1)*n)

  Mat a_eq = Mat::Zero(n + k * k, nvar);
  Vec b_eq = Vec::Zero(n + k * k);
  for (int i = 0; i < k; ++i)
    a_eq.block(0, i * n, n, n) = Mat::Identity(n, n);
  b_eq.head(n) = t->unit_effect();
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < k; ++m) {
      a_eq.block(n + i * k + m, i * n, 1, n) = witness.col(m).transpose();
      b_eq(n + i * k + m) = i == m ? 1.0 : 0.0;
    }

  Mat a_ub = Mat::Zero(2 * k * nv, nvar);
  Vec b_ub = Vec::Zero(2 * k * nv);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < nv; ++c) {
      a_ub.block(2 * (i * nv + c), i * n, 1, n) = v.col(c).transpose();
      b_ub(2 * (i * nv + c)) = 1.0;
      a_ub.block(2 * (i * nv + c) + 1, i * n, 1, n) = -v.col(c).transpose();
      b_ub(2 * (i * nv + c) + 1) = 0.0;
    }

  auto r = SimplexSolver::feasible_point(a_ub, b_ub, a_eq, b_eq, 1e-9);
  if (r.feasible && effects_out) {
    effects_out->resize(n, k);
    for (int i = 0; i < k; ++i) effects_out->col(i) = r.x.segment(i * n, n);
  }
  return r.feasible;
}

bool verify_witness(const TheoryPtr& t, const Mat& states, const Mat& effects,
                    double tol) {
  const int k = static_cast<int>(states.cols());
  if (effects.cols() != k || states.rows() != t->n() ||
      effects.rows() != t->n())
    return false;
  Vec sum = effects.rowwise().sum();
  if ((sum - t->unit_effect()).lpNorm<Eigen::Infinity>() > tol) return false;
  for (int i = 0; i < k; ++i) {
    if (!t->effect_cone_test(effects.col(i), tol)) return false;
    if (!t->is_state_vector(states.col(i), std::max(tol, 1e-8))) return false;
  }
  Mat pairing = effects.transpose() * states;
  return (pairing - Mat::Identity(k, k)).lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace

Observable make_observable(const TheoryPtr& t, std::vector<Vec> effects,
                           double tol) {
  if (effects.empty())
    throw Error(ErrorCode::InvalidArgument, "observable needs effects");
  Vec sum = Vec::Zero(t->n());
  for (const auto& e : effects) {
    if (e.size() != t->n())
      throw Error(ErrorCode::DimensionMismatch, "effect dimension mismatch");
    sum += e;
  }
  if ((sum - t->unit_effect()).lpNorm<Eigen::Infinity>() > tol)
    throw Error(ErrorCode::InvalidArgument,
                "observable effects must sum to the unit effect");
  return {t, std::move(effects)};
}

double effect_norm(const TheoryPtr& t, const Vec& a) {
  return std::max(std::abs(t->sup_pairing(a)), std::abs(t->inf_pairing(a)));
}

double weight_norm(const TheoryPtr& t, const Vec& w) {
  if (t->is_quantum()) return trace_norm(t->to_matrix(w));
  // Maximize a.w over the dual unit ball |a(v)| <= 1 for every extreme v.
  const Mat& v = t->finite_extreme().extreme_states;
  const int nv = static_cast<int>(v.cols());
  Mat a_ub(2 * nv, t->n());
  a_ub.topRows(nv) = v.transpose();
  a_ub.bottomRows(nv) = -v.transpose();
  Vec b_ub = Vec::Ones(2 * nv);
  auto r = SimplexSolver::solve(w, a_ub, b_ub, Mat(0, t->n()), Vec(0));
  if (!r.feasible || !r.bounded)
    throw Error(ErrorCode::Numeric,
                "weight norm program degenerate (states do not span)");
  return r.value;
}

TransformationNormResult transformation_norm(const Transformation& a,
                                             std::uint64_t seed, int starts) {
  const TheoryPtr& t = a.theory;
  TransformationNormResult res;
  if (!t->is_quantum()) {
    const Mat& v = t->finite_extreme().extreme_states;
    double best = 0.0;
    for (Eigen::Index c = 0; c < v.cols(); ++c)
      best = std::max(best, weight_norm(t, a.matrix * v.col(c)));
    res.value = best;
    res.exact = true;
    return res;
  }
  // Conditional-gradient ascent of psi -> ||A(psi psi*)||_tr: the gradient
  // at psi is A*(sgn(A(psi psi*))), whose top eigenvector is the next
  // iterate. Monotone; run from several deterministic starts.
  const auto& q = t->quantum();
  const Mat dual = a.matrix.transpose();
  CounterRng rng(seed);
  double best = 0.0;
  int total_iters = 0;
  for (int s = 0; s < starts; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    CVec psi = random_pure_ket(q.d, sub);
    double val = 0.0;
    for (int it = 0; it < 200; ++it) {
      ++total_iters;
      CMat out = quantum::apply_to_matrix(q.basis, a.matrix,
                                          (psi * psi.adjoint()).eval());
      double v = trace_norm(out);
      CMat grad =
          quantum::apply_to_matrix(q.basis, dual, matrix_sign(out));
      Eigen::SelfAdjointEigenSolver<CMat> es(grad);
      psi = es.eigenvectors().col(q.d - 1);
      if (std::abs(v - val) < 1e-8) {
        val = v;
        break;
      }
      val = v;
    }
    best = std::max(best, val);
  }
  res.value = best;
  res.exact = false;
  res.starts = starts;
  res.iterations = total_iters;
  return res;
}

NormEffectBoundReport check_norm_effect_bound(const Transformation& a,
                                              std::uint64_t seed) {
  NormEffectBoundReport r;
  r.effect_norm = effect_norm(a.theory, induced_effect(a).coords);
  r.transformation_norm = transformation_norm(a, seed).value;
  r.bound_holds = r.effect_norm <= r.transformation_norm + 1e-6;
  return r;
}

bool are_coexistent(const Transformation& a, const Transformation& b,
                    double tol) {
  return coexistence_slack(a, b) <= 1.0 + tol;
}

bool is_predictable(const TheoryPtr& t, const Vec& a, double tol) {
  return std::abs(t->sup_pairing(a) - 1.0) <= tol &&
         std::abs(t->inf_pairing(a)) <= tol;
}

bool is_resolved(const TheoryPtr& t, const Vec& a, double tol) {
  if (!is_predictable(t, a, tol)) return false;
  if (t->is_quantum()) {
    Eigen::SelfAdjointEigenSolver<CMat> es(t->to_matrix(a));
    const Vec& ev = es.eigenvalues();
    // Top eigenvalue 1 must be simple.
    return ev.size() >= 2 && ev(ev.size() - 2) < 1.0 - tol;
  }
  const Mat& v = t->finite_extreme().extreme_states;
  Vec pair = v.transpose() * a;
  int hits = 0;
  for (Eigen::Index c = 0; c < pair.size(); ++c)
    if (pair(c) > 1.0 - tol) ++hits;
  return hits == 1;
}

bool is_informationally_complete(const Observable& obs, bool* minimal,
                                 double rank_tol) {
  const int n = obs.theory->n();
  Mat rows(static_cast<Eigen::Index>(obs.effects.size()), n);
  for (size_t i = 0; i < obs.effects.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) = obs.effects[i].transpose();
  Eigen::JacobiSVD<Mat> svd(rows);
  const Vec& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > rank_tol * sv(0)) ++rank;
  bool complete = rank == n;
  if (minimal) *minimal = complete && static_cast<int>(obs.effects.size()) == n;
  return complete;
}

IdimResult informational_dimension(const TheoryPtr& t, int cap) {
  IdimResult res;
  if (t->declared_idim()) {
    const auto& d = *t->declared_idim();
    if (!verify_witness(t, d.witness_states, d.witness_effects, 1e-8))
      throw Error(ErrorCode::InvalidArgument,
                  "declared informational dimension witness fails");
    res.value = d.value;
    res.witness_states = d.witness_states;
    res.witness_effects = d.witness_effects;
    return res;
  }
  if (t->is_quantum()) {
    // Computational basis states with their projectors.
    const auto& q = t->quantum();
    Mat states(t->n(), q.d);
    for (int i = 0; i < q.d; ++i) {
      CMat p = CMat::Zero(q.d, q.d);
      p(i, i) = 1.0;
      states.col(i) = t->from_matrix(p);
    }
    if (!verify_witness(t, states, states, 1e-8))
      throw Error(ErrorCode::Numeric, "basis witness verification failed");
    res.value = q.d;
    res.witness_states = states;
    res.witness_effects = states;
    return res;
  }
  const Mat& v = t->finite_extreme().extreme_states;
  const int nv = static_cast<int>(v.cols());
  int kmax = cap > 0 ? std::min(cap, nv) : nv;
  for (int k = kmax; k >= 1; --k) {
    bool found = false;
    Mat states, effects;
    for_each_subset(nv, k, [&](const std::vector<int>& idx) {
      Mat w(t->n(), k);
      for (int m = 0; m < k; ++m)
        w.col(m) = v.col(idx[static_cast<size_t>(m)]);
      Mat eff;
      if (discriminating_effects(t, w, &eff)) {
        found = true;
        states = w;
        effects = eff;
        return true;
      }
      return false;
    });
    if (found) {
      res.value = k;
      res.exact = !(cap > 0 && k == cap && cap < nv);
      res.witness_states = states;
      res.witness_effects = effects;
      return res;
    }
  }
  throw Error(ErrorCode::Numeric, "no discriminable state found");
}

bool is_discriminating(const Observable& obs, double tol) {
  const TheoryPtr& t = obs.theory;
  auto idim = informational_dimension(t);
  const int k = static_cast<int>(obs.effects.size());
  if (k != idim.value) return false;
  // Candidate witness states: a maximizer of each effect.
  Mat states(t->n(), k);
  if (t->is_quantum()) {
    for (int i = 0; i < k; ++i) {
      Eigen::SelfAdjointEigenSolver<CMat> es(t->to_matrix(obs.effects[i]));
      CVec top = es.eigenvectors().col(t->quantum().d - 1);
      states.col(i) = t->from_matrix((top * top.adjoint()).eval());
    }
  } else {
    const Mat& v = t->finite_extreme().extreme_states;
    for (int i = 0; i < k; ++i) {
      Eigen::Index best = 0;
      (v.transpose() * obs.effects[i]).maxCoeff(&best);
      states.col(i) = v.col(best);
    }
  }
  Mat eff(t->n(), k);
  for (int i = 0; i < k; ++i) eff.col(i) = obs.effects[i];
  Mat pairing = eff.transpose() * states;
  return (pairing - Mat::Identity(k, k)).lpNorm<Eigen::Infinity>() <= tol;
}

DimensionAudit dimension_audit(const TheoryPtr& t,
                               const CompositeTheory* composite) {
  DimensionAudit audit;
  audit.adm = t->adm();
  audit.idim = informational_dimension(t);
  audit.idim_bound_holds = audit.idim.value <= audit.adm + 1;
  audit.hd_holds = audit.adm == audit.idim.value * audit.idim.value - 1;
  if (composite) {
    auto aff = affine_dimension_identity_check(*composite);
    audit.admbound_holds = aff.pass;
    auto i1 = informational_dimension(composite->factor1);
    auto i2 = informational_dimension(composite->factor2);
    auto i12 = informational_dimension(composite->joint);
    audit.hd2_holds = i12.value == i1.value * i2.value;
  }
  return audit;
}

}  // namespace opkit
