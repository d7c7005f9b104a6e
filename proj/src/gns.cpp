// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/gns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "opkit/quantum.hpp"
#include "opkit/rng.hpp"

namespace opkit {

namespace {

Mat random_matrix(int n, CounterRng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  double f = m.norm();
  if (f > 0) m /= f;
  return m;
}

Vec random_vector(int n, CounterRng& rng) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

Vec random_state(const TheoryPtr& t, CounterRng& rng) {
  if (t->is_quantum()) {
    const auto& q = t->quantum();
    CVec psi(q.d);
    for (int i = 0; i < q.d; ++i)
      psi(i) = std::complex<double>(rng.normal(), rng.normal());
    psi /= psi.norm();
    return t->from_matrix((psi * psi.adjoint()).eval());
  }
  const Mat& v = t->finite_extreme().extreme_states;
  Vec lambda(v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) lambda(c) = rng.uniform() + 1e-3;
  lambda /= lambda.sum();
  return v * lambda;
}

/// Random physical effect: affinely rescale a random covector so its
/// range over the state set is [0, 1].
Vec random_effect(const TheoryPtr& t, CounterRng& rng) {
  Vec e = random_vector(t->n(), rng);
  double hi = t->sup_pairing(e);
  double lo = t->inf_pairing(e);
  if (hi - lo < 1e-12) return t->unit_effect();
  return (e - lo * t->unit_effect()) / (hi - lo);
}

}  // namespace

Mat bilinear_form(const BipartiteState& phi, double* asymmetry) {
  const int n = phi.composite.factor1->n();
  if (phi.composite.factor2->n() != n)
    throw Error(ErrorCode::InvalidArgument,
                "bilinear form needs two identical factors");
  Mat w = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>(
      phi.weight.coords.data(), n, n);
  if (asymmetry) *asymmetry = (w - w.transpose()).lpNorm<Eigen::Infinity>();
  return (w + w.transpose()) / 2.0;
}

InvolutionData involution(const Mat& m, double rel_tol) {
  InvolutionData inv;
  inv.m = (m + m.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(inv.m);
  inv.eigenvalues = es.eigenvalues();
  inv.eigenvectors = es.eigenvectors();
  double scale = inv.eigenvalues.cwiseAbs().maxCoeff();
  double eps = rel_tol * scale;
  Vec signs(inv.eigenvalues.size());
  for (Eigen::Index k = 0; k < inv.eigenvalues.size(); ++k) {
    if (std::abs(inv.eigenvalues(k)) <= eps) {
      ++inv.n_zero;
      signs(k) = 1.0;  // zero modes assigned to P+
    } else if (inv.eigenvalues(k) < 0) {
      ++inv.n_negative;
      signs(k) = -1.0;
    } else {
      ++inv.n_positive;
      signs(k) = 1.0;
    }
  }
  inv.degenerate = inv.n_zero > 0;
  inv.sigma =
      inv.eigenvectors * signs.asDiagonal() * inv.eigenvectors.transpose();
  return inv;
}

Mat gram_matrix(const InvolutionData& inv) {
  Mat g = inv.m * inv.sigma;
  return (g + g.transpose()) / 2.0;
}

PositivityReport check_strict_positivity(const Mat& gram, double tol) {
  PositivityReport r;
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (std::abs(es.eigenvalues()(k)) <= tol * std::max(scale, 1.0))
      ++r.null_rank;
  r.pass = r.min_eigenvalue > tol;
  return r;
}

Transformation extend_involution(const InvolutionData& inv,
                                 const Transformation& a) {
  return {a.theory, inv.sigma * a.matrix * inv.sigma, a.label + "^s"};
}

SigmaPhysicalityReport check_sigma_physicality(
    const InvolutionData& inv, const TheoryPtr& t,
    const std::vector<Transformation>& transformations,
    const std::vector<Weight>& states, double tol) {
  SigmaPhysicalityReport r;
  r.unit_preserved =
      (inv.sigma * t->unit_effect() - t->unit_effect())
          .lpNorm<Eigen::Infinity>() <= tol;
  for (const auto& a : transformations) {
    ++r.checked;
    if (!is_physical_transformation(extend_involution(inv, a), 1e-8))
      ++r.violations;
  }
  for (const auto& w : states) {
    ++r.checked;
    if (!t->is_state_vector(inv.sigma * w.coords, 1e-8)) ++r.violations;
  }
  r.pass = r.unit_preserved && r.violations == 0;
  return r;
}

Transformation adjoint(const FaithfulCalculus& calc, const InvolutionData& inv,
                       const Transformation& a) {
  Transformation ad = extend_involution(inv, calc.transpose(a));
  ad.label = a.label + "^";
  return ad;
}

GnsRepresentation gns_representation(const FaithfulCalculus& calc,
                                     const InvolutionData& inv) {
  GnsRepresentation rep;
  rep.m = inv.m;
  rep.sigma = inv.sigma;
  rep.gram = gram_matrix(inv);
  Eigen::SelfAdjointEigenSolver<Mat> es(rep.gram);
  const Vec& ev = es.eigenvalues();
  double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  Vec sq = Vec::Zero(ev.size());
  Vec sq_inv = Vec::Zero(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > 1e-12 * scale) {
      sq(k) = std::sqrt(ev(k));
      sq_inv(k) = 1.0 / sq(k);
    } else {
      ++rep.null_rank;
    }
  }
  rep.gram_sqrt =
      es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
  rep.gram_sqrt_pinv =
      es.eigenvectors() * sq_inv.asDiagonal() * es.eigenvectors().transpose();
  // Pseudo-inverse of M shares eigenvectors with sigma-signed |M|.
  Eigen::SelfAdjointEigenSolver<Mat> esm(rep.m);
  Vec mi = Vec::Zero(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    if (std::abs(esm.eigenvalues()(k)) > 1e-12 * scale)
      mi(k) = 1.0 / esm.eigenvalues()(k);
  rep.m_pinv =
      esm.eigenvectors() * mi.asDiagonal() * esm.eigenvectors().transpose();
  (void)calc;
  return rep;
}

Mat represent(const GnsRepresentation& rep, const Mat& a_matrix) {
  return rep.m_pinv * a_matrix * rep.m;
}

double gns_operator_norm(const GnsRepresentation& rep, const Mat& a_matrix) {
  Mat op = rep.gram_sqrt * represent(rep, a_matrix) * rep.gram_sqrt_pinv;
  Eigen::JacobiSVD<Mat> svd(op);
  return svd.singularValues()(0);
}

Vec gns_state_vector(const GnsRepresentation& rep, const Vec& omega) {
  return rep.sigma * (rep.m_pinv * omega);
}

AdjointIdentityReport check_adjoint_identity(const FaithfulCalculus& calc,
                                             const InvolutionData& inv,
                                             const GnsRepresentation& rep,
                                             std::uint64_t seed, int samples,
                                             double tol) {
  const TheoryPtr& t = calc.theory();
  const int n = t->n();
  AdjointIdentityReport r;
  CounterRng rng(seed);
  Weight marginal2 = local_state(calc.phi().composite, calc.phi().weight, 2);
  for (int s = 0; s < samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a{t, random_matrix(n, sub), "a"};
    Transformation b{t, random_matrix(n, sub), "b"};
    Transformation c{t, random_matrix(n, sub), "c"};
    Vec x = random_vector(n, sub);
    Vec y = random_vector(n, sub);
    Transformation cd = adjoint(calc, inv, c);
    // <pi(C^) x, y>_G = <x, pi(C) y>_G
    double lhs = (represent(rep, cd.matrix) * x).dot(rep.gram * y);
    double rhs = x.dot(rep.gram * (represent(rep, c.matrix) * y));
    r.max_gram_deviation = std::max(r.max_gram_deviation, std::abs(lhs - rhs));
    // <B|A> = second marginal evaluated after A^ composed with B.
    Transformation ap = calc.transpose(a);
    Transformation bp = calc.transpose(b);
    double scalar = calc.pairing(bp, extend_involution(inv, ap));
    Transformation adag = adjoint(calc, inv, a);
    double marg = probability(induced_effect(compose(adag, b)), marginal2);
    r.max_marginal_deviation =
        std::max(r.max_marginal_deviation, std::abs(scalar - marg));
    Transformation add = adjoint(calc, inv, adag);
    r.max_involutive_deviation =
        std::max(r.max_involutive_deviation,
                 (add.matrix - a.matrix).lpNorm<Eigen::Infinity>());
  }
  r.pass = r.max_gram_deviation <= tol && r.max_marginal_deviation <= tol &&
           r.max_involutive_deviation <= std::max(tol, 1e-10);
  return r;
}

CStarReport check_cstar_identity(const FaithfulCalculus& calc,
                                 const InvolutionData& inv,
                                 const GnsRepresentation& rep,
                                 std::uint64_t seed, int samples,
                                 double identity_tol, double norm_tol) {
  const TheoryPtr& t = calc.theory();
  const int n = t->n();
  CStarReport r;
  CounterRng rng(seed);
  for (int s = 0; s < samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a{t, random_matrix(n, sub), "a"};
    Transformation ad = adjoint(calc, inv, a);
    double na = gns_operator_norm(rep, a.matrix);
    double nad = gns_operator_norm(rep, ad.matrix);
    double naa = gns_operator_norm(rep, (ad.matrix * a.matrix).eval());
    r.max_identity_deviation =
        std::max(r.max_identity_deviation, std::abs(naa - na * na));
    r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(na - nad));
  }
  r.pass = r.max_identity_deviation <= identity_tol &&
           r.max_norm_deviation <= norm_tol;
  return r;
}

BornRuleReport born_rule_check(const FaithfulCalculus& calc,
                               const InvolutionData& inv,
                               const GnsRepresentation& rep,
                               std::uint64_t seed, int samples, double tol) {
  const TheoryPtr& t = calc.theory();
  const int n = t->n();
  BornRuleReport r;
  CounterRng rng(seed);
  (void)inv;
  for (int s = 0; s < samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Vec omega = random_state(t, sub);
    Vec a = random_effect(t, sub);
    Vec b = random_effect(t, sub);
    Mat am = random_matrix(n, sub);
    Vec v_omega = gns_state_vector(rep, omega);
    double direct = a.dot(omega);
    double via_gns = a.dot(rep.gram * v_omega);
    r.max_state_deviation =
        std::max(r.max_state_deviation, std::abs(direct - via_gns));
    Mat a_sigma = rep.sigma * am * rep.sigma;
    double direct_t = b.dot(am * omega);
    double via_t = b.dot(rep.gram * (represent(rep, a_sigma) * v_omega));
    r.max_transformation_deviation =
        std::max(r.max_transformation_deviation, std::abs(direct_t - via_t));
  }
  r.pass = r.max_state_deviation <= tol &&
           r.max_transformation_deviation <= tol;
  return r;
}

}  // namespace opkit
