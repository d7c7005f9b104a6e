// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/composites.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace opkit {

CompositeTheory make_composite(const TheoryPtr& t1, const TheoryPtr& t2) {
  if (t1->is_quantum() != t2->is_quantum())
    throw Error(ErrorCode::InvalidArgument,
                "composites require factors of the same kind");
  if (t1->is_quantum()) {
    const auto& q1 = t1->quantum();
    const auto& q2 = t2->quantum();
    // Joint basis is the Kronecker product basis in row-major factor order,
    // so joint coordinates factorize and embeddings are Kronecker products.
    QuantumSpectralModel joint;
    joint.d = q1.d * q2.d;
    for (const auto& f1 : q1.basis)
      for (const auto& f2 : q2.basis)
        joint.basis.push_back(Eigen::kroneckerProduct(f1, f2).eval());
    Vec unit = Eigen::kroneckerProduct(t1->unit_effect(), t2->unit_effect());
    auto jt = std::make_shared<const TheorySpace>(
        t1->name() + "x" + t2->name(), unit, std::move(joint));
    return {t1, t2, jt};
  }
  const Mat& v1 = t1->finite_extreme().extreme_states;
  const Mat& v2 = t2->finite_extreme().extreme_states;
  FiniteExtremeModel joint;
  joint.extreme_states =
      Mat(v1.rows() * v2.rows(), v1.cols() * v2.cols());
  for (Eigen::Index c1 = 0; c1 < v1.cols(); ++c1)
    for (Eigen::Index c2 = 0; c2 < v2.cols(); ++c2)
      joint.extreme_states.col(c1 * v2.cols() + c2) =
          Eigen::kroneckerProduct(v1.col(c1), v2.col(c2));
  Vec unit = Eigen::kroneckerProduct(t1->unit_effect(), t2->unit_effect());
  auto jt = std::make_shared<const TheorySpace>(
      t1->name() + "x" + t2->name(), unit, std::move(joint));
  return {t1, t2, jt};
}

Transformation embed_local(const CompositeTheory& c, const Transformation& a,
                           const Transformation& b) {
  require_same_theory(c.factor1, a.theory);
  require_same_theory(c.factor2, b.theory);
  Mat m = Eigen::kroneckerProduct(a.matrix, b.matrix);
  return {c.joint, std::move(m), "(" + a.label + "," + b.label + ")"};
}

Transformation embed_first(const CompositeTheory& c, const Transformation& a) {
  return embed_local(c, a, identity_transformation(c.factor2));
}

Transformation embed_second(const CompositeTheory& c, const Transformation& b) {
  return embed_local(c, identity_transformation(c.factor1), b);
}

Weight product_state(const CompositeTheory& c, const Weight& w1,
                     const Weight& w2) {
  require_same_theory(c.factor1, w1.theory);
  require_same_theory(c.factor2, w2.theory);
  return {c.joint, Eigen::kroneckerProduct(w1.coords, w2.coords)};
}

Weight local_state(const CompositeTheory& c, const Weight& joint, int factor) {
  require_same_theory(c.joint, joint.theory);
  const Eigen::Index n1 = c.factor1->n();
  const Eigen::Index n2 = c.factor2->n();
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      w(joint.coords.data(), n1, n2);
  if (factor == 1) return {c.factor1, w * c.factor2->unit_effect()};
  if (factor == 2)
    return {c.factor2, w.transpose() * c.factor1->unit_effect()};
  throw Error(ErrorCode::InvalidArgument, "factor index must be 1 or 2");
}

NoSignalingReport check_no_signaling(const CompositeTheory& c,
                                     const Weight& joint, const Experiment& e1,
                                     double tol) {
  auto rep = validate_experiment(e1);
  if (!rep.pass)
    throw Error(ErrorCode::InvalidArgument,
                "no-signaling check needs a valid experiment");
  Mat sum = Mat::Zero(c.factor1->n(), c.factor1->n());
  for (const auto& a : e1.transformations) sum += a.matrix;
  Transformation coarse{c.factor1, std::move(sum), "sum"};
  Weight after = schrodinger_apply(embed_first(c, coarse), joint);
  Vec before2 = local_state(c, joint, 2).coords;
  Vec after2 = local_state(c, after, 2).coords;
  NoSignalingReport r;
  r.deviation = (after2 - before2).lpNorm<Eigen::Infinity>();
  r.pass = r.deviation <= tol;
  return r;
}

AffineDimensionReport affine_dimension_identity_check(
    const CompositeTheory& c) {
  AffineDimensionReport r;
  r.adm_joint = c.joint->adm();
  r.adm1 = c.factor1->adm();
  r.adm2 = c.factor2->adm();
  r.pass = r.adm_joint == r.adm1 * r.adm2 + r.adm1 + r.adm2;
  return r;
}

}  // namespace opkit
