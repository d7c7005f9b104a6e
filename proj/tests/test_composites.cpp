// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include <cmath>

#include "doctest.h"
#include "opkit/composites.hpp"
#include "opkit/geometry.hpp"
#include "opkit/quantum.hpp"
#include "opkit/theories.hpp"
#include "oracles.hpp"

using namespace opkit;

TEST_CASE("local embeddings commute and respect identities") {
  auto q = build_quantum(2);
  auto c = make_composite(q, q);
  Transformation id = identity_transformation(q);
  Mat joint_id = embed_local(c, id, id).matrix;
  CHECK((joint_id - Mat::Identity(16, 16)).lpNorm<Eigen::Infinity>() <=
        1e-14);
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto a = random_quantum_operation(q, 100 + s);
    auto b = random_quantum_operation(q, 200 + s);
    Mat left = embed_first(c, a.op).matrix * embed_second(c, b.op).matrix;
    Mat right = embed_second(c, b.op).matrix * embed_first(c, a.op).matrix;
    CHECK((left - right).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK((left - embed_local(c, a.op, b.op).matrix)
              .lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("local X conjugation maps one Bell state to another") {
  auto bell = build_bell_state(2);
  const auto& c = bell.composite;
  CMat x(2, 2);
  x << 0, 1, 1, 0;
  Transformation xc{c.factor1,
                    quantum::kraus_to_coords(c.factor1->quantum().basis, {x}),
                    "X"};
  Weight moved = schrodinger_apply(embed_first(c, xc), bell.weight);
  // Oracle: (X (x) I)|phi+> is the Bell state (|01> + |10>)/sqrt(2).
  oracle::CVec psi = oracle::CVec::Zero(4);
  psi(1) = psi(2) = 1.0 / std::sqrt(2.0);
  Vec expected = c.joint->from_matrix((psi * psi.adjoint()).eval());
  CHECK((moved.coords - expected).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("local states of product and entangled states") {
  auto q = build_quantum(2);
  auto c = make_composite(q, q);
  Weight w1 = random_state(q, 31);
  Weight w2 = random_state(q, 32);
  Weight prod = product_state(c, w1, w2);
  CHECK((local_state(c, prod, 1).coords - w1.coords)
            .lpNorm<Eigen::Infinity>() <= 1e-13);
  CHECK((local_state(c, prod, 2).coords - w2.coords)
            .lpNorm<Eigen::Infinity>() <= 1e-13);

  auto bell = build_bell_state(2);
  Vec mixed = bell.composite.factor1->barycenter();
  for (int f : {1, 2})
    CHECK((local_state(bell.composite, bell.weight, f).coords - mixed)
              .lpNorm<Eigen::Infinity>() <= 1e-13);

  // Oracle cross-check through the partial trace.
  Weight joint = random_state(c.joint, 33);
  CMat rho = c.joint->to_matrix(joint.coords);
  CMat marg1 = oracle::partial_trace(rho, 2, 2, 2);
  CHECK((local_state(c, joint, 1).coords - q->from_matrix(marg1))
            .lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("classical correlated state has the right marginals") {
  Vec p(3);
  p << 0.5, 0.3, 0.2;
  auto corr = build_classical_correlated(p);
  for (int f : {1, 2})
    CHECK((local_state(corr.composite, corr.weight, f).coords - p)
              .lpNorm<Eigen::Infinity>() <= 1e-14);
}

TEST_CASE("no signaling for the trivial instrument") {
  auto bell = build_bell_state(2);
  Experiment trivial{bell.composite.factor1,
                     {identity_transformation(bell.composite.factor1)},
                     {"id"}};
  auto rep = check_no_signaling(bell.composite, bell.weight, trivial);
  CHECK(rep.deviation <= 1e-15);
}

TEST_CASE("no signaling on random instruments") {
  for (int d : {2, 3}) {
    auto q = build_quantum(d);
    auto c = make_composite(q, q);
    for (std::uint64_t s = 0; s < 20; ++s) {
      Weight joint = random_state(c.joint, 1000 + s);
      Experiment e = random_instrument(q, 3, 2000 + s);
      CHECK(check_no_signaling(c, joint, e).deviation <= 1e-10);
    }
  }
  auto cl = build_classical(3);
  auto cc = make_composite(cl, cl);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Weight joint = random_state(cc.joint, 3000 + s);
    Experiment e = random_instrument(cl, 2, 4000 + s);
    CHECK(check_no_signaling(cc, joint, e).deviation <= 1e-10);
  }
}

TEST_CASE("affine dimension identity for the builders") {
  auto q2 = build_quantum(2);
  auto r = affine_dimension_identity_check(make_composite(q2, q2));
  CHECK(r.adm_joint == 15);
  CHECK(r.adm1 == 3);
  CHECK(r.pass);

  auto bit = build_classical(2);
  auto rb = affine_dimension_identity_check(make_composite(bit, bit));
  CHECK(rb.adm_joint == 3);
  CHECK(rb.pass);

  auto q3 = build_quantum(3);
  auto rq = affine_dimension_identity_check(make_composite(q2, q3));
  CHECK(rq.adm_joint == 35);
  CHECK(rq.pass);
}

TEST_CASE("quantum composites multiply informational dimensions") {
  auto q2 = build_quantum(2);
  auto q3 = build_quantum(3);
  auto c22 = make_composite(q2, q2);
  auto c33 = make_composite(q3, q3);
  auto a22 = dimension_audit(q2, &c22);
  CHECK(a22.hd2_holds.has_value());
  CHECK(*a22.hd2_holds);
  auto a33 = dimension_audit(q3, &c33);
  CHECK(*a33.hd2_holds);
}
