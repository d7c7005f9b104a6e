// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include <cmath>

#include "doctest.h"
#include "opkit/gns.hpp"
#include "opkit/quantum.hpp"
#include "opkit/rng.hpp"
#include "opkit/theories.hpp"
#include "oracles.hpp"

using namespace opkit;

namespace {

struct Derived {
  BipartiteState phi;
  FaithfulCalculus calc;
  InvolutionData inv;
  GnsRepresentation rep;

  explicit Derived(BipartiteState phi_in)
      : phi(std::move(phi_in)),
        calc(phi),
        inv(involution(bilinear_form(phi))),
        rep(gns_representation(calc, inv)) {}
};

Transformation from_kraus(const TheoryPtr& q, const std::vector<CMat>& kraus,
                          const std::string& label) {
  return {q, quantum::kraus_to_coords(q->quantum().basis, kraus), label};
}

}  // namespace

TEST_CASE("bilinear form of the canonical faithful states") {
  double asym = 1.0;
  Mat m2 = bilinear_form(build_bell_state(2), &asym);
  CHECK(asym <= 1e-14);
  Mat expected = Mat::Identity(4, 4) / 2.0;
  expected(2, 2) = -0.5;  // the imaginary Pauli direction
  CHECK((m2 - expected).lpNorm<Eigen::Infinity>() <= 1e-12);

  Vec p(2);
  p << 0.5, 0.5;
  Mat mc = bilinear_form(build_classical_correlated(p));
  CHECK((mc - Mat::Identity(2, 2) / 2.0).lpNorm<Eigen::Infinity>() <= 1e-14);
}

TEST_CASE("involution signature counts the imaginary directions") {
  for (int d : {2, 3, 4}) {
    InvolutionData inv = involution(bilinear_form(build_bell_state(d)));
    CHECK(inv.n_negative == d * (d - 1) / 2);
    CHECK(inv.n_zero == 0);
    CHECK(inv.n_positive == d * d - d * (d - 1) / 2);
    Mat sq = inv.sigma * inv.sigma;
    CHECK((sq - Mat::Identity(d * d, d * d)).lpNorm<Eigen::Infinity>() <=
          1e-10);
    CHECK((inv.sigma - inv.sigma.transpose()).lpNorm<Eigen::Infinity>() <=
          1e-12);
  }
  Vec p(2);
  p << 0.5, 0.5;
  InvolutionData cl = involution(bilinear_form(build_classical_correlated(p)));
  CHECK(cl.n_negative == 0);
  CHECK((cl.sigma - Mat::Identity(2, 2)).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("sigma flips exactly the antisymmetric coordinates") {
  InvolutionData inv = involution(bilinear_form(build_bell_state(2)));
  Vec expected = Vec::Ones(4);
  expected(2) = -1.0;
  CHECK((inv.sigma - Mat(expected.asDiagonal())).lpNorm<Eigen::Infinity>() <=
        1e-12);
}

TEST_CASE("Gram matrix is the normalized Hilbert-Schmidt inner product") {
  Derived d2(build_bell_state(2));
  auto q = d2.calc.theory();
  CounterRng rng(3);
  for (int s = 0; s < 10; ++s) {
    CMat ea = CMat::Random(2, 2);
    ea = ((ea + ea.adjoint()) / 2.0).eval();
    CMat eb = CMat::Random(2, 2);
    eb = ((eb + eb.adjoint()) / 2.0).eval();
    double got =
        q->from_matrix(eb).transpose() * d2.rep.gram * q->from_matrix(ea);
    double expected = (ea.adjoint() * eb).trace().real() / 2.0;
    CHECK(std::abs(got - expected) <= 1e-12);
  }
  // <u|u> = Tr[I]/2 = 1.
  double uu = q->unit_effect().transpose() * d2.rep.gram * q->unit_effect();
  CHECK(uu == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("strict positivity holds for faithful states and fails otherwise") {
  auto pos2 = check_strict_positivity(
      gram_matrix(involution(bilinear_form(build_bell_state(2)))));
  CHECK(pos2.pass);
  CHECK(pos2.null_rank == 0);
  CHECK(pos2.min_eigenvalue == doctest::Approx(0.5).epsilon(1e-10));

  auto pos3 = check_strict_positivity(
      gram_matrix(involution(bilinear_form(build_bell_state(3)))));
  CHECK(pos3.pass);
  CHECK(pos3.min_eigenvalue == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  auto q = build_quantum(2);
  auto prod = build_product_state(q, q->barycenter());
  auto posp = check_strict_positivity(gram_matrix(involution(bilinear_form(prod))));
  CHECK_FALSE(posp.pass);
  CHECK(posp.null_rank > 0);
}

TEST_CASE("sigma extension is conjugation on quantum channels") {
  Derived d2(build_bell_state(2));
  auto q = d2.calc.theory();
  CMat y(2, 2);
  y << std::complex<double>(0, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(0, 0);
  Transformation yc = from_kraus(q, {y}, "Y");
  CHECK((extend_involution(d2.inv, yc).matrix - yc.matrix)
            .lpNorm<Eigen::Infinity>() <= 1e-10);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto chan = random_quantum_channel(q, 700 + s);
    Mat expected =
        oracle::kraus_coords(oracle::conjugate_kraus(chan.kraus), 2);
    CHECK((extend_involution(d2.inv, chan.op).matrix - expected)
              .lpNorm<Eigen::Infinity>() <= 1e-10);
  }
  // Sandwich construction preserves composition exactly.
  auto a = random_quantum_channel(q, 91).op;
  auto b = random_quantum_channel(q, 92).op;
  Mat lhs = extend_involution(d2.inv, compose(a, b)).matrix;
  Mat rhs = extend_involution(d2.inv, a).matrix *
            extend_involution(d2.inv, b).matrix;
  CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("sigma maps the physical cone into itself for the builders") {
  Derived d2(build_bell_state(2));
  auto q = d2.calc.theory();
  std::vector<Transformation> ts;
  std::vector<Weight> ws;
  for (std::uint64_t s = 0; s < 30; ++s) {
    ts.push_back(random_quantum_operation(q, 800 + s).op);
    ws.push_back(random_state(q, 900 + s));
  }
  auto rep = check_sigma_physicality(d2.inv, q, ts, ws);
  CHECK(rep.pass);
  CHECK(rep.unit_preserved);
  CHECK(rep.violations == 0);
}

TEST_CASE("adjoint equals the Heisenberg dual channel") {
  for (int d : {2, 3}) {
    Derived dx(build_bell_state(d));
    auto q = dx.calc.theory();
    Transformation id = identity_transformation(q);
    CHECK((adjoint(dx.calc, dx.inv, id).matrix - id.matrix)
              .lpNorm<Eigen::Infinity>() <= 1e-10);
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto chan = random_quantum_channel(q, 1100 + s);
      Mat expected =
          oracle::kraus_coords(oracle::adjoint_kraus(chan.kraus), d);
      Mat got = adjoint(dx.calc, dx.inv, chan.op).matrix;
      CHECK((got - expected).lpNorm<Eigen::Infinity>() <= 1e-9);
      // The Heisenberg dual in these coordinates is the matrix transpose.
      CHECK((got - chan.op.matrix.transpose()).lpNorm<Eigen::Infinity>() <=
            1e-9);
    }
  }
}

TEST_CASE("adjoint on the stated Kraus examples") {
  Derived d2(build_bell_state(2));
  auto q = d2.calc.theory();
  CMat low = CMat::Zero(2, 2), high = CMat::Zero(2, 2);
  low(0, 1) = 1.0;
  high(1, 0) = 1.0;
  CHECK((adjoint(d2.calc, d2.inv, from_kraus(q, {low}, "low")).matrix -
         from_kraus(q, {high}, "high").matrix)
            .lpNorm<Eigen::Infinity>() <= 1e-10);
  CMat y(2, 2);
  y << std::complex<double>(0, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(0, 0);
  Transformation yc = from_kraus(q, {y}, "Y");
  CHECK((adjoint(d2.calc, d2.inv, yc).matrix - yc.matrix)
            .lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("representation is multiplicative with trivial null ideal") {
  Derived d2(build_bell_state(2));
  CHECK(d2.rep.null_rank == 0);
  auto q = d2.calc.theory();
  Mat id = represent(d2.rep, Mat::Identity(4, 4));
  CHECK((id - Mat::Identity(4, 4)).lpNorm<Eigen::Infinity>() <= 1e-12);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto a = random_quantum_channel(q, 1200 + s).op;
    auto b = random_quantum_channel(q, 1300 + s).op;
    Mat lhs = represent(d2.rep, (a.matrix * b.matrix).eval());
    Mat rhs = represent(d2.rep, a.matrix) * represent(d2.rep, b.matrix);
    CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-10);
  }
}

TEST_CASE("adjoint identity in the Gram inner product") {
  for (int d : {2, 3}) {
    Derived dx(build_bell_state(d));
    auto rep = check_adjoint_identity(dx.calc, dx.inv, dx.rep, 21, 50);
    CHECK(rep.max_gram_deviation <= 1e-9);
    CHECK(rep.max_marginal_deviation <= 1e-9);
    CHECK(rep.max_involutive_deviation <= 1e-10);
    CHECK(rep.pass);
  }
}

TEST_CASE("C* identity for the derived operator norm") {
  for (int d : {2, 3}) {
    Derived dx(build_bell_state(d));
    auto rep = check_cstar_identity(dx.calc, dx.inv, dx.rep, 22, 50);
    CHECK(rep.max_identity_deviation <= 1e-8);
    CHECK(rep.max_norm_deviation <= 1e-9);
    CHECK(rep.pass);
    // Unitary conjugation represents isometrically.
    auto q = dx.calc.theory();
    CMat x(2, 2);
    x << 0, 1, 1, 0;
    if (d == 2) {
      Transformation xc = from_kraus(q, {x}, "X");
      CHECK(gns_operator_norm(dx.rep, xc.matrix) ==
            doctest::Approx(1.0).epsilon(1e-10));
      CHECK(gns_operator_norm(dx.rep, (0.3 * xc.matrix).eval()) ==
            doctest::Approx(0.3).epsilon(1e-10));
    }
  }
  Vec p(3);
  p << 0.2, 0.5, 0.3;
  Derived corr(build_classical_correlated(p));
  CHECK(check_cstar_identity(corr.calc, corr.inv, corr.rep, 23, 50).pass);
}

TEST_CASE("Born rule through the GNS pairing") {
  for (int d : {2, 3}) {
    Derived dx(build_bell_state(d));
    auto rep = born_rule_check(dx.calc, dx.inv, dx.rep, 24, 100);
    CHECK(rep.max_state_deviation <= 1e-8);
    CHECK(rep.max_transformation_deviation <= 1e-8);
    CHECK(rep.pass);
  }
  Vec p(2);
  p << 0.4, 0.6;
  Derived corr(build_classical_correlated(p));
  CHECK(born_rule_check(corr.calc, corr.inv, corr.rep, 25, 100).pass);

  // Direct oracle spot check: measurement statistics of a random state.
  Derived d2(build_bell_state(2));
  auto q = d2.calc.theory();
  Weight w = random_state(q, 4242);
  CMat rho = q->to_matrix(w.coords);
  std::vector<oracle::CVec> kets(2, oracle::CVec::Zero(2));
  kets[0](0) = 1.0;
  kets[1](1) = 1.0;
  Vec expected = oracle::projective_probabilities(rho, kets);
  Vec v = gns_state_vector(d2.rep, w.coords);
  for (int i = 0; i < 2; ++i) {
    CMat proj = CMat::Zero(2, 2);
    proj(i, i) = 1.0;
    double got = q->from_matrix(proj).transpose() * d2.rep.gram * v;
    CHECK(std::abs(got - expected(i)) <= 1e-10);
  }
}

TEST_CASE("Gram space dimension equals idim squared") {
  for (int d : {2, 3}) {
    Derived dx(build_bell_state(d));
    int gram_dim = dx.calc.theory()->n() - dx.rep.null_rank;
    CHECK(gram_dim == d * d);
  }
}
