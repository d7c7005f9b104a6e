// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include <cmath>

#include "doctest.h"
#include "opkit/quantum.hpp"
#include "oracles.hpp"

using namespace opkit;

TEST_CASE("hermitian basis is orthonormal and ordered as documented") {
  for (int d : {2, 3, 4}) {
    auto basis = quantum::hermitian_basis(d);
    REQUIRE(static_cast<int>(basis.size()) == d * d);
    for (size_t i = 0; i < basis.size(); ++i) {
      CHECK((basis[i] - basis[i].adjoint()).norm() <= 1e-14);
      for (size_t j = 0; j < basis.size(); ++j) {
        double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs((basis[i] * basis[j]).trace().real() - expected) <=
              1e-14);
      }
    }
    // Antisymmetric block: purely imaginary entries, d(d-1)/2 of them.
    auto anti = quantum::antisymmetric_indices(d);
    CHECK(static_cast<int>(anti.size()) == d * (d - 1) / 2);
    for (int idx : anti)
      CHECK(basis[static_cast<size_t>(idx)].real().norm() <= 1e-14);
  }
}

TEST_CASE("d = 2 basis is the normalized Pauli set") {
  auto basis = quantum::hermitian_basis(2);
  const double s = 1.0 / std::sqrt(2.0);
  CMat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << std::complex<double>(0, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(0, 0);
  z << 1, 0, 0, -1;
  CHECK((basis[0] - s * CMat::Identity(2, 2)).norm() <= 1e-14);
  CHECK((basis[1] - s * x).norm() <= 1e-14);
  CHECK((basis[2] - s * y).norm() <= 1e-14);
  CHECK((basis[3] - s * z).norm() <= 1e-14);
}

TEST_CASE("coordinate conversions round trip") {
  for (int d : {2, 3}) {
    auto basis = quantum::hermitian_basis(d);
    auto oracle_basis = oracle::gell_mann_basis(d);
    for (int k = 0; k < d * d; ++k)
      CHECK((basis[static_cast<size_t>(k)] -
             oracle_basis[static_cast<size_t>(k)])
                .norm() <= 1e-14);
    CMat h = CMat::Random(d, d);
    h = ((h + h.adjoint()) / 2.0).eval();
    Vec v = quantum::coords_from_matrix(basis, h);
    CHECK((quantum::matrix_from_coords(basis, v) - h).norm() <= 1e-12);
  }
}

TEST_CASE("kraus coordinate matrices act like the Kraus maps") {
  for (int d : {2, 3}) {
    auto basis = quantum::hermitian_basis(d);
    std::vector<CMat> kraus{CMat::Random(d, d), CMat::Random(d, d)};
    Mat coords = quantum::kraus_to_coords(basis, kraus);
    CMat rho = CMat::Random(d, d);
    rho = (rho * rho.adjoint()).eval();
    rho /= rho.trace();
    CMat expected = oracle::kraus_apply(kraus, rho);
    CMat got = quantum::apply_to_matrix(basis, coords, rho);
    CHECK((got - expected).norm() <= 1e-12);
    // Complex-linear extension also matches on non-Hermitian inputs.
    CMat arbitrary = CMat::Random(d, d);
    CHECK((quantum::apply_to_matrix(basis, coords, arbitrary) -
           oracle::kraus_apply(kraus, arbitrary))
              .norm() <= 1e-12);
  }
}

TEST_CASE("choi matrix matches the oracle and certifies positivity") {
  for (int d : {2, 3}) {
    auto basis = quantum::hermitian_basis(d);
    std::vector<CMat> kraus{CMat::Random(d, d)};
    Mat coords = quantum::kraus_to_coords(basis, kraus);
    CMat choi = quantum::choi_matrix(basis, coords);
    CHECK((choi - oracle::choi(kraus, d)).norm() <= 1e-12);
    CHECK(oracle::min_eigenvalue(choi) >= -1e-12);
  }
}
