// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Hermitian operator basis and coordinate conversions for the quantum
// state-space model. The basis for dimension d is orthonormal under the
// Hilbert-Schmidt inner product Tr[F_i F_j] = delta_ij and ordered as:
//
//   index 0:                I / sqrt(d)
//   symmetric block:        (|i><j| + |j><i|) / sqrt(2),   i < j (lex order)
//   antisymmetric block:    (-i|i><j| + i|j><i|) / sqrt(2), i < j (lex order)
//   diagonal block:         (sum_{m<l} |m><m| - l|l><l|) / sqrt(l(l+1)),
//                           l = 1..d-1
//
// For d = 2 this is {I, X, Y, Z} / sqrt(2).

#ifndef OPKIT_QUANTUM_HPP
#define OPKIT_QUANTUM_HPP

#include <complex>
#include <vector>

#include "opkit/types.hpp"

namespace opkit::quantum {

std::vector<CMat> hermitian_basis(int d);

/// Indices of the antisymmetric (imaginary) block in the basis above.
std::vector<int> antisymmetric_indices(int d);

/// Coordinates of a Hermitian matrix: v_k = Tr[F_k X].
Vec coords_from_matrix(const std::vector<CMat>& basis, const CMat& x);

CMat matrix_from_coords(const std::vector<CMat>& basis, const Vec& v);

/// Coordinate matrix of the map rho -> sum_k K rho K^dag (Schroedinger).
Mat kraus_to_coords(const std::vector<CMat>& basis,
                    const std::vector<CMat>& kraus);

/// Apply a coordinate-matrix map to an arbitrary (complex) matrix by
/// splitting into Hermitian parts and extending complex-linearly.
CMat apply_to_matrix(const std::vector<CMat>& basis, const Mat& coords,
                     const CMat& x);

/// Choi matrix sum_ij |i><j| (x) A(|i><j|) of the coordinate-matrix map.
CMat choi_matrix(const std::vector<CMat>& basis, const Mat& coords);

}  // namespace opkit::quantum

#endif
