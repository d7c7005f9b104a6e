// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Calculus of a symmetric faithful bipartite state: the pairing
// phi(A, B), faithfulness predicates, preparation transformations, and
// the transposed transformation A' defined by (A, I)phi = (I, A')phi.

#ifndef OPKIT_FAITHFUL_HPP
#define OPKIT_FAITHFUL_HPP

#include "opkit/composites.hpp"
#include "opkit/theory.hpp"

namespace opkit {

struct BipartiteState {
  CompositeTheory composite;
  Weight weight;
};

struct PreparationResult {
  Transformation transformation;
  double probability = 0.0;
  double residual = 0.0;
  bool physical = false;
};

struct TranspositionAxiomReport {
  double additivity = 0.0;
  double involutivity = 0.0;
  double anti_homomorphism = 0.0;
  double pairing_identity = 0.0;
  bool pass = false;
};

/// Caches the linear maps induced by one faithful state. L maps the n*n
/// coordinates of A (column-major vec) to the joint weight (A, I)phi; R
/// likewise for (I, A)phi. The transpose solve A -> A' is precomputed as a
/// single n^2 x n^2 matrix.
class FaithfulCalculus {
 public:
  explicit FaithfulCalculus(BipartiteState phi, double rank_tol = 1e-10);

  const BipartiteState& phi() const { return phi_; }
  const TheoryPtr& theory() const { return phi_.composite.factor1; }
  const Mat& l_matrix() const { return l_; }
  const Mat& r_matrix() const { return r_; }
  int l_rank() const { return l_rank_; }
  int r_rank() const { return r_rank_; }

  double pairing(const Transformation& a, const Transformation& b) const;

  bool is_symmetric(double tol = 1e-10) const;
  bool is_dynamically_faithful() const;

  PreparationResult preparation_transformation(const Weight& joint,
                                               double tol = 1e-8) const;

  Transformation transpose(const Transformation& a) const;
  /// Max residual of (A, I)phi = (I, A')phi for the returned transpose.
  double transpose_residual(const Transformation& a) const;

  TranspositionAxiomReport verify_transposition_axioms(std::uint64_t seed,
                                                       int samples,
                                                       double tol = 1e-10) const;

 private:
  BipartiteState phi_;
  Mat l_;
  Mat r_;
  int l_rank_ = 0;
  int r_rank_ = 0;
  Mat transpose_map_;  // vec(A') = transpose_map_ * vec(A)

  Vec apply_l(const Mat& a) const;
  Vec apply_r(const Mat& a) const;
};

}  // namespace opkit

#endif
