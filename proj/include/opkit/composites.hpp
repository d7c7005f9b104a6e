// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Bipartite composites of classical and quantum theory spaces. Joint
// coordinates are tensor-product coordinates: joint index J = i1*n2 + i2
// (row-major over the factor-1 index), so local embeddings are Kronecker
// products and always commute.

#ifndef OPKIT_COMPOSITES_HPP
#define OPKIT_COMPOSITES_HPP

#include "opkit/theory.hpp"

namespace opkit {

struct CompositeTheory {
  TheoryPtr factor1;
  TheoryPtr factor2;
  TheoryPtr joint;
};

struct NoSignalingReport {
  double deviation = 0.0;
  bool pass = false;
};

struct AffineDimensionReport {
  int adm_joint = 0;
  int adm1 = 0;
  int adm2 = 0;
  bool pass = false;
};

/// Composite of two quantum theories (Hilbert dimension d1*d2) or of two
/// classical simplices (product simplex). Mixed kinds are rejected.
CompositeTheory make_composite(const TheoryPtr& t1, const TheoryPtr& t2);

Transformation embed_local(const CompositeTheory& c, const Transformation& a,
                           const Transformation& b);
Transformation embed_first(const CompositeTheory& c, const Transformation& a);
Transformation embed_second(const CompositeTheory& c, const Transformation& b);

Weight product_state(const CompositeTheory& c, const Weight& w1,
                     const Weight& w2);

/// Marginal of a joint weight on the given factor (1 or 2): pair the other
/// slot with its unit effect.
Weight local_state(const CompositeTheory& c, const Weight& joint, int factor);

/// Applies the deterministic coarse-graining of an experiment on factor 1
/// and compares the factor-2 marginal before and after.
NoSignalingReport check_no_signaling(const CompositeTheory& c,
                                     const Weight& joint, const Experiment& e1,
                                     double tol = 1e-10);

/// adm(joint) = adm1*adm2 + adm1 + adm2, with adm = n - 1.
AffineDimensionReport affine_dimension_identity_check(const CompositeTheory& c);

}  // namespace opkit

#endif
