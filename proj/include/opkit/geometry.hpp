// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Banach-space layer: norms defined by optimization over the state set and
// its dual unit ball, coexistence and predictability of effects,
// informational completeness, informational dimension, and the dimension
// identity audit.

#ifndef OPKIT_GEOMETRY_HPP
#define OPKIT_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "opkit/composites.hpp"
#include "opkit/theory.hpp"

namespace opkit {

struct Observable {
  TheoryPtr theory;
  std::vector<Vec> effects;
};

struct TransformationNormResult {
  double value = 0.0;
  bool exact = true;  // false for the searched quantum norm (lower bound)
  int starts = 0;
  int iterations = 0;
};

struct NormEffectBoundReport {
  double effect_norm = 0.0;
  double transformation_norm = 0.0;
  bool bound_holds = false;
};

struct IdimResult {
  int value = 0;
  bool exact = true;  // false when the subset search hit the cap
  Mat witness_states;
  Mat witness_effects;
};

struct DimensionAudit {
  int adm = 0;
  IdimResult idim;
  bool idim_bound_holds = false;   // idim <= adm + 1
  bool hd_holds = false;           // adm = idim^2 - 1
  std::optional<bool> admbound_holds;  // adm12 = adm1*adm2 + adm1 + adm2
  std::optional<bool> hd2_holds;       // idim12 = idim1 * idim2
};

Observable make_observable(const TheoryPtr& t, std::vector<Vec> effects,
                           double tol = 1e-10);

/// sup over states of |w(a)|.
double effect_norm(const TheoryPtr& t, const Vec& a);

/// sup over the effect-norm unit ball of |w(a)|. FiniteExtreme: linear
/// program over the symmetrized polar; QuantumSpectral: trace norm.
double weight_norm(const TheoryPtr& t, const Vec& w);

/// sup over states of weight_norm(A w). Exact vertex maximum for
/// FiniteExtreme; deterministic multi-start search over pure states for
/// QuantumSpectral (reported as a lower bound).
TransformationNormResult transformation_norm(const Transformation& a,
                                             std::uint64_t seed = 1,
                                             int starts = 20);

NormEffectBoundReport check_norm_effect_bound(const Transformation& a,
                                              std::uint64_t seed = 1);

bool are_coexistent(const Transformation& a, const Transformation& b,
                    double tol = 1e-9);

bool is_predictable(const TheoryPtr& t, const Vec& a, double tol = 1e-9);
bool is_resolved(const TheoryPtr& t, const Vec& a, double tol = 1e-9);

bool is_informationally_complete(const Observable& obs,
                                 bool* minimal = nullptr,
                                 double rank_tol = 1e-10);

/// Verifies a declared witness if present, else searches subsets of the
/// extreme states (FiniteExtreme) up to `cap` for perfectly discriminable
/// families via linear-programming feasibility.
IdimResult informational_dimension(const TheoryPtr& t, int cap = -1);

bool is_discriminating(const Observable& obs, double tol = 1e-9);

DimensionAudit dimension_audit(const TheoryPtr& t,
                               const CompositeTheory* composite = nullptr);

}  // namespace opkit

#endif
