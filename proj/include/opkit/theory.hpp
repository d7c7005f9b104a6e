// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Core value types of an operational probabilistic theory: a finite
// dimensional effect space with a distinguished unit effect and a convex
// state set, together with weights, effects, transformations and
// experiments, and the probabilistic calculus on them (pairing,
// conditioning, composition, coexistent addition, convex mixing).

#ifndef OPKIT_THEORY_HPP
#define OPKIT_THEORY_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opkit/types.hpp"

namespace opkit {

/// State set given by the convex hull of finitely many extreme points
/// (columns, in effect-space coordinates).
struct FiniteExtremeModel {
  Mat extreme_states;
};

/// Quantum state set of Hilbert dimension d; coordinates are taken in a
/// fixed orthonormal Hermitian basis (n = d*d matrices).
struct QuantumSpectralModel {
  int d = 0;
  std::vector<CMat> basis;
};

/// Optional known informational dimension with a discrimination witness:
/// witness states (columns) and effects (columns) with <a_n, w_m> = d_nm
/// and effects summing to the unit effect.
struct DeclaredIdim {
  int value = 0;
  Mat witness_states;
  Mat witness_effects;
};

class TheorySpace {
 public:
  TheorySpace(std::string name, Vec unit_effect,
              std::variant<FiniteExtremeModel, QuantumSpectralModel> model,
              std::optional<DeclaredIdim> declared_idim = std::nullopt);

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(unit_.size()); }
  const Vec& unit_effect() const { return unit_; }
  const std::optional<DeclaredIdim>& declared_idim() const {
    return declared_idim_;
  }

  bool is_quantum() const {
    return std::holds_alternative<QuantumSpectralModel>(model_);
  }
  const QuantumSpectralModel& quantum() const {
    return std::get<QuantumSpectralModel>(model_);
  }
  const FiniteExtremeModel& finite_extreme() const {
    return std::get<FiniteExtremeModel>(model_);
  }

  /// max / min of <a, w> over the state set.
  double sup_pairing(const Vec& effect) const;
  double inf_pairing(const Vec& effect) const;

  /// Membership of a covector in the physical effect cone: 0 <= w(a) <= 1
  /// on every state.
  bool effect_cone_test(const Vec& effect, double tol) const;

  /// Membership of a weight vector in the state set (normalized + hull /
  /// positivity test).
  bool is_state_vector(const Vec& w, double tol) const;

  /// Hermitian matrix image of a coordinate vector (quantum model only).
  CMat to_matrix(const Vec& v) const;
  Vec from_matrix(const CMat& m) const;

  /// A fixed interior state (vertex mean; maximally mixed for quantum).
  Vec barycenter() const;

  /// A fixed informationally complete probe set of states (columns):
  /// the extreme states for FiniteExtreme, a standard tomography set for
  /// QuantumSpectral. Spans the weight space.
  const Mat& probe_states() const { return probes_; }

  /// Affine dimension of the state set.
  int adm() const { return n() - 1; }

 private:
  std::string name_;
  Vec unit_;
  std::variant<FiniteExtremeModel, QuantumSpectralModel> model_;
  std::optional<DeclaredIdim> declared_idim_;
  Mat probes_;

  void validate() const;
};

using TheoryPtr = std::shared_ptr<const TheorySpace>;

struct Weight {
  TheoryPtr theory;
  Vec coords;
};

struct GeneralizedEffect {
  TheoryPtr theory;
  Vec coords;
};

/// Linear map on weight coordinates (Schroedinger action); the dual
/// (Heisenberg) action on effects is by the transposed matrix.
struct Transformation {
  TheoryPtr theory;
  Mat matrix;
  std::string label;
};

struct Experiment {
  TheoryPtr theory;
  std::vector<Transformation> transformations;
  std::vector<std::string> labels;
};

struct ConditionedState {
  Weight state;
  double prob = 0.0;
};

struct ExperimentReport {
  bool complete = false;
  double completeness_deviation = 0.0;
  std::vector<bool> member_physical;
  bool pass = false;
};

void require_same_theory(const TheoryPtr& a, const TheoryPtr& b);

double probability(const GeneralizedEffect& effect, const Weight& state);
Weight schrodinger_apply(const Transformation& a, const Weight& w);
GeneralizedEffect heisenberg_apply(const Transformation& a,
                                   const GeneralizedEffect& b);
/// Effect induced by a transformation: the unit effect pulled back along A.
GeneralizedEffect induced_effect(const Transformation& a);
/// b after a (matrix product b.matrix * a.matrix).
Transformation compose(const Transformation& b, const Transformation& a);
Transformation identity_transformation(const TheoryPtr& t);

ConditionedState conditional_state(const Weight& w, const Transformation& a,
                                   double tol = 1e-12);

bool are_informationally_equivalent(const Transformation& a,
                                    const Transformation& b,
                                    double tol = 1e-10);
bool are_dynamically_equivalent(const Transformation& a,
                                const Transformation& b, double tol = 1e-10);

/// max over states of w(A) + w(B); coexistence is this being <= 1.
double coexistence_slack(const Transformation& a, const Transformation& b);
Transformation add_coexistent(const Transformation& a, const Transformation& b,
                              double tol = 1e-9);
Transformation scalar_multiply(double lambda, const Transformation& a);
Transformation convex_mix(double lambda, const Transformation& a1,
                          const Transformation& a2);
Weight convex_mix(double lambda, const Weight& w1, const Weight& w2);

bool is_physical_state(const Weight& w, double tol = 1e-9);
bool is_physical_effect(const GeneralizedEffect& a, double tol = 1e-9);
bool is_physical_transformation(const Transformation& a, double tol = 1e-9);

ExperimentReport validate_experiment(const Experiment& e, double tol = 1e-9);

}  // namespace opkit

#endif
