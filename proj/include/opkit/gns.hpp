// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Hilbert-space structure derived from a faithful bipartite state: the
// bilinear form M on effects, the involution sigma from its principal-axis
// signs, the scalar product (Gram matrix |M| = M sigma), adjoints, the
// representation pi(A) = M^-1 A M on the Gram space, operator norms, and
// the Born-rule and C*-identity checks.

#ifndef OPKIT_GNS_HPP
#define OPKIT_GNS_HPP

#include "opkit/faithful.hpp"

namespace opkit {

struct InvolutionData {
  Mat m;
  Vec eigenvalues;
  Mat eigenvectors;
  int n_positive = 0;
  int n_negative = 0;
  int n_zero = 0;
  Mat sigma;
  bool degenerate = false;  // zero eigenvalues present
};

struct GnsRepresentation {
  Mat m;
  Mat sigma;
  Mat gram;
  int null_rank = 0;
  Mat m_pinv;
  Mat gram_sqrt;
  Mat gram_sqrt_pinv;
};

struct PositivityReport {
  double min_eigenvalue = 0.0;
  int null_rank = 0;
  bool pass = false;
};

struct SigmaPhysicalityReport {
  int checked = 0;
  int violations = 0;
  bool unit_preserved = false;
  bool pass = false;
};

struct AdjointIdentityReport {
  double max_gram_deviation = 0.0;      // <pi(C^)a, b> vs <a, pi(C)b>
  double max_marginal_deviation = 0.0;  // <B|A> vs second marginal of A^ B
  double max_involutive_deviation = 0.0;
  bool pass = false;
};

struct CStarReport {
  double max_identity_deviation = 0.0;  // ||A^ A|| vs ||A||^2
  double max_norm_deviation = 0.0;      // ||A|| vs ||A^||
  bool pass = false;
};

struct BornRuleReport {
  double max_state_deviation = 0.0;
  double max_transformation_deviation = 0.0;
  bool pass = false;
};

/// Symmetrized bilinear form M_ij = phi(e_i, e_j) over the reference
/// effect basis; the (expected zero) asymmetry is reported if requested.
Mat bilinear_form(const BipartiteState& phi, double* asymmetry = nullptr);

InvolutionData involution(const Mat& m, double rel_tol = 1e-10);

/// Gram matrix of the derived scalar product: |M| = M sigma.
Mat gram_matrix(const InvolutionData& inv);

PositivityReport check_strict_positivity(const Mat& gram, double tol = 1e-10);

/// A^sigma = sigma A sigma on weight coordinates (composition-preserving
/// and involutive by construction).
Transformation extend_involution(const InvolutionData& inv,
                                 const Transformation& a);

/// Empirical cone preservation of the sigma extension on user-supplied
/// physical samples.
SigmaPhysicalityReport check_sigma_physicality(
    const InvolutionData& inv, const TheoryPtr& t,
    const std::vector<Transformation>& transformations,
    const std::vector<Weight>& states, double tol = 1e-8);

/// A^dagger = sigma extension of the transpose.
Transformation adjoint(const FaithfulCalculus& calc, const InvolutionData& inv,
                       const Transformation& a);

GnsRepresentation gns_representation(const FaithfulCalculus& calc,
                                     const InvolutionData& inv);

/// pi(A) acting on effect coordinates.
Mat represent(const GnsRepresentation& rep, const Mat& a_matrix);

/// Operator norm of pi(A) with respect to the Gram inner product.
double gns_operator_norm(const GnsRepresentation& rep, const Mat& a_matrix);

/// Gram-space vector of a state: sigma M^+ omega.
Vec gns_state_vector(const GnsRepresentation& rep, const Vec& omega);

AdjointIdentityReport check_adjoint_identity(const FaithfulCalculus& calc,
                                             const InvolutionData& inv,
                                             const GnsRepresentation& rep,
                                             std::uint64_t seed, int samples,
                                             double tol = 1e-9);

CStarReport check_cstar_identity(const FaithfulCalculus& calc,
                                 const InvolutionData& inv,
                                 const GnsRepresentation& rep,
                                 std::uint64_t seed, int samples,
                                 double identity_tol = 1e-8,
                                 double norm_tol = 1e-9);

BornRuleReport born_rule_check(const FaithfulCalculus& calc,
                               const InvolutionData& inv,
                               const GnsRepresentation& rep,
                               std::uint64_t seed, int samples,
                               double tol = 1e-8);

}  // namespace opkit

#endif
