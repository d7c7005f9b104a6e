// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#ifndef OPKIT_TYPES_HPP
#define OPKIT_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace opkit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Numerical thresholds used throughout. Structural identities (duality,
/// associativity) are near-exact for dense algebra at this scale; cone
/// membership and searched norms are looser.
struct Tolerances {
  double structural = 1e-12;  // exact linear-algebra identities
  double identity = 1e-10;    // solver-mediated identities
  double cone = 1e-9;         // cone/physicality membership
  double searched = 1e-6;     // norms obtained by local search
  double rank = 1e-10;        // relative singular-value cutoff
};

enum class ErrorCode {
  DimensionMismatch,
  ZeroProbability,
  NotCoexistent,
  NotFaithful,
  NotPreparable,
  InvalidArgument,
  Parse,
  Numeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opkit

#endif
