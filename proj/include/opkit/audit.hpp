// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Named audit suites over a loaded theory: probabilistic-calculus
// invariants, norm laws, dimension identities, no-signaling, faithful-state
// calculus, and the derived Hilbert-space checks, plus postulate verdicts.

#ifndef OPKIT_AUDIT_HPP
#define OPKIT_AUDIT_HPP

#include <map>
#include <string>
#include <vector>

#include "opkit/io.hpp"
#include "opkit/types.hpp"

namespace opkit {

enum class CheckStatus { Pass, Finding, Skipped, Error };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  double tolerance = 0.0;
  Json evidence = Json::object();
  std::string note;
};

struct AuditOptions {
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  std::vector<std::string> checks;  // empty = all; entries match id prefixes
  int samples = 20;
};

struct AuditResult {
  std::vector<CheckRecord> records;
  // "P1".."P5" -> "consistent" | "violated" | "undecided"
  std::map<std::string, std::string> postulates;
};

AuditResult run_audit(const LoadedTheory& lt, const AuditOptions& opt);

Json audit_to_json(const AuditResult& result, const AuditOptions& opt,
                   const std::string& source);
std::string audit_to_text(const AuditResult& result);

/// Bilinear form, signature, sigma, Gram eigenvalues, adjoint spot checks.
Json gns_report_json(const LoadedTheory& lt, std::uint64_t seed);

/// Transpose of the given transformation matrix under the loaded faithful
/// state, with the defining-equation residual.
Json transpose_report_json(const LoadedTheory& lt, const Mat& a);

}  // namespace opkit

#endif
