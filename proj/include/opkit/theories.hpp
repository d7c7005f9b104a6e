// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Canonical theory builders (classical simplex, quantum, gbit), canonical
// faithful bipartite states, and deterministic random sample generators.

#ifndef OPKIT_THEORIES_HPP
#define OPKIT_THEORIES_HPP

#include "opkit/faithful.hpp"
#include "opkit/theory.hpp"

namespace opkit {

/// k-outcome classical simplex: n = k, delta distributions as extreme
/// states, all-ones unit effect.
TheoryPtr build_classical(int k);

/// Quantum theory of Hilbert dimension d: n = d*d coordinates in the
/// orthonormal Hermitian basis.
TheoryPtr build_quantum(int d);

/// Square state space (two binary fiducial measurements), n = 3.
TheoryPtr build_gbit();

/// Maximally entangled symmetric state of two copies of build_quantum(d).
BipartiteState build_bell_state(int d);

/// Correlated classical state sum_i p_i delta_i x delta_i; p_i > 0.
BipartiteState build_classical_correlated(const Vec& p);

/// Product state w x w of two copies of the given single-system state
/// (deliberately non-faithful).
BipartiteState build_product_state(const TheoryPtr& t, const Vec& w);

struct QuantumOperationSample {
  Transformation op;
  std::vector<CMat> kraus;
};

/// Trace-preserving completely positive map from `kraus_count` random
/// Kraus operators (globally normalized).
QuantumOperationSample random_quantum_channel(const TheoryPtr& t,
                                              std::uint64_t seed,
                                              int kraus_count = 2);

/// Sub-unital-dual completely positive map (probability can be < 1).
QuantumOperationSample random_quantum_operation(const TheoryPtr& t,
                                                std::uint64_t seed,
                                                int kraus_count = 2);

Weight random_state(const TheoryPtr& t, std::uint64_t seed);

/// m-outcome instrument summing to a deterministic transformation.
/// Quantum: one Kraus operator per outcome; classical: random substochastic
/// members summing to a stochastic matrix.
Experiment random_instrument(const TheoryPtr& t, int outcomes,
                             std::uint64_t seed);

}  // namespace opkit

#endif
