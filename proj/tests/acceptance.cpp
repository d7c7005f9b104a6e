// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// End-to-end acceptance gate. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "opkit/composites.hpp"
#include "opkit/faithful.hpp"
#include "opkit/geometry.hpp"
#include "opkit/gns.hpp"
#include "opkit/quantum.hpp"
#include "opkit/rng.hpp"
#include "opkit/theories.hpp"
#include "oracles.hpp"

using namespace opkit;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

Transformation random_physical(const TheoryPtr& t, std::uint64_t seed) {
  if (t->is_quantum()) return random_quantum_operation(t, seed).op;
  CounterRng rng(seed);
  double lambda = rng.uniform(0.0, 1.0);
  Weight w = random_state(t, rng.next_u64());
  Mat prepare = w.coords * t->unit_effect().transpose();
  return {t,
          lambda * Mat::Identity(t->n(), t->n()) + (1.0 - lambda) * prepare,
          "mix"};
}

void criterion1() {
  double transpose_dev = 0.0;
  double adjoint_dev = 0.0;
  bool signature_ok = true;
  bool gram_ok = true;
  for (int d : {2, 3}) {
    auto bell = build_bell_state(d);
    FaithfulCalculus calc(bell);
    InvolutionData inv = involution(bilinear_form(bell));
    auto q = calc.theory();
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto chan = random_quantum_channel(q, 10000 + s);
      Mat tr_oracle =
          oracle::kraus_coords(oracle::transpose_kraus(chan.kraus), d);
      transpose_dev = std::max(
          transpose_dev, (calc.transpose(chan.op).matrix - tr_oracle)
                             .lpNorm<Eigen::Infinity>());
      Mat adj_oracle =
          oracle::kraus_coords(oracle::adjoint_kraus(chan.kraus), d);
      adjoint_dev = std::max(
          adjoint_dev, (adjoint(calc, inv, chan.op).matrix - adj_oracle)
                           .lpNorm<Eigen::Infinity>());
    }
    if (inv.n_negative != d * (d - 1) / 2 || inv.n_zero != 0)
      signature_ok = false;
    auto pos = check_strict_positivity(gram_matrix(inv));
    if (!pos.pass || pos.null_rank != 0) gram_ok = false;
  }
  bool ok = transpose_dev < 1e-9 && adjoint_dev < 1e-9 && signature_ok &&
            gram_ok;
  report(1, "quantum transpose/adjoint oracles, signature, Gram positivity",
         ok,
         "transpose dev " + fmt(transpose_dev) + ", adjoint dev " +
             fmt(adjoint_dev));
}

void criterion2() {
  auto q2 = build_quantum(2);
  auto a2 = dimension_audit(q2);
  bool ok = a2.adm == 3 && a2.idim.value == 2 && a2.hd_holds;
  auto a3 = dimension_audit(build_quantum(3));
  ok = ok && a3.adm == 8 && a3.idim.value == 3 && a3.hd_holds;
  auto c22 = make_composite(q2, q2);
  auto ar = affine_dimension_identity_check(c22);
  ok = ok && ar.adm_joint == 15 && ar.adm1 == 3 && ar.adm2 == 3 && ar.pass;
  auto a22 = dimension_audit(q2, &c22);
  ok = ok && a22.hd2_holds.has_value() && *a22.hd2_holds &&
       a22.admbound_holds.has_value() && *a22.admbound_holds;
  auto bit = dimension_audit(build_classical(2));
  ok = ok && bit.adm == 1 && bit.idim.value == 2 && !bit.hd_holds;
  auto gbit = dimension_audit(build_gbit());
  ok = ok && gbit.adm == 2 && gbit.idim.value == 2 && !gbit.hd_holds;
  report(2, "dimensionality identities and their classical/gbit violations",
         ok, "two-qubit 15 = 9+3+3 and 4 = 2*2");
}

void criterion3() {
  double dev = 0.0;
  for (int d : {2, 3}) {
    auto q = build_quantum(d);
    auto c = make_composite(q, q);
    for (std::uint64_t s = 0; s < 100; ++s) {
      Weight joint = random_state(c.joint, 20000 + s);
      Experiment e = random_instrument(q, 3, 21000 + s);
      dev = std::max(dev, check_no_signaling(c, joint, e).deviation);
    }
  }
  auto cl = build_classical(3);
  auto cc = make_composite(cl, cl);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Weight joint = random_state(cc.joint, 22000 + s);
    Experiment e = random_instrument(cl, 2, 23000 + s);
    dev = std::max(dev, check_no_signaling(cc, joint, e).deviation);
  }
  report(3, "no signaling on two-qubit, two-qutrit, classical composites",
         dev < 1e-10, "max deviation " + fmt(dev));
}

void criterion4() {
  bool ok = true;
  double worst = 0.0;
  for (const auto& t : {build_quantum(2), build_classical(3)}) {
    double exact_tol = 1e-10;
    double searched_tol = t->is_quantum() ? 1e-6 : 1e-10;
    CounterRng rng(31);
    for (int s = 0; s < 100; ++s) {
      CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
      Vec a(t->n()), b(t->n());
      for (int i = 0; i < t->n(); ++i) {
        a(i) = sub.normal();
        b(i) = sub.normal();
      }
      double lambda = sub.uniform(0.1, 2.0);
      double dev = std::max(
          {effect_norm(t, a + b) - effect_norm(t, a) - effect_norm(t, b),
           std::abs(effect_norm(t, lambda * a) - lambda * effect_norm(t, a)),
           weight_norm(t, a + b) - weight_norm(t, a) - weight_norm(t, b)});
      if (dev > exact_tol) ok = false;
      worst = std::max(worst, dev);

      Transformation pa = random_physical(t, sub.next_u64());
      Transformation pb = random_physical(t, sub.next_u64());
      double na = transformation_norm(pa).value;
      double nb = transformation_norm(pb).value;
      double nab = transformation_norm(compose(pb, pa)).value;
      double ndev = std::max(nab - na * nb, na - 1.0);
      // Effect norm bounded by transformation norm, equal for scaled
      // physical transformations.
      double mu = sub.uniform(0.1, 1.0);
      auto bound = check_norm_effect_bound(scalar_multiply(mu, pa));
      ndev = std::max(
          ndev, std::abs(bound.effect_norm - bound.transformation_norm));
      if (ndev > searched_tol) ok = false;
      worst = std::max(worst, ndev);

      // Coexistence iff the summed effect stays under the unit.
      double la = sub.uniform(0.2, 0.8);
      Transformation ca = scalar_multiply(la, pa);
      Transformation cb = scalar_multiply(1.0 - la, pb);
      bool coex = are_coexistent(ca, cb);
      double sum = t->sup_pairing((ca.matrix + cb.matrix).transpose() *
                                  t->unit_effect());
      if (coex != (sum <= 1.0 + 1e-9)) ok = false;
    }
  }
  report(4, "norm axioms, effect bound, coexistence iff contraction", ok,
         "worst deviation " + fmt(worst));
}

void criterion5() {
  double dev = 0.0;
  for (int d : {2, 3}) {
    FaithfulCalculus calc(build_bell_state(d));
    auto rep = calc.verify_transposition_axioms(41, 50);
    dev = std::max({dev, rep.additivity, rep.involutivity,
                    rep.anti_homomorphism, rep.pairing_identity});
  }
  Vec p(3);
  p << 0.2, 0.5, 0.3;
  FaithfulCalculus corr(build_classical_correlated(p));
  auto rep = corr.verify_transposition_axioms(42, 50);
  dev = std::max({dev, rep.additivity, rep.involutivity,
                  rep.anti_homomorphism, rep.pairing_identity});
  report(5, "transposition axioms and the pairing identity", dev < 1e-10,
         "max deviation " + fmt(dev));
}

void criterion6() {
  double identity_dev = 0.0;
  double norm_dev = 0.0;
  for (int d : {2, 3}) {
    FaithfulCalculus calc(build_bell_state(d));
    InvolutionData inv = involution(bilinear_form(calc.phi()));
    GnsRepresentation rep = gns_representation(calc, inv);
    auto cs = check_cstar_identity(calc, inv, rep, 51, 50);
    identity_dev = std::max(identity_dev, cs.max_identity_deviation);
    norm_dev = std::max(norm_dev, cs.max_norm_deviation);
  }
  report(6, "C* identity of the derived operator norm",
         identity_dev < 1e-8 && norm_dev < 1e-9,
         "identity dev " + fmt(identity_dev) + ", adjoint-norm dev " +
             fmt(norm_dev));
}

void criterion7() {
  double dev = 0.0;
  auto run = [&](const BipartiteState& phi) {
    FaithfulCalculus calc(phi);
    InvolutionData inv = involution(bilinear_form(calc.phi()));
    GnsRepresentation rep = gns_representation(calc, inv);
    auto br = born_rule_check(calc, inv, rep, 61, 100);
    dev = std::max(
        {dev, br.max_state_deviation, br.max_transformation_deviation});
  };
  run(build_bell_state(2));
  run(build_bell_state(3));
  Vec p(2);
  p << 0.4, 0.6;
  run(build_classical_correlated(p));
  report(7, "Born rule through the GNS pairing", dev < 1e-8,
         "max deviation " + fmt(dev));
}

void criterion8() {
  auto q = build_quantum(2);
  auto prod = build_product_state(q, q->barycenter());
  auto pos_prod =
      check_strict_positivity(gram_matrix(involution(bilinear_form(prod))));
  auto pos_bell = check_strict_positivity(
      gram_matrix(involution(bilinear_form(build_bell_state(2)))));
  // Pinned constant: the Bell normalization gives min eigenvalue 1/2.
  bool ok = pos_prod.null_rank > 0 && pos_bell.min_eigenvalue > 0.1 &&
            std::abs(pos_bell.min_eigenvalue - 0.5) < 1e-10;
  report(8, "Gram null directions for product state, strict positivity for "
            "Bell state",
         ok,
         "null rank " + std::to_string(pos_prod.null_rank) + ", min eig " +
             fmt(pos_bell.min_eigenvalue));
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(OPKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void criterion9() {
  bool ok = true;
  std::string detail = "byte-identical";
  for (const char* file : {"quantum2.json", "classical2.json", "gbit.json"}) {
    std::string args = std::string("audit ") + OPKIT_DATA_DIR + "/" + file +
                       " --seed 7 --json";
    std::string first = run_cli(args);
    std::string second = run_cli(args);
    if (first.empty() || first != second) {
      ok = false;
      detail = std::string("mismatch for ") + file;
    }
  }
  std::string gns_args =
      std::string("gns ") + OPKIT_DATA_DIR + "/quantum2.json --json";
  if (run_cli(gns_args) != run_cli(gns_args)) {
    ok = false;
    detail = "mismatch for gns report";
  }
  report(9, "CLI reports are deterministic for identical file and seed", ok,
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", g_failures);
  return 1;
}
