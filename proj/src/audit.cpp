// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/audit.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "opkit/geometry.hpp"
#include "opkit/gns.hpp"
#include "opkit/rng.hpp"
#include "opkit/theories.hpp"

namespace opkit {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Finding: return "finding";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

namespace {

Mat random_matrix(int n, CounterRng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  double f = m.norm();
  if (f > 0) m /= f;
  return m;
}

Vec random_vector(int n, CounterRng& rng) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

/// Physical transformation usable for any theory kind: a convex mix of the
/// identity with a prepare-random-state map, scaled by a random factor.
Transformation random_physical_transformation(const TheoryPtr& t,
                                              std::uint64_t seed) {
  if (t->is_quantum()) return random_quantum_operation(t, seed).op;
  CounterRng rng(seed);
  Weight w = random_state(t, rng.next_u64());
  Mat prepare = w.coords * t->unit_effect().transpose();
  double lambda = rng.uniform();
  double scale = 0.2 + 0.8 * rng.uniform();
  Mat m = scale * (lambda * Mat::Identity(t->n(), t->n()) +
                   (1.0 - lambda) * prepare);
  return {t, std::move(m), "sample"};
}

struct Runner {
  const LoadedTheory& lt;
  const AuditOptions& opt;
  AuditResult result;
  Tolerances tol;

  Runner(const LoadedTheory& lt_in, const AuditOptions& opt_in)
      : lt(lt_in), opt(opt_in) {
    tol.structural *= opt.tol_scale;
    tol.identity *= opt.tol_scale;
    tol.cone *= opt.tol_scale;
    tol.searched *= opt.tol_scale;
    tol.rank *= opt.tol_scale;
  }

  bool enabled(const std::string& id) const {
    if (opt.checks.empty()) return true;
    for (const auto& c : opt.checks)
      if (id.rfind(c, 0) == 0 || c.rfind(id, 0) == 0) return true;
    return false;
  }

  void add(CheckRecord rec) { result.records.push_back(std::move(rec)); }

  void skip(const std::string& id, const std::string& why) {
    CheckRecord rec;
    rec.id = id;
    rec.status = CheckStatus::Skipped;
    rec.note = why;
    add(std::move(rec));
  }

  /// Wraps one check so numerical failures abort only that check.
  template <typename Fn>
  void guarded(const std::string& id, Fn&& fn) {
    if (!enabled(id)) return;
    try {
      fn();
    } catch (const Error& e) {
      CheckRecord rec;
      rec.id = id;
      rec.status = CheckStatus::Error;
      rec.note = e.what();
      add(std::move(rec));
    }
  }
};

void check_core_duality(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x11);
  double dev = 0.0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a{t, random_matrix(t->n(), sub), "a"};
    GeneralizedEffect b{t, random_vector(t->n(), sub)};
    Weight w{t, random_vector(t->n(), sub)};
    double lhs = probability(heisenberg_apply(a, b), w);
    double rhs = probability(b, schrodinger_apply(a, w));
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  CheckRecord rec;
  rec.id = "core.duality";
  rec.tolerance = r.tol.structural;
  rec.evidence["max_deviation"] = dev;
  rec.status = dev <= r.tol.structural ? CheckStatus::Pass
                                       : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_core_bayes(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x12);
  double dev = 0.0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Weight w = random_state(t, sub.next_u64());
    Transformation a = random_physical_transformation(t, sub.next_u64());
    Transformation b = random_physical_transformation(t, sub.next_u64());
    ConditionedState c1 = conditional_state(w, a);
    ConditionedState c2 = conditional_state(c1.state, b);
    double chained = c2.prob * c1.prob;
    double direct = probability(induced_effect(compose(b, a)), w);
    dev = std::max(dev, std::abs(chained - direct));
  }
  CheckRecord rec;
  rec.id = "core.bayes_chain";
  rec.tolerance = r.tol.identity;
  rec.evidence["max_deviation"] = dev;
  rec.status = dev <= r.tol.identity ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_norm_axioms(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x21);
  double effect_dev = 0.0;
  double weight_dev = 0.0;
  double submult_dev = 0.0;
  double contraction = 0.0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Vec a = random_vector(t->n(), sub);
    Vec b = random_vector(t->n(), sub);
    double lambda = sub.uniform(0.1, 2.0);
    // Sub-additivity and absolute homogeneity of both norms.
    double sub_add = effect_norm(t, a + b) - effect_norm(t, a) -
                     effect_norm(t, b);
    double hom = std::abs(effect_norm(t, lambda * a) -
                          lambda * effect_norm(t, a));
    effect_dev = std::max({effect_dev, sub_add, hom});
    double wsub = weight_norm(t, a + b) - weight_norm(t, a) -
                  weight_norm(t, b);
    double whom = std::abs(weight_norm(t, lambda * a) -
                           lambda * weight_norm(t, a));
    weight_dev = std::max({weight_dev, wsub, whom});
    Transformation pa = random_physical_transformation(t, sub.next_u64());
    Transformation pb = random_physical_transformation(t, sub.next_u64());
    double na = transformation_norm(pa, r.opt.seed).value;
    double nb = transformation_norm(pb, r.opt.seed).value;
    double nab = transformation_norm(compose(pb, pa), r.opt.seed).value;
    submult_dev = std::max(submult_dev, nab - na * nb);
    contraction = std::max({contraction, na - 1.0, nb - 1.0});
  }
  double norm_tol = t->is_quantum() ? r.tol.searched : r.tol.identity;
  CheckRecord rec;
  rec.id = "norms.axioms";
  rec.tolerance = norm_tol;
  rec.evidence["effect_norm_deviation"] = effect_dev;
  rec.evidence["weight_norm_deviation"] = weight_dev;
  rec.evidence["submultiplicativity_deviation"] = submult_dev;
  rec.evidence["contraction_excess"] = contraction;
  bool ok = effect_dev <= r.tol.identity && weight_dev <= norm_tol &&
            submult_dev <= norm_tol && contraction <= norm_tol;
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_norm_effect_bound_suite(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x22);
  double equality_dev = 0.0;
  double bound_excess = 0.0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a = random_physical_transformation(t, sub.next_u64());
    double lambda = sub.uniform(0.1, 1.0);
    Transformation scaled = scalar_multiply(lambda, a);
    auto rep = check_norm_effect_bound(scaled, r.opt.seed);
    bound_excess =
        std::max(bound_excess, rep.effect_norm - rep.transformation_norm);
    equality_dev = std::max(
        equality_dev, std::abs(rep.effect_norm - rep.transformation_norm));
    Transformation b = random_physical_transformation(t, sub.next_u64());
    Transformation diff{t, a.matrix - b.matrix, "a-b"};
    auto rep2 = check_norm_effect_bound(diff, r.opt.seed);
    bound_excess =
        std::max(bound_excess, rep2.effect_norm - rep2.transformation_norm);
  }
  double norm_tol = t->is_quantum() ? r.tol.searched : r.tol.identity;
  CheckRecord rec;
  rec.id = "norms.effect_bound";
  rec.tolerance = norm_tol;
  rec.evidence["bound_excess"] = bound_excess;
  rec.evidence["physical_equality_deviation"] = equality_dev;
  bool ok = bound_excess <= norm_tol && equality_dev <= norm_tol;
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_coexistence(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x23);
  int disagreements = 0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    double la = sub.uniform(0.2, 0.8);
    Transformation a = scalar_multiply(
        la, random_physical_transformation(t, sub.next_u64()));
    Transformation b = scalar_multiply(
        1.0 - la, random_physical_transformation(t, sub.next_u64()));
    bool coex = are_coexistent(a, b, r.tol.cone);
    // Contraction criterion: the summed induced effect stays under u.
    double sum_norm =
        t->sup_pairing((a.matrix + b.matrix).transpose() * t->unit_effect());
    bool contraction = sum_norm <= 1.0 + r.tol.cone;
    if (coex != contraction) ++disagreements;
  }
  CheckRecord rec;
  rec.id = "norms.coexistence";
  rec.tolerance = r.tol.cone;
  rec.evidence["disagreements"] = disagreements;
  rec.status = disagreements == 0 ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_ic_observable(Runner& r) {
  const TheoryPtr& t = r.lt.theory;
  const int n = t->n();
  Vec mean = Vec::Zero(n);
  for (int i = 0; i < n; ++i) mean += Vec::Unit(n, i);
  mean /= static_cast<double>(n);
  bool found = false;
  bool minimal = false;
  double used_eps = 0.0;
  for (double eps = 0.5; eps > 1e-6; eps /= 2.0) {
    std::vector<Vec> effects;
    bool all_physical = true;
    for (int i = 0; i < n; ++i) {
      Vec f = t->unit_effect() / static_cast<double>(n) +
              eps * (Vec::Unit(n, i) - mean);
      if (!t->effect_cone_test(f, r.tol.cone)) {
        all_physical = false;
        break;
      }
      effects.push_back(f);
    }
    if (!all_physical) continue;
    Observable obs = make_observable(t, effects);
    if (is_informationally_complete(obs, &minimal, r.tol.rank)) {
      found = true;
      used_eps = eps;
      break;
    }
  }
  CheckRecord rec;
  rec.id = "dim.ic_observable";
  rec.tolerance = r.tol.rank;
  rec.evidence["found"] = found;
  rec.evidence["minimal"] = minimal;
  rec.evidence["epsilon"] = used_eps;
  rec.status = found ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
  r.result.postulates["P2"] = found ? "consistent" : "violated";
}

void check_dimension(Runner& r, const CompositeTheory* comp) {
  DimensionAudit audit = dimension_audit(r.lt.theory, comp);
  CheckRecord rec;
  rec.id = "dim.audit";
  rec.tolerance = r.tol.rank;
  rec.evidence["adm"] = audit.adm;
  rec.evidence["idim"] = audit.idim.value;
  rec.evidence["idim_exact"] = audit.idim.exact;
  rec.evidence["idim_bound_holds"] = audit.idim_bound_holds;
  rec.evidence["hd_holds"] = audit.hd_holds;
  if (audit.admbound_holds)
    rec.evidence["admbound_holds"] = *audit.admbound_holds;
  if (audit.hd2_holds) rec.evidence["hd2_holds"] = *audit.hd2_holds;
  bool ok = audit.idim_bound_holds && audit.hd_holds &&
            audit.admbound_holds.value_or(true) &&
            audit.hd2_holds.value_or(true);
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Finding;
  if (!audit.hd_holds)
    rec.note = "state-set dimension does not match idim^2 - 1";
  r.add(std::move(rec));
  r.result.postulates["P4"] = audit.hd_holds ? "consistent" : "violated";
  if (audit.admbound_holds)
    r.result.postulates["P3"] =
        *audit.admbound_holds ? "consistent" : "violated";
  else
    r.result.postulates["P3"] = "undecided";
}

void check_composite(Runner& r, const CompositeTheory& comp) {
  const TheoryPtr& t = comp.factor1;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x31);
  double commutator = 0.0;
  for (int s = 0; s < std::min(r.opt.samples, 10); ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Transformation a = random_physical_transformation(t, sub.next_u64());
    Transformation b = random_physical_transformation(t, sub.next_u64());
    Mat ab = embed_first(comp, a).matrix * embed_second(comp, b).matrix;
    Mat ba = embed_second(comp, b).matrix * embed_first(comp, a).matrix;
    Mat joint = embed_local(comp, a, b).matrix;
    commutator = std::max(commutator,
                          (ab - ba).lpNorm<Eigen::Infinity>());
    commutator = std::max(commutator,
                          (ab - joint).lpNorm<Eigen::Infinity>());
  }
  Mat id_dev = embed_local(comp, identity_transformation(t),
                           identity_transformation(t))
                   .matrix -
               Mat::Identity(comp.joint->n(), comp.joint->n());
  CheckRecord rec;
  rec.id = "comp.embedding";
  rec.tolerance = r.tol.structural;
  rec.evidence["max_commutator"] = commutator;
  rec.evidence["identity_deviation"] = id_dev.lpNorm<Eigen::Infinity>();
  bool ok = commutator <= r.tol.structural &&
            id_dev.lpNorm<Eigen::Infinity>() <= r.tol.structural;
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_no_signaling_suite(Runner& r, const CompositeTheory& comp) {
  const TheoryPtr& t = comp.factor1;
  CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x32);
  double dev = 0.0;
  for (int s = 0; s < r.opt.samples; ++s) {
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
    Weight joint = random_state(comp.joint, sub.next_u64());
    Experiment e = random_instrument(t, 1 + static_cast<int>(sub.below(3)),
                                     sub.next_u64());
    auto rep = check_no_signaling(comp, joint, e, r.tol.identity);
    dev = std::max(dev, rep.deviation);
  }
  CheckRecord rec;
  rec.id = "comp.no_signaling";
  rec.tolerance = r.tol.identity;
  rec.evidence["max_deviation"] = dev;
  rec.status = dev <= r.tol.identity ? CheckStatus::Pass : CheckStatus::Finding;
  r.add(std::move(rec));
}

void check_faithful_suite(Runner& r, const FaithfulCalculus& calc) {
  {
    CheckRecord rec;
    rec.id = "faith.symmetric";
    rec.tolerance = r.tol.identity;
    bool sym = calc.is_symmetric(r.tol.identity);
    rec.evidence["symmetric"] = sym;
    rec.status = sym ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));
  }
  {
    CheckRecord rec;
    rec.id = "faith.dynamical";
    rec.tolerance = r.tol.rank;
    const int n = calc.theory()->n();
    rec.evidence["rank"] = calc.l_rank();
    rec.evidence["required"] = n * n;
    rec.status = calc.is_dynamically_faithful() ? CheckStatus::Pass
                                                : CheckStatus::Finding;
    if (!calc.is_dynamically_faithful())
      rec.note = "state does not separate local transformations";
    r.add(std::move(rec));
  }
  if (calc.is_dynamically_faithful()) {
    CheckRecord rec;
    rec.id = "faith.transpose_axioms";
    rec.tolerance = r.tol.identity;
    auto rep = calc.verify_transposition_axioms(
        CounterRng::splitmix64(r.opt.seed) ^ 0x41, r.opt.samples,
        r.tol.identity);
    rec.evidence["additivity"] = rep.additivity;
    rec.evidence["involutivity"] = rep.involutivity;
    rec.evidence["anti_homomorphism"] = rep.anti_homomorphism;
    rec.evidence["pairing_identity"] = rep.pairing_identity;
    rec.status = rep.pass ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));

    CheckRecord prep;
    prep.id = "faith.preparation";
    prep.tolerance = 1e-8 * r.opt.tol_scale;
    CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x42);
    double max_residual = 0.0;
    bool all_ok = true;
    const auto& comp = calc.phi().composite;
    for (int s = 0; s < std::min(r.opt.samples, 10); ++s) {
      CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
      Weight w1 = random_state(comp.factor1, sub.next_u64());
      Weight w2 = random_state(comp.factor2, sub.next_u64());
      Weight joint = product_state(comp, w1, w2);
      try {
        auto res = calc.preparation_transformation(joint, prep.tolerance);
        max_residual = std::max(max_residual, res.residual);
      } catch (const Error&) {
        all_ok = false;
      }
    }
    prep.evidence["max_residual"] = max_residual;
    prep.evidence["all_reachable"] = all_ok;
    prep.status = all_ok ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(prep));
  } else {
    r.skip("faith.transpose_axioms", "state is not dynamically faithful");
    r.skip("faith.preparation", "state is not dynamically faithful");
  }
}

void check_gns_suite(Runner& r, const FaithfulCalculus& calc) {
  const TheoryPtr& t = calc.theory();
  Mat m = bilinear_form(calc.phi());
  InvolutionData inv = involution(m, r.tol.rank);
  {
    CheckRecord rec;
    rec.id = "gns.involution";
    rec.tolerance = r.tol.identity;
    Mat sq = inv.sigma * inv.sigma - Mat::Identity(t->n(), t->n());
    rec.evidence["sigma_squared_deviation"] = sq.lpNorm<Eigen::Infinity>();
    rec.evidence["n_positive"] = inv.n_positive;
    rec.evidence["n_negative"] = inv.n_negative;
    rec.evidence["n_zero"] = inv.n_zero;
    rec.evidence["unit_preserved"] =
        (inv.sigma * t->unit_effect() - t->unit_effect())
            .lpNorm<Eigen::Infinity>() <= r.tol.identity;
    rec.status = sq.lpNorm<Eigen::Infinity>() <= r.tol.identity && !inv.degenerate
                     ? CheckStatus::Pass
                     : CheckStatus::Finding;
    if (inv.degenerate) rec.note = "bilinear form has zero eigenvalues";
    r.add(std::move(rec));
  }
  Mat gram = gram_matrix(inv);
  auto pos = check_strict_positivity(gram, r.tol.rank);
  {
    CheckRecord rec;
    rec.id = "gns.gram_positivity";
    rec.tolerance = r.tol.rank;
    rec.evidence["min_eigenvalue"] = pos.min_eigenvalue;
    rec.evidence["null_rank"] = pos.null_rank;
    rec.status = pos.pass ? CheckStatus::Pass : CheckStatus::Finding;
    if (!pos.pass) rec.note = "scalar product is degenerate";
    r.add(std::move(rec));
  }
  {
    CheckRecord rec;
    rec.id = "gns.sigma_physicality";
    rec.tolerance = r.tol.cone;
    CounterRng rng(CounterRng::splitmix64(r.opt.seed) ^ 0x51);
    std::vector<Transformation> ts;
    std::vector<Weight> ws;
    for (int s = 0; s < r.opt.samples; ++s) {
      CounterRng sub = rng.substream(static_cast<std::uint64_t>(s));
      ts.push_back(random_physical_transformation(t, sub.next_u64()));
      ws.push_back(random_state(t, sub.next_u64()));
    }
    auto rep = check_sigma_physicality(inv, t, ts, ws);
    rec.evidence["checked"] = rep.checked;
    rec.evidence["violations"] = rep.violations;
    rec.evidence["unit_preserved"] = rep.unit_preserved;
    rec.status = rep.pass ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));
  }
  bool faithful_ok = calc.is_dynamically_faithful() && pos.pass;
  if (!faithful_ok) {
    r.skip("gns.adjoint", "needs a faithful state with positive Gram");
    r.skip("gns.cstar", "needs a faithful state with positive Gram");
    r.skip("gns.born", "needs a faithful state with positive Gram");
    r.result.postulates["P5"] = pos.pass ? "undecided" : "violated";
    return;
  }
  GnsRepresentation rep = gns_representation(calc, inv);
  {
    CheckRecord rec;
    rec.id = "gns.adjoint";
    rec.tolerance = r.tol.cone;
    auto rp = check_adjoint_identity(calc, inv, rep,
                                     CounterRng::splitmix64(r.opt.seed) ^ 0x52,
                                     r.opt.samples, r.tol.cone);
    rec.evidence["gram_deviation"] = rp.max_gram_deviation;
    rec.evidence["marginal_deviation"] = rp.max_marginal_deviation;
    rec.evidence["involutive_deviation"] = rp.max_involutive_deviation;
    rec.status = rp.pass ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));
  }
  {
    CheckRecord rec;
    rec.id = "gns.cstar";
    rec.tolerance = 1e-8 * r.opt.tol_scale;
    auto rp = check_cstar_identity(calc, inv, rep,
                                   CounterRng::splitmix64(r.opt.seed) ^ 0x53,
                                   r.opt.samples, 1e-8 * r.opt.tol_scale,
                                   1e-9 * r.opt.tol_scale);
    rec.evidence["identity_deviation"] = rp.max_identity_deviation;
    rec.evidence["adjoint_norm_deviation"] = rp.max_norm_deviation;
    rec.status = rp.pass ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));
  }
  {
    CheckRecord rec;
    rec.id = "gns.born";
    rec.tolerance = 1e-8 * r.opt.tol_scale;
    auto rp = born_rule_check(calc, inv, rep,
                              CounterRng::splitmix64(r.opt.seed) ^ 0x54,
                              r.opt.samples, 1e-8 * r.opt.tol_scale);
    rec.evidence["state_deviation"] = rp.max_state_deviation;
    rec.evidence["transformation_deviation"] = rp.max_transformation_deviation;
    rec.status = rp.pass ? CheckStatus::Pass : CheckStatus::Finding;
    r.add(std::move(rec));
  }
  bool gns_all = true;
  for (const auto& recd : r.result.records)
    if (recd.id.rfind("gns.", 0) == 0 || recd.id.rfind("faith.", 0) == 0)
      if (recd.status == CheckStatus::Finding ||
          recd.status == CheckStatus::Error)
        gns_all = false;
  r.result.postulates["P5"] = gns_all ? "consistent" : "violated";
}

}  // namespace

AuditResult run_audit(const LoadedTheory& lt, const AuditOptions& opt) {
  Runner r(lt, opt);
  r.result.postulates = {{"P1", "undecided"}, {"P2", "undecided"},
                         {"P3", "undecided"}, {"P4", "undecided"},
                         {"P5", "undecided"}};

  r.guarded("core.duality", [&] { check_core_duality(r); });
  r.guarded("core.bayes_chain", [&] { check_core_bayes(r); });
  r.guarded("norms.axioms", [&] { check_norm_axioms(r); });
  r.guarded("norms.effect_bound", [&] { check_norm_effect_bound_suite(r); });
  r.guarded("norms.coexistence", [&] { check_coexistence(r); });
  r.guarded("dim.ic_observable", [&] { check_ic_observable(r); });

  std::optional<CompositeTheory> comp;
  if (lt.faithful) {
    comp = lt.faithful->composite;
  } else if (lt.kind == "classical" || lt.kind == "quantum") {
    comp = make_composite(lt.theory, lt.theory);
  }
  r.guarded("dim.audit",
            [&] { check_dimension(r, comp ? &*comp : nullptr); });
  if (comp && (lt.kind == "classical" || lt.kind == "quantum")) {
    r.guarded("comp.embedding", [&] { check_composite(r, *comp); });
    r.guarded("comp.no_signaling",
              [&] { check_no_signaling_suite(r, *comp); });
    bool comp_ok = true;
    for (const auto& rec : r.result.records)
      if (rec.id.rfind("comp.", 0) == 0 && rec.status != CheckStatus::Pass &&
          rec.status != CheckStatus::Skipped)
        comp_ok = false;
    if (r.enabled("comp.embedding") || r.enabled("comp.no_signaling"))
      r.result.postulates["P1"] = comp_ok ? "consistent" : "violated";
  } else if (r.enabled("comp.embedding")) {
    r.skip("comp.embedding", "no composite available for this theory kind");
    r.skip("comp.no_signaling", "no composite available for this theory kind");
  }

  if (lt.faithful) {
    FaithfulCalculus calc(*lt.faithful, r.tol.rank);
    r.guarded("faith", [&] { check_faithful_suite(r, calc); });
    r.guarded("gns", [&] { check_gns_suite(r, calc); });
  } else {
    r.skip("faith.symmetric", "no faithful state supplied");
    r.skip("gns.involution", "no faithful state supplied");
  }
  return r.result;
}

Json audit_to_json(const AuditResult& result, const AuditOptions& opt,
                   const std::string& source) {
  Json j;
  j["report"] = "audit";
  j["version"] = 1;
  j["source"] = source;
  j["seed"] = opt.seed;
  j["tol_scale"] = opt.tol_scale;
  j["samples"] = opt.samples;
  Json checks = Json::array();
  for (const auto& rec : result.records) {
    Json c;
    c["id"] = rec.id;
    c["status"] = to_string(rec.status);
    c["tolerance"] = rec.tolerance;
    c["evidence"] = rec.evidence;
    if (!rec.note.empty()) c["note"] = rec.note;
    checks.push_back(c);
  }
  j["checks"] = checks;
  Json post;
  for (const auto& [k, v] : result.postulates) post[k] = v;
  j["postulates"] = post;
  return j;
}

std::string audit_to_text(const AuditResult& result) {
  std::ostringstream os;
  for (const auto& rec : result.records) {
    os << rec.id;
    for (size_t i = rec.id.size(); i < 28; ++i) os << ' ';
    os << to_string(rec.status);
    if (!rec.note.empty()) os << "  (" << rec.note << ")";
    os << "\n";
  }
  os << "postulates:";
  for (const auto& [k, v] : result.postulates) os << " " << k << "=" << v;
  os << "\n";
  return os.str();
}

Json gns_report_json(const LoadedTheory& lt, std::uint64_t seed) {
  if (!lt.faithful)
    throw Error(ErrorCode::InvalidArgument,
                "gns report needs a faithful_state in the theory file");
  FaithfulCalculus calc(*lt.faithful);
  Mat m = bilinear_form(calc.phi());
  InvolutionData inv = involution(m);
  Mat gram = gram_matrix(inv);
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  Json j;
  j["report"] = "gns";
  j["version"] = 1;
  j["seed"] = seed;
  j["bilinear_form"] = mat_to_json_rows(m);
  Json sig;
  sig["positive"] = inv.n_positive;
  sig["negative"] = inv.n_negative;
  sig["zero"] = inv.n_zero;
  j["signature"] = sig;
  j["sigma"] = mat_to_json_rows(inv.sigma);
  j["gram_eigenvalues"] = vec_to_json(es.eigenvalues());
  if (calc.is_dynamically_faithful()) {
    GnsRepresentation rep = gns_representation(calc, inv);
    auto rp = check_adjoint_identity(calc, inv, rep, seed, 10);
    Json spot;
    spot["gram_deviation"] = rp.max_gram_deviation;
    spot["marginal_deviation"] = rp.max_marginal_deviation;
    spot["involutive_deviation"] = rp.max_involutive_deviation;
    spot["pass"] = rp.pass;
    j["adjoint_spot_checks"] = spot;
  } else {
    j["adjoint_spot_checks"] = "skipped (state not dynamically faithful)";
  }
  return j;
}

Json transpose_report_json(const LoadedTheory& lt, const Mat& a) {
  if (!lt.faithful)
    throw Error(ErrorCode::InvalidArgument,
                "transpose needs a faithful_state in the theory file");
  FaithfulCalculus calc(*lt.faithful);
  // The faithful state carries its own factor space; build against it.
  Transformation in{calc.theory(), a, "a"};
  Transformation at = calc.transpose(in);
  Json j;
  j["report"] = "transpose";
  j["version"] = 1;
  j["transpose"] = mat_to_json_rows(at.matrix);
  j["residual"] = calc.transpose_residual(in);
  return j;
}

}  // namespace opkit
