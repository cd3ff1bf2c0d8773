#ifndef QGF_COMMANDS_HPP
#define QGF_COMMANDS_HPP

#include "qgf/azb.hpp"
#include "qgf/io.hpp"
#include "qgf/rng.hpp"

namespace qgf {

inline void append_prefixed(std::vector<CheckResult>& out, const std::string& prefix,
                            std::vector<CheckResult> checks) {
  for (auto& c : checks) {
    c.id = prefix + c.id;
    out.push_back(std::move(c));
  }
}

inline Report cmd_pentagon(const FiniteGroup& g, double tol, std::uint64_t seed) {
  Report r;
  r.command = "pentagon";
  r.tolerance = tol;
  r.seed = seed;
  Operator w = group_unitary_op(g);
  const int n = g.order;
  r.checks.push_back(residual_check(
      "unitarity", "W* W = 1",
      frobenius(w.mat.adjoint() * w.mat - Matrix::Identity(n * n, n * n)), tol * n * n));
  r.checks.push_back(residual_check("pentagon", "W12 W13 W23 = W23 W12",
                                    pentagon_residual(w), std::max(tol, tol * n)));
  return r;
}

inline Report cmd_structure(const FiniteGroup& g, double tol, std::uint64_t seed) {
  Report r;
  r.command = "structure";
  r.tolerance = tol;
  r.seed = seed;
  StructureReport s = structure_report(g, tol);
  const int n = g.order;
  r.checks.push_back(residual_check("pentagon", "pentagon equation for W of " + s.name,
                                    s.pentagon, std::max(tol, tol * n)));
  CheckResult dims = flag_check("slice-dimensions", "dim M = dim Mhat = |G|",
                                s.dim_m == n && s.dim_mhat == n);
  dims.value = complex(s.dim_m, s.dim_mhat);
  r.checks.push_back(dims);
  r.checks.push_back(flag_check("m-commutative", "M is commutative", s.m_commutative));
  r.checks.push_back(flag_check("mhat-commutativity-matches-group",
                                "Mhat commutative iff the group is abelian",
                                s.mhat_commutative == s.abelian));
  r.checks.push_back(flag_check("trim", "product span has dimension |G|^2",
                                s.trim_dim == n * n));
  CheckResult k = residual_check("scalar-k", "|k| = 1 and T = k 1",
                                 std::max(s.k_defect, std::abs(std::abs(s.k) - 1.0)),
                                 tol * n * n);
  k.value = s.k;
  r.checks.push_back(k);
  CheckResult lam = residual_check(
      "scalar-lambda", "J Jhat = lambda Jhat J with lambda = 1 for group frames",
      std::max(s.lambda_defect, std::abs(s.lambda - complex(1.0))), tol * n);
  lam.value = s.lambda;
  r.checks.push_back(lam);
  r.checks.push_back(residual_check("pairing-point-masses",
                                    "pairing of point masses is the identity table",
                                    s.pairing_table_residual, tol * n));
  return r;
}

inline Report cmd_frame_check(const FiniteGroup& g, double tol, std::uint64_t seed) {
  Report r;
  r.command = "frame-check";
  r.tolerance = tol;
  r.seed = seed;
  Frame f = group_frame(g, tol);
  append_prefixed(r.checks, "frame/", validate_frame(f, tol));
  Frame d = dual_frame(f, tol);
  append_prefixed(r.checks, "dual/", validate_frame(d, tol));
  append_prefixed(r.checks, "frame/", selfadjointness_check(f));
  append_prefixed(r.checks, "frame/", slice_conjugation_check(f));

  Rng rng(seed);
  double worst_flip = 0.0, worst_flip_dual = 0.0;
  for (int i = 0; i < 10; ++i) {
    worst_flip = std::max(worst_flip,
                          antipode_flip_residual(f, rng.random_element(f.w.M())));
    worst_flip_dual = std::max(
        worst_flip_dual, antipode_flip_residual_dual(f, rng.random_element(f.w.Mhat())));
  }
  const int n = g.order;
  r.checks.push_back(residual_check("antipode-flip",
                                    "Phi R = sigma (R ⊗ R) Phi on sampled elements",
                                    worst_flip, tol * n));
  r.checks.push_back(residual_check("antipode-flip-dual",
                                    "dual-side antipode flip on sampled elements",
                                    worst_flip_dual, tol * n));

  EquivalenceReport eq = equivalence_report(f);
  r.checks.push_back(flag_check("equivalence",
                                "trim + commutant containment iff C dense + scalar",
                                eq.consistent && eq.trim && eq.commutant_ok));
  CheckResult k = residual_check("scalar-k", "T = k 1 with |k| = 1",
                                 std::max(eq.scalar_defect,
                                          std::abs(std::abs(eq.k) - 1.0)),
                                 tol * n * n);
  k.value = eq.k;
  r.checks.push_back(k);
  ScalarResult lam = commutation_scalar(f);
  CheckResult lc = residual_check("scalar-lambda", "J Jhat = lambda Jhat J, |lambda| = 1",
                                  std::max(lam.defect, std::abs(std::abs(lam.value) - 1.0)),
                                  tol * n);
  lc.value = lam.value;
  r.checks.push_back(lc);
  return r;
}

inline Report cmd_crossed(const GroupAction& a, double tol, std::uint64_t seed) {
  Report r;
  r.command = "crossed";
  r.tolerance = tol;
  r.seed = seed;
  append_prefixed(r.checks, "action/", validate_action(a, tol));
  if (!r.all_pass()) return r;
  Frame cf = crossed_frame(a, tol);
  append_prefixed(r.checks, "frame/", validate_frame(cf, tol));
  append_prefixed(r.checks, "structure/", crossed_structure_checks(a, tol));
  append_prefixed(r.checks, "coproduct/", crossed_coproduct_checks(a, tol));
  return r;
}

inline Report cmd_pontryagin(const std::vector<int>& factors, double tol,
                             std::uint64_t seed) {
  Report r;
  r.command = "pontryagin";
  r.tolerance = tol;
  r.seed = seed;
  int n = 1;
  for (int f : factors) n *= f;
  r.checks.push_back(residual_check("fourier-conjugation",
                                    "(F ⊗ F) What (F ⊗ F)* = W for the dual group",
                                    fourier_check(factors), tol * n));
  return r;
}

inline Report cmd_azb(int n, double tol, std::uint64_t seed) {
  Report r;
  r.command = "azb";
  r.tolerance = tol;
  r.seed = seed;
  r.checks = azb_commutation_report(n, std::min(tol, 1e-12));
  return r;
}

inline Report cmd_semidirect(const SemidirectSpec& s, double tol, std::uint64_t seed) {
  Report r;
  r.command = "semidirect";
  r.tolerance = tol;
  r.seed = seed;
  SemidirectResult res = semidirect_compare(s.h, s.g, s.alpha, tol);
  CheckResult main = residual_check(
      "identification",
      res.matched ? "crossed product matches via " + res.identification
                  : "no candidate identification matches",
      res.residual, tol * s.h.order * s.g.order);
  r.checks.push_back(main);
  for (const auto& [name, resid] : res.candidates) {
    CheckResult c;
    c.id = "candidate/" + name;
    c.description = "residual for identification " + name;
    c.residual = resid;
    c.threshold = tol * s.h.order * s.g.order;
    c.pass = res.matched;  // informational; pass follows the overall match
    r.checks.push_back(c);
  }
  return r;
}

}  // namespace qgf

#endif
