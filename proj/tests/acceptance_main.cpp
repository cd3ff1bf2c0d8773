// Acceptance gate: one line per criterion, exit 0 only when all pass.
// Tolerances are pinned here, independently of library defaults.

#include <cstdio>
#include <string>
#include <vector>

#include "qgf/commands.hpp"

using namespace qgf;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, bool pass) {
  std::printf("%s criterion-%02d %s\n", pass ? "PASS" : "FAIL", num, name.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<FiniteGroup> catalog() {
  return {cyclic(1),     cyclic(2),    cyclic(3),
          cyclic(4),     cyclic(6),    group_product(cyclic(2), cyclic(3)),
          symmetric3(),  dihedral(4),  quaternion8()};
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Frame padded_frame(const FiniteGroup& g, int kdim) {
  Operator w = group_unitary_op(g);
  const int n = g.order;
  TensorLayout l4{n, kdim, n, kdim};
  Operator w13 = embed_legs(w, l4, {0, 2});
  MultiplicativeUnitary mu(with_layout(w13, TensorLayout{n * kdim, n * kdim}));
  TensorLayout hk{n * kdim};
  Antilinear j{hk, Matrix::Identity(n * kdim, n * kdim)};
  Antilinear jhat{hk, kron(inversion_conjugation(g).mat, Matrix::Identity(kdim, kdim))};
  return Frame(mu, j, jhat);
}

std::string data(const std::string& rel) {
  return std::string(QGF_DATA_DIR) + "/" + rel;
}

}  // namespace

int main() {
  auto groups = catalog();

  // 1. Pentagon holds for the catalog and fails for generic unitaries.
  {
    bool ok = true;
    for (const auto& g : groups)
      ok = ok && pentagon_residual(group_unitary_op(g)) < 1e-10;
    Rng rng(1001);
    int broken = 0;
    for (int t = 0; t < 100; ++t) {
      Operator w{TensorLayout{2, 2}, rng.haar_unitary(4).mat};
      if (pentagon_residual(w) > 1e-3) ++broken;
    }
    criterion(1, "pentagon equation: catalog < 1e-10, >= 99/100 random failures",
              ok && broken >= 99);
  }

  // 2. Frame axioms hold for catalog frames and their duals; tampered
  //    fixtures fail loudly.
  {
    bool ok = true;
    for (const auto& g : groups) {
      Frame f = group_frame(g);
      ok = ok && all_pass(validate_frame(f, 1e-10));
      ok = ok && all_pass(validate_frame(dual_frame(f), 1e-10));
    }
    Frame bad1(group_unitary(cyclic(3)), conjugation(TensorLayout{3}),
               conjugation(TensorLayout{3}));
    FiniteGroup s3 = symmetric3();
    Frame bad2(group_unitary(s3), inversion_conjugation(s3),
               conjugation(TensorLayout{6}));
    bool tampered = !all_pass(validate_frame(bad1)) &&
                    conjugation_axiom_defect(bad1) > 0.1 &&
                    !all_pass(validate_frame(bad2)) &&
                    conjugation_axiom_defect(bad2) > 0.1;
    criterion(2, "frame axioms: catalog + duals pass, tampered fixtures fail > 0.1",
              ok && tampered);
  }

  // 3. Slice space dimensions, commutativity pattern and trim.
  {
    bool ok = true;
    for (const auto& g : groups) {
      MultiplicativeUnitary mu = group_unitary(g);
      const int n = g.order;
      ok = ok && mu.S().dim() == n && mu.Shat().dim() == n;
      ok = ok && is_commutative(mu.M());
      bool nonabelian = g.name == "S3" || g.name == "D4" || g.name == "Q8";
      ok = ok && (is_commutative(mu.Mhat()) == !nonabelian);
      ok = ok && trim_check(mu).product_dim == n * n;
    }
    criterion(3, "slice spaces: dim |G|, M abelian, Mhat matches the group, trim",
              ok);
  }

  // 4. Duality pairing identities on random functionals.
  {
    bool ok = true;
    for (const auto& g : groups) {
      MultiplicativeUnitary mu = group_unitary(g);
      DualityTester tester(mu);
      Rng rng(4000 + g.order);
      for (int t = 0; t < 50 && ok; ++t) {
        auto r = tester.residuals(rng.random_functional(mu.hilbert()),
                                  rng.random_functional(mu.hilbert()),
                                  rng.random_functional(mu.hilbert()));
        ok = r.coproduct_vs_product < 1e-10 &&
             r.flipped_coproduct_vs_product < 1e-10;
      }
    }
    criterion(4, "duality: 50 random functional triples per group < 1e-10", ok);
  }

  // 5. Slice spaces are selfadjoint and already algebras.
  {
    bool ok = true;
    for (const auto& g : groups) {
      MultiplicativeUnitary mu = group_unitary(g);
      ok = ok && space_contains(mu.S(), adjoint_space(mu.S()), 1e-8);
      ok = ok && space_eq(mu.S(), mu.M(), 1e-8);
      ok = ok && space_contains(mu.Shat(), adjoint_space(mu.Shat()), 1e-8);
      ok = ok && space_eq(mu.Shat(), mu.Mhat(), 1e-8);
    }
    criterion(5, "selfadjointness: S* in span S and span S = M (both sides)", ok);
  }

  // 6. Antipode flips the coproduct.
  {
    bool ok = true;
    for (const auto& g : groups) {
      Frame f = group_frame(g);
      Rng rng(6000 + g.order);
      for (int t = 0; t < 20 && ok; ++t) {
        ok = antipode_flip_residual(f, rng.random_element(f.w.M())) < 1e-10 &&
             antipode_flip_residual_dual(f, rng.random_element(f.w.Mhat())) < 1e-10;
      }
    }
    criterion(6, "antipode flip identity on 20 sampled elements per group", ok);
  }

  // 7. Equivalence of the two irreducibility formulations, and the scalar k.
  {
    bool ok = true;
    for (const auto& g : groups) {
      Frame f = group_frame(g);
      EquivalenceReport eq = equivalence_report(f);
      ok = ok && eq.trim && eq.commutant_ok && eq.c_dense && eq.scalar_ok &&
           eq.consistent;
      ok = ok && pentagon_residual(wbar(f)) < 1e-10 &&
           pentagon_residual(wtilde(f)) < 1e-10;
      ScalarResult k = irreducibility_scalar(f);
      ok = ok && std::abs(std::abs(k.value) - 1.0) < 1e-10;
      ScalarResult kd = irreducibility_scalar(dual_frame(f));
      ok = ok && std::abs(kd.value - std::conj(k.value)) < 1e-10;
    }
    // Padded fixture: trim fails, C stays dense, the scalar condition fails,
    // and the equivalence stays consistent.
    EquivalenceReport eq = equivalence_report(padded_frame(cyclic(2), 2));
    ok = ok && !eq.trim && eq.commutant_ok && eq.c_dense && !eq.scalar_ok &&
         eq.consistent;
    criterion(7, "irreducibility equivalence, |k| = 1, dual k conjugate, padded fixture",
              ok);
  }

  // 8. Commutation scalar lambda and rescaling.
  {
    bool ok = true;
    for (const auto& g : groups) {
      ScalarResult lam = commutation_scalar(group_frame(g));
      ok = ok && lam.defect < 1e-10 && std::abs(lam.value - complex(1.0)) < 1e-10;
    }
    Frame f = group_frame(cyclic(4));
    complex gamma = std::polar(1.0, 0.3);
    Frame f2 = rescale_J(f, gamma);
    ScalarResult lam2 = commutation_scalar(f2);
    ok = ok && std::abs(lam2.value - gamma * gamma) < 1e-10;
    complex fix = complex(1.0) / std::sqrt(lam2.value);
    ok = ok && std::abs(commutation_scalar(rescale_J(f2, fix)).value - complex(1.0)) <
                   1e-10;
    criterion(8, "J Jhat = lambda Jhat J: lambda = 1, gamma^2 law, normalization",
              ok);
  }

  // 9. Doubled cyclic conjugation pair for n = 1..6 at 1e-12, with bitwise
  //    representative independence.
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      auto checks = azb_commutation_report(n, 1e-12);
      ok = ok && all_pass(checks);
      for (const auto& c : checks)
        if (c.id == "representative-shift") ok = ok && *c.residual == 0.0;
    }
    criterion(9, "doubled cyclic conjugations n = 1..6 at 1e-12, exact shift", ok);
  }

  // 10. Crossed products for the bundled actions.
  {
    bool ok = true;
    for (const char* file : {"actions/trivial_z2_on_z2_frame.json",
                             "actions/z2_inversion_on_z3.json",
                             "actions/z2_inversion_on_z4.json"}) {
      GroupAction a = action_from_file(data(file));
      ok = ok && all_pass(validate_action(a, 1e-10));
      ok = ok && all_pass(validate_frame(crossed_frame(a), 1e-10));
      ok = ok && all_pass(crossed_structure_checks(a, 1e-10));
      ok = ok && all_pass(crossed_coproduct_checks(a, 1e-10));
    }
    criterion(10, "crossed products: action, frame, structure and coproduct checks",
              ok);
  }

  // 11. Crossed product of a group action matches the semidirect product.
  {
    FiniteGroup z2 = cyclic(2);
    SemidirectResult r1 =
        semidirect_compare(cyclic(3), z2, inversion_action(cyclic(3), z2));
    SemidirectResult r2 =
        semidirect_compare(cyclic(4), z2, inversion_action(cyclic(4), z2));
    Automorphism id3 = {0, 1, 2};
    SemidirectResult r3 = semidirect_compare(cyclic(3), z2, {id3, id3});
    bool ok = r1.matched && r1.residual < 1e-10 &&
              r1.identification == "alpha/h-major" && r2.matched &&
              r2.identification == "alpha/h-major" && r3.matched &&
              r3.identification == "alpha/h-major";
    criterion(11, "semidirect comparison: Z3x|Z2, Z4x|Z2 and the trivial action",
              ok);
  }

  // 12. Fourier transform intertwines the dual unitary with the dual group.
  {
    bool ok = fourier_check({2}) < 1e-10 && fourier_check({3}) < 1e-10 &&
              fourier_check({4}) < 1e-10 && fourier_check({2, 3}) < 1e-10;
    criterion(12, "pontryagin duality via the Fourier matrix", ok);
  }

  // 13. Double commutant agrees with the generated algebra.
  {
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
      Rng rng(13000 + n);
      for (int t = 0; t < 25 && ok; ++t) {
        std::vector<Operator> gens;
        int count = 1 + static_cast<int>(rng.uniform() * 2);
        for (int i = 0; i < count; ++i) {
          Operator g{TensorLayout{n}, rng.random_matrix(n)};
          gens.push_back(g);
          gens.push_back(adjoint(g));
        }
        OperatorSpace alg = generated_algebra(TensorLayout{n}, gens);
        OperatorSpace cc =
            commutant(TensorLayout{n}, commutant(TensorLayout{n}, gens).basis_ops());
        ok = space_eq(alg, cc, 1e-7);
      }
    }
    // Known cases: the Paulis generate everything, diagonals stay diagonal.
    Matrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    OperatorSpace full = generated_algebra(
        TensorLayout{2}, {Operator{TensorLayout{2}, x}, Operator{TensorLayout{2}, z}});
    ok = ok && is_dense(full);
    Matrix e11 = Matrix::Zero(3, 3);
    e11(1, 1) = 1.0;
    OperatorSpace diag_comm =
        commutant(TensorLayout{3}, {Operator{TensorLayout{3}, e11}});
    ok = ok && diag_comm.dim() == 5 && is_commutative(generated_algebra(
                                           TensorLayout{3},
                                           {Operator{TensorLayout{3}, e11}}));
    criterion(13, "double commutant = generated algebra on 75 random star sets",
              ok);
  }

  // 14. Reports are byte deterministic.
  {
    Report a1 = cmd_frame_check(symmetric3(), 1e-10, 7);
    Report a2 = cmd_frame_check(symmetric3(), 1e-10, 7);
    Report b1 = cmd_structure(quaternion8(), 1e-10, 7);
    Report b2 = cmd_structure(quaternion8(), 1e-10, 7);
    bool ok = report_to_json(a1).dump(2) == report_to_json(a2).dump(2) &&
              report_to_text(a1) == report_to_text(a2) &&
              report_to_json(b1).dump(2) == report_to_json(b2).dump(2) &&
              a1.all_pass() && b1.all_pass();
    criterion(14, "report serialization is byte deterministic", ok);
  }

  std::printf("%d/14 criteria passed\n", 14 - failures);
  return failures == 0 ? 0 : 1;
}
