#ifndef QGF_FRAME_HPP
#define QGF_FRAME_HPP

#include "qgf/mult_unitary.hpp"
#include "qgf/report.hpp"

namespace qgf {

// Multiplicative unitary together with two antilinear involutions J and Jhat
// implementing the conjugation W* = (Jhat ⊗ J) W (Jhat ⊗ J). The axioms are
// not enforced at construction; validate_frame reports them.
struct Frame {
  MultiplicativeUnitary w;
  Antilinear j;
  Antilinear jhat;

  Frame(MultiplicativeUnitary w_, Antilinear j_, Antilinear jhat_)
      : w(std::move(w_)), j(std::move(j_)), jhat(std::move(jhat_)) {
    if (j.dim() != w.hdim() || jhat.dim() != w.hdim())
      throw std::invalid_argument("Frame: involution dimension mismatch");
  }
};

inline double conjugation_axiom_defect(const Frame& f) {
  Antilinear big = antilinear_tensor(f.jhat, f.j);
  Operator lhs = conjugate_by(big, f.w.w());
  return distance(lhs, adjoint(f.w.w()));
}

// Largest commutator norm between the conjugated algebra and the algebra
// itself; zero exactly when conjugation lands in the commutant.
inline double commutant_defect(const Antilinear& j, const OperatorSpace& alg) {
  double worst = 0.0;
  for (int i = 0; i < alg.dim(); ++i) {
    Operator c = conjugate_by(j, alg.basis_op(i));
    for (int k = 0; k < alg.dim(); ++k)
      worst = std::max(worst, frobenius(commutator(c, alg.basis_op(k)).mat));
  }
  return worst;
}

inline std::vector<CheckResult> validate_frame(const Frame& f, double tol = 1e-10) {
  std::vector<CheckResult> out;
  const int n = f.w.hdim();
  out.push_back(residual_check("axiom1-unitary", "W is unitary",
                               f.w.unitarity_defect(), tol * n * n));
  out.push_back(residual_check("axiom1-pentagon", "W satisfies the pentagon equation",
                               f.w.pentagon_defect(), std::max(tol, tol * n)));
  TrimResult trim = trim_check(f.w);
  out.push_back(residual_check("axiom2-trim",
                               "span(S Shat*) is all of B(H)",
                               static_cast<double>(n * n - trim.product_dim), 0.5));
  out.push_back(residual_check("axiom3-j-selfadjoint", "J = J*",
                               selfadjoint_defect(f.j), tol * n));
  out.push_back(residual_check("axiom3-j-involution", "J^2 = 1",
                               involution_defect(f.j), tol * n));
  out.push_back(residual_check("axiom3-jhat-selfadjoint", "Jhat = Jhat*",
                               selfadjoint_defect(f.jhat), tol * n));
  out.push_back(residual_check("axiom3-jhat-involution", "Jhat^2 = 1",
                               involution_defect(f.jhat), tol * n));
  out.push_back(residual_check("axiom3-w-conjugation",
                               "W* = (Jhat ⊗ J) W (Jhat ⊗ J)",
                               conjugation_axiom_defect(f), tol * n));
  out.push_back(residual_check("axiom4-jmj-in-commutant", "J M J commutes with M",
                               commutant_defect(f.j, f.w.M()), tol * n));
  out.push_back(residual_check("axiom4-jmhatj-in-commutant",
                               "Jhat Mhat Jhat commutes with Mhat",
                               commutant_defect(f.jhat, f.w.Mhat()), tol * n));
  return out;
}

inline Frame dual_frame(const Frame& f, double tol = 1e-10) {
  return Frame(dual_unitary(f.w, tol), f.jhat, f.j);
}

// Antipode R(m) = Jhat m* Jhat on M; linear and involutive.
inline Operator antipode(const Frame& f, const Operator& m) {
  return conjugate_by(f.jhat, adjoint(m));
}

// Dual antipode Rhat(mhat) = J mhat* J on Mhat.
inline Operator antipode_dual(const Frame& f, const Operator& mhat) {
  return conjugate_by(f.j, adjoint(mhat));
}

// ||Phi(R(m)) - sigma (R ⊗ R) Phi(m)||.
inline double antipode_flip_residual(const Frame& f, const Operator& m) {
  Operator lhs = comultiply(f.w, antipode(f, m));
  Operator phi_m = comultiply(f.w, m);
  Antilinear big = antilinear_tensor(f.jhat, f.jhat);
  Operator rr = conjugate_by(big, adjoint(phi_m));  // (R ⊗ R) of Phi(m)
  Operator sigma = flip(phi_m.layout);
  Operator rhs{phi_m.layout, sigma.mat * rr.mat * sigma.mat};
  return distance(lhs, rhs);
}

// Same identity on the dual side: Phihat(Rhat(mhat)) vs sigma (Rhat ⊗ Rhat) Phihat(mhat).
inline double antipode_flip_residual_dual(const Frame& f, const Operator& mhat) {
  Operator lhs = comultiply_dual(f.w, antipode_dual(f, mhat));
  Operator phi_m = comultiply_dual(f.w, mhat);
  Antilinear big = antilinear_tensor(f.j, f.j);
  Operator rr = conjugate_by(big, adjoint(phi_m));
  Operator sigma = flip(phi_m.layout);
  Operator rhs{phi_m.layout, sigma.mat * rr.mat * sigma.mat};
  return distance(lhs, rhs);
}

// Jhat S Jhat = S* and J Shat J = Shat*.
inline std::vector<CheckResult> slice_conjugation_check(const Frame& f, double tol = 1e-9) {
  auto conj_space = [](const Antilinear& j, const OperatorSpace& s) {
    std::vector<Operator> ops;
    for (int i = 0; i < s.dim(); ++i) ops.push_back(conjugate_by(j, s.basis_op(i)));
    return span_of(s.layout, ops);
  };
  std::vector<CheckResult> out;
  out.push_back(flag_check("conjugated-s-equals-s-star",
                           "Jhat S Jhat equals S*",
                           space_eq(conj_space(f.jhat, f.w.S()), adjoint_space(f.w.S()), tol)));
  out.push_back(flag_check("conjugated-shat-equals-shat-star",
                           "J Shat J equals Shat*",
                           space_eq(conj_space(f.j, f.w.Shat()), adjoint_space(f.w.Shat()), tol)));
  out.push_back(flag_check("conjugated-m-equals-m", "Jhat M Jhat equals M",
                           space_eq(conj_space(f.jhat, f.w.M()), f.w.M(), tol)));
  return out;
}

// For a frame the slice space S is already self-adjoint and equals M.
inline std::vector<CheckResult> selfadjointness_check(const Frame& f, double tol = 1e-8) {
  std::vector<CheckResult> out;
  out.push_back(flag_check("s-star-closed", "S* is contained in span S",
                           space_contains(f.w.S(), adjoint_space(f.w.S()), tol)));
  out.push_back(flag_check("s-equals-m", "span S equals M",
                           space_eq(f.w.S(), f.w.M(), tol)));
  out.push_back(flag_check("shat-star-closed", "Shat* is contained in span Shat",
                           space_contains(f.w.Shat(), adjoint_space(f.w.Shat()), tol)));
  out.push_back(flag_check("shat-equals-mhat", "span Shat equals Mhat",
                           space_eq(f.w.Shat(), f.w.Mhat(), tol)));
  return out;
}

// Wbar = (J ⊗ J) Sigma W* Sigma (J ⊗ J).
inline Operator wbar(const Frame& f) {
  Antilinear big = antilinear_tensor(f.j, f.j);
  return conjugate_by(big, dual_unitary_op(f.w.w()));
}

// Wtilde = (Jhat ⊗ Jhat) Sigma W* Sigma (Jhat ⊗ Jhat).
inline Operator wtilde(const Frame& f) {
  Antilinear big = antilinear_tensor(f.jhat, f.jhat);
  return conjugate_by(big, dual_unitary_op(f.w.w()));
}

struct ScalarResult {
  complex value;
  double defect;  // distance of the tested operator from value * identity
};

// T = (1 ⊗ Jhat J) Sigma Wbar W Wtilde; a scalar multiple of the identity
// exactly when the frame is irreducible in the trim + commutant sense.
inline ScalarResult irreducibility_scalar(const Frame& f) {
  const int n = f.w.hdim();
  Operator jj = compose(f.jhat, f.j);
  Matrix factor = kron(Matrix::Identity(n, n), jj.mat);
  Operator sigma = flip(f.w.w().layout);
  Matrix t = factor * sigma.mat * wbar(f).mat * f.w.w().mat * wtilde(f).mat;
  complex k = t.trace() / static_cast<double>(n * n);
  double defect = frobenius(t - k * Matrix::Identity(n * n, n * n));
  return {k, defect};
}

// J Jhat = lambda Jhat J with |lambda| = 1; returns the best scalar and the
// residual of the relation.
inline ScalarResult commutation_scalar(const Frame& f) {
  Matrix l1 = compose(f.j, f.jhat).mat;
  Matrix l2 = compose(f.jhat, f.j).mat;
  complex lam = (l2.adjoint() * l1).trace() / (l2.adjoint() * l2).trace();
  return {lam, frobenius(l1 - lam * l2)};
}

// Replaces J by gamma J for |gamma| = 1. Choosing gamma^-2 = lambda makes the
// rescaled involutions commute; the antipode m -> Jhat m* Jhat is unchanged.
inline Frame rescale_J(const Frame& f, complex gamma) {
  if (std::abs(std::abs(gamma) - 1.0) > 1e-12)
    throw std::invalid_argument("rescale_J: |gamma| must be 1");
  return Frame(f.w, scale(f.j, gamma), f.jhat);
}

struct EquivalenceReport {
  bool trim = false;           // (1)
  bool commutant_ok = false;   // (2)
  bool c_dense = false;        // (1')
  bool scalar_ok = false;      // (2')
  complex k = 0.0;
  double scalar_defect = 0.0;
  bool consistent = false;     // (1) and (2) iff (1') and (2')
};

// Evaluates both sides of the equivalence between {trim, commutant
// containment} and {C dense, scalar condition}. The shared hypotheses
// (involutions and the conjugation identity for W) must hold.
inline EquivalenceReport equivalence_report(const Frame& f, double tol = 1e-9) {
  const int n = f.w.hdim();
  if (!is_selfadjoint(f.j, tol) || !is_involution(f.j, tol) ||
      !is_selfadjoint(f.jhat, tol) || !is_involution(f.jhat, tol) ||
      conjugation_axiom_defect(f) > tol * n)
    throw std::invalid_argument("equivalence_report: shared hypotheses violated");
  EquivalenceReport out;
  out.trim = trim_check(f.w).trim;
  out.commutant_ok = commutant_defect(f.j, f.w.M()) < tol * n &&
                     commutant_defect(f.jhat, f.w.Mhat()) < tol * n;
  out.c_dense = is_dense(C_space(f.w));
  ScalarResult sc = irreducibility_scalar(f);
  out.k = sc.value;
  out.scalar_defect = sc.defect;
  out.scalar_ok = sc.defect < tol * n * n;
  out.consistent = (out.trim && out.commutant_ok) == (out.c_dense && out.scalar_ok);
  return out;
}

}  // namespace qgf

#endif
