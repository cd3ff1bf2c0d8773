#ifndef QGF_CROSSED_HPP
#define QGF_CROSSED_HPP

#include <limits>

#include "qgf/group.hpp"

namespace qgf {

// Finite group acting on a frame by unitaries u_p that commute with W
// (diagonally), J and Jhat, with p -> u_p a homomorphism.
struct GroupAction {
  FiniteGroup group;
  Frame target;
  std::vector<Operator> u;  // one unitary on the frame's space per element

  GroupAction(FiniteGroup g, Frame t, std::vector<Operator> u_)
      : group(std::move(g)), target(std::move(t)), u(std::move(u_)) {
    if (static_cast<int>(u.size()) != group.order)
      throw std::invalid_argument("GroupAction: one unitary per group element required");
    for (const auto& up : u)
      if (up.dim() != target.w.hdim())
        throw std::invalid_argument("GroupAction: unitary dimension mismatch");
  }
};

inline std::vector<CheckResult> validate_action(const GroupAction& a, double tol = 1e-10) {
  std::vector<CheckResult> out;
  const int n = a.target.w.hdim();
  double worst_unitary = 0.0, worst_homo = 0.0, worst_w = 0.0, worst_j = 0.0,
         worst_jhat = 0.0;
  worst_homo = distance(a.u[0], identity_op(a.u[0].layout));
  for (int p = 0; p < a.group.order; ++p) {
    const Operator& up = a.u[p];
    worst_unitary = std::max(
        worst_unitary, frobenius(up.mat.adjoint() * up.mat - Matrix::Identity(n, n)));
    for (int q = 0; q < a.group.order; ++q)
      worst_homo = std::max(worst_homo, distance(a.u[p] * a.u[q], a.u[a.group.mul(p, q)]));
    Operator upup = tensor_product(up, up);
    worst_w = std::max(worst_w, frobenius(a.target.w.w().mat * upup.mat -
                                          upup.mat * a.target.w.w().mat));
    // J u_p = u_p J reads A conj(u_p) = u_p A on matrices.
    worst_j = std::max(worst_j, frobenius(a.target.j.mat * up.mat.conjugate() -
                                          up.mat * a.target.j.mat));
    worst_jhat = std::max(worst_jhat, frobenius(a.target.jhat.mat * up.mat.conjugate() -
                                                up.mat * a.target.jhat.mat));
  }
  out.push_back(residual_check("action-unitary", "each u_p is unitary", worst_unitary,
                               tol * n));
  out.push_back(residual_check("action-homomorphism", "p -> u_p is a homomorphism",
                               worst_homo, tol * n));
  out.push_back(residual_check("action-w-covariance", "W (u_p ⊗ u_p) = (u_p ⊗ u_p) W",
                               worst_w, tol * n));
  out.push_back(residual_check("action-j-covariance", "J u_p = u_p J", worst_j, tol * n));
  out.push_back(residual_check("action-jhat-covariance", "Jhat u_p = u_p Jhat",
                               worst_jhat, tol * n));
  return out;
}

// U on H ⊗ l2(G): U (v ⊗ e_p) = (u_{p^-1} v) ⊗ e_p.
inline Operator action_unitary(const GroupAction& a) {
  const int n = a.target.w.hdim(), ng = a.group.order;
  TensorLayout l{n, ng};
  Matrix m = Matrix::Zero(n * ng, n * ng);
  for (int p = 0; p < ng; ++p) {
    const Matrix& up = a.u[a.group.inverse(p)].mat;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(i * ng + p, k * ng + p) = up(i, k);
  }
  return {l, std::move(m)};
}

// W1 = W0_{24} U_{14} W_{13} on legs (H, l2(G), H, l2(G)), where W0 is the
// dual group unitary of G and W the target frame's unitary.
inline Operator crossed_unitary_op(const GroupAction& a) {
  const int n = a.target.w.hdim(), ng = a.group.order;
  TensorLayout l4{n, ng, n, ng};
  Operator w0 = dual_unitary_op(group_unitary_op(a.group));
  Operator w0_24 = embed_legs(w0, l4, {1, 3});
  Operator u14 = embed_legs(action_unitary(a), l4, {0, 3});
  Operator w13 = embed_legs(a.target.w.w(), l4, {0, 2});
  Operator w1 = w0_24 * u14 * w13;
  const int big = n * ng;
  return with_layout(w1, TensorLayout{big, big});
}

// The crossed-product frame on H ⊗ l2(G):
//   W1 as above, J1 = (J ⊗ J0) U, Jhat1 = Jhat ⊗ Jhat0,
// with (W0, J0, Jhat0) the dual group frame of G.
inline Frame crossed_frame(const GroupAction& a, double tol = 1e-10) {
  const int n = a.target.w.hdim(), ng = a.group.order;
  TensorLayout l2{n, ng};
  Operator u = action_unitary(a);
  Antilinear j0 = inversion_conjugation(a.group);
  Antilinear jhat0 = conjugation(TensorLayout{a.group.order});
  Antilinear j1{TensorLayout{n * ng},
                kron(a.target.j.mat, j0.mat) * u.mat.conjugate()};
  Antilinear jhat1{TensorLayout{n * ng}, kron(a.target.jhat.mat, jhat0.mat)};
  return Frame(MultiplicativeUnitary(crossed_unitary_op(a), tol), j1, jhat1);
}

// The commutation relations between U, W, W0 and the involutions that drive
// the crossed-product construction.
inline std::vector<CheckResult> crossed_structure_checks(const GroupAction& a,
                                                         double tol = 1e-10) {
  std::vector<CheckResult> out;
  const int n = a.target.w.hdim(), ng = a.group.order;
  const double thr = tol * n * ng;
  Operator u = action_unitary(a);
  Operator w0 = dual_unitary_op(group_unitary_op(a.group));
  const Operator& w = a.target.w.w();

  TensorLayout hgg{n, ng, ng};
  Operator w0_23 = embed_legs(w0, hgg, {1, 2});
  Operator u12 = embed_legs(u, hgg, {0, 1});
  Operator u13 = embed_legs(u, hgg, {0, 2});
  out.push_back(residual_check("comm-u13-w023", "U_13 commutes with W0_23",
                               distance(w0_23 * u13, u13 * w0_23), thr));
  out.push_back(residual_check("comm-u12-w023", "W0_23 U_12 = U_12 U_13 W0_23",
                               distance(w0_23 * u12, u12 * u13 * w0_23), thr));

  TensorLayout hhg{n, n, ng};
  Operator v13 = embed_legs(u, hhg, {0, 2});
  Operator v23 = embed_legs(u, hhg, {1, 2});
  Operator w12 = embed_legs(w, hhg, {0, 1});
  out.push_back(residual_check("comm-u13-u23", "U_13 commutes with U_23",
                               distance(v13 * v23, v23 * v13), thr));
  out.push_back(residual_check("comm-u-w12", "U_13 U_23 commutes with W_12",
                               distance(v13 * v23 * w12, w12 * v13 * v23), thr));

  Antilinear j0 = inversion_conjugation(a.group);
  Antilinear jj0 = antilinear_tensor(a.target.j, j0);
  Antilinear jhatj0 = antilinear_tensor(a.target.jhat, j0);
  out.push_back(residual_check("comm-j-u", "(J ⊗ J0) U = U* (J ⊗ J0)",
                               frobenius(jj0.mat * u.mat.conjugate() -
                                         u.mat.adjoint() * jj0.mat),
                               thr));
  out.push_back(residual_check("comm-jhat-u", "(Jhat ⊗ J0) U = U* (Jhat ⊗ J0)",
                               frobenius(jhatj0.mat * u.mat.conjugate() -
                                         u.mat.adjoint() * jhatj0.mat),
                               thr));

  double worst_gen = 0.0;
  for (int p = 0; p < ng; ++p) {
    Operator lam = regular_rep(a.group, p);
    Operator lift = embed_legs(lam, TensorLayout{n, ng}, {1});
    Matrix lhs = u.mat.adjoint() * lift.mat * u.mat;
    Matrix rhs = kron(a.u[p].mat, lam.mat);
    worst_gen = std::max(worst_gen, frobenius(lhs - rhs));
  }
  out.push_back(residual_check("generator-transport", "U* (1 ⊗ lambda_p) U = u_p ⊗ lambda_p",
                               worst_gen, thr));

  // M1 is generated by {m ⊗ 1} and {u_p ⊗ lambda_p}; Mhat1 = Mhat ⊗ L(G)diag.
  Frame cf = crossed_frame(a, tol);
  TensorLayout big{n * ng};
  std::vector<Operator> gens;
  for (const auto& m : a.target.w.M().basis_ops())
    gens.push_back(Operator{big, kron(m.mat, Matrix::Identity(ng, ng))});
  for (int p = 0; p < ng; ++p)
    gens.push_back(Operator{big, kron(a.u[p].mat, regular_rep(a.group, p).mat)});
  OperatorSpace expected_m = generated_algebra(big, gens);
  out.push_back(flag_check("m1-generators",
                           "M1 is generated by m ⊗ 1 and u_p ⊗ lambda_p",
                           space_eq(cf.w.M(), expected_m)));

  std::vector<Operator> mhat_gens;
  for (const auto& mh : a.target.w.Mhat().basis_ops())
    for (int p = 0; p < ng; ++p) {
      Matrix epp = Matrix::Zero(ng, ng);
      epp(p, p) = 1.0;
      mhat_gens.push_back(Operator{big, kron(mh.mat, epp)});
    }
  OperatorSpace expected_mhat = span_of(big, mhat_gens);
  out.push_back(flag_check("mhat1-product-form",
                           "Mhat1 = Mhat ⊗ functions on G",
                           space_eq(cf.w.Mhat(), expected_mhat)));
  return out;
}

// The coproduct of the crossed product against its announced form on the two
// kinds of generators, and the dual coproduct against the twisted flip.
inline std::vector<CheckResult> crossed_coproduct_checks(const GroupAction& a,
                                                         double tol = 1e-10) {
  std::vector<CheckResult> out;
  const int n = a.target.w.hdim(), ng = a.group.order;
  const int big = n * ng;
  const double thr = tol * big;
  Frame cf = crossed_frame(a, tol);
  TensorLayout l4{n, ng, n, ng};
  TensorLayout big2{big, big};
  Operator u = action_unitary(a);

  double worst_m = 0.0;
  for (const auto& m : a.target.w.M().basis_ops()) {
    Operator lhs = comultiply(cf.w, Operator{TensorLayout{big},
                                             kron(m.mat, Matrix::Identity(ng, ng))});
    Operator rhs = embed_legs(comultiply(a.target.w, m), l4, {0, 2});
    worst_m = std::max(worst_m, frobenius(lhs.mat - rhs.mat));
  }
  out.push_back(residual_check("coproduct-on-m", "Phi1(m ⊗ 1) = Phi(m)_13",
                               worst_m, thr));

  double worst_lam = 0.0;
  Matrix uu = kron(u.mat, u.mat);
  for (int p = 0; p < ng; ++p) {
    Operator lam = regular_rep(a.group, p);
    Operator lift = embed_legs(lam, TensorLayout{n, ng}, {1});
    Matrix gen = u.mat.adjoint() * lift.mat * u.mat;
    Operator lhs = comultiply(cf.w, Operator{TensorLayout{big}, gen});
    Matrix lam24 = embed_legs(tensor_product(lam, lam), l4, {1, 3}).mat;
    Matrix rhs = uu.adjoint() * lam24 * uu;
    worst_lam = std::max(worst_lam, frobenius(lhs.mat - rhs));
  }
  out.push_back(residual_check(
      "coproduct-on-lambda",
      "Phi1(U*(1 ⊗ lambda_p)U) = (U* ⊗ U*)(lambda_p)_24(U ⊗ U)", worst_lam, thr));

  // Dual coproduct: Phihat1(mhat ⊗ f) = (id ⊗ tau ⊗ id)(Phihat ⊗ Phihat0)
  // with tau(x) = sigma(U x U*).
  MultiplicativeUnitary w0(dual_unitary_op(group_unitary_op(a.group)), tol);
  TensorLayout hhgg{n, n, ng, ng};
  Operator u_mid = embed_legs(u, hhgg, {1, 2});
  Operator perm = permute_legs(hhgg, {0, 2, 1, 3});
  double worst_hat = 0.0;
  for (const auto& mh : a.target.w.Mhat().basis_ops())
    for (int p = 0; p < ng; ++p) {
      Matrix epp = Matrix::Zero(ng, ng);
      epp(p, p) = 1.0;
      Operator lhs = comultiply_dual(cf.w, Operator{TensorLayout{big},
                                                    kron(mh.mat, epp)});
      Matrix inner = kron(comultiply_dual(a.target.w, mh).mat,
                          comultiply_dual(w0, Operator{TensorLayout{ng}, epp}).mat);
      Matrix rhs = perm.mat * (u_mid.mat * inner * u_mid.mat.adjoint()) *
                   perm.mat.transpose();
      worst_hat = std::max(worst_hat, frobenius(lhs.mat - rhs));
    }
  out.push_back(residual_check(
      "dual-coproduct-twisted-flip",
      "Phihat1 = (id ⊗ tau ⊗ id)(Phihat ⊗ Phihat0)", worst_hat, thr));
  return out;
}

struct SemidirectResult {
  bool matched = false;
  std::string identification;
  double residual = 0.0;
  std::vector<std::pair<std::string, double>> candidates;
};

// Compares the crossed product of alpha acting on the dual group frame of H
// with the dual group frame of H x| G, over the small set of canonical basis
// identifications of C^H ⊗ C^G with C^(H x| G).
inline SemidirectResult semidirect_compare(const FiniteGroup& h, const FiniteGroup& g,
                                           const std::vector<Automorphism>& alpha,
                                           double tol = 1e-10) {
  check_action(h, g, alpha);
  const int nh = h.order, ng = g.order, big = nh * ng;

  Frame target = dual_group_frame(h);
  std::vector<Operator> u;
  for (int p = 0; p < ng; ++p) {
    Matrix m = Matrix::Zero(nh, nh);
    for (int x = 0; x < nh; ++x) m(alpha[p][x], x) = 1.0;
    u.push_back(Operator{TensorLayout{nh}, std::move(m)});
  }
  GroupAction action(g, target, u);
  Frame cf = crossed_frame(action, tol);

  auto inv_alpha = alpha;
  for (auto& a : inv_alpha) {
    std::vector<int> inv(nh);
    for (int x = 0; x < nh; ++x) inv[a[x]] = x;
    a = inv;
  }

  SemidirectResult out;
  out.residual = std::numeric_limits<double>::infinity();
  for (int conv = 0; conv < 2; ++conv) {
    FiniteGroup k = semidirect(h, g, conv == 0 ? alpha : inv_alpha);
    Frame kf = dual_group_frame(k);
    for (int maj = 0; maj < 2; ++maj) {
      // maj 0: (a, b) -> a |G| + b (the semidirect index itself);
      // maj 1: (a, b) -> b |H| + a.
      Matrix p = Matrix::Zero(big, big);
      for (int a = 0; a < nh; ++a)
        for (int b = 0; b < ng; ++b)
          p(a * ng + b, maj == 0 ? a * ng + b : b * nh + a) = 1.0;
      Matrix pp = kron(p, p);
      double r = frobenius(pp * cf.w.w().mat * pp.adjoint() - kf.w.w().mat);
      r = std::max(r, frobenius(p * cf.j.mat * p.transpose() - kf.j.mat));
      r = std::max(r, frobenius(p * cf.jhat.mat * p.transpose() - kf.jhat.mat));
      std::string name = std::string(conv == 0 ? "alpha" : "alpha-inverse") +
                         (maj == 0 ? "/h-major" : "/g-major");
      out.candidates.emplace_back(name, r);
      if (r < out.residual) {
        out.residual = r;
        out.identification = name;
      }
    }
  }
  out.matched = out.residual < tol * big;
  return out;
}

}  // namespace qgf

#endif
