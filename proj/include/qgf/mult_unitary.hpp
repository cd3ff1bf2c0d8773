#ifndef QGF_MULT_UNITARY_HPP
#define QGF_MULT_UNITARY_HPP

#include <optional>

#include "qgf/antilinear.hpp"
#include "qgf/functional.hpp"
#include "qgf/operator_space.hpp"

namespace qgf {

// ||W12 W13 W23 - W23 W12|| on H ⊗ H ⊗ H.
inline double pentagon_residual(const Operator& w) {
  if (w.layout.rank() != 2 || w.layout.dims[0] != w.layout.dims[1])
    throw std::invalid_argument("pentagon_residual: expected two equal factors");
  const int n = w.layout.dims[0];
  TensorLayout l3{n, n, n};
  Operator w12 = embed_legs(w, l3, {0, 1});
  Operator w13 = embed_legs(w, l3, {0, 2});
  Operator w23 = embed_legs(w, l3, {1, 2});
  return distance(w12 * w13 * w23, w23 * w12);
}

// Unitary on H ⊗ H satisfying the pentagon equation. Construction validates
// both; the slice spaces S = {(id ⊗ om)(W)} and Shat = {(om ⊗ id)(W)} and the
// algebras they generate are computed on demand and cached.
class MultiplicativeUnitary {
 public:
  explicit MultiplicativeUnitary(Operator w, double tol = 1e-10) : w_(std::move(w)) {
    if (w_.layout.rank() != 2 || w_.layout.dims[0] != w_.layout.dims[1])
      throw std::invalid_argument("MultiplicativeUnitary: expected two equal factors");
    Matrix d = w_.mat.adjoint() * w_.mat - Matrix::Identity(w_.dim(), w_.dim());
    unitarity_defect_ = frobenius(d);
    if (unitarity_defect_ >= tol * w_.dim())
      throw std::invalid_argument("MultiplicativeUnitary: not unitary");
    pentagon_defect_ = pentagon_residual(w_);
    if (pentagon_defect_ >= std::max(tol, tol * hdim()))
      throw std::invalid_argument("MultiplicativeUnitary: pentagon equation fails");
  }

  const Operator& w() const { return w_; }
  int hdim() const { return w_.layout.dims[0]; }
  TensorLayout hilbert() const { return TensorLayout{hdim()}; }
  double unitarity_defect() const { return unitarity_defect_; }
  double pentagon_defect() const { return pentagon_defect_; }

  const OperatorSpace& S() const {
    if (!s_) s_ = slice_space(false);
    return *s_;
  }

  const OperatorSpace& Shat() const {
    if (!shat_) shat_ = slice_space(true);
    return *shat_;
  }

  const OperatorSpace& M() const {
    if (!m_) m_ = generated_algebra(hilbert(), S().basis_ops());
    return *m_;
  }

  const OperatorSpace& Mhat() const {
    if (!mhat_) mhat_ = generated_algebra(hilbert(), Shat().basis_ops());
    return *mhat_;
  }

 private:
  OperatorSpace slice_space(bool left) const {
    const int n = hdim();
    std::vector<Operator> slices;
    slices.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Functional om = matrix_unit_functional(n, i, j);
        slices.push_back(left ? slice_left(w_, om) : slice_right(w_, om));
      }
    return span_of(hilbert(), slices);
  }

  Operator w_;
  double unitarity_defect_ = 0.0;
  double pentagon_defect_ = 0.0;
  mutable std::optional<OperatorSpace> s_, shat_, m_, mhat_;
};

// What = Sigma W* Sigma, the dual multiplicative unitary.
inline Operator dual_unitary_op(const Operator& w) {
  Operator sigma = flip(w.layout);
  return {w.layout, sigma.mat * w.mat.adjoint() * sigma.mat};
}

inline MultiplicativeUnitary dual_unitary(const MultiplicativeUnitary& mu,
                                          double tol = 1e-10) {
  return MultiplicativeUnitary(dual_unitary_op(mu.w()), tol);
}

// Phi(m) = W* (1 ⊗ m) W.
inline Operator comultiply(const MultiplicativeUnitary& mu, const Operator& m) {
  const int n = mu.hdim();
  if (m.dim() != n) throw std::invalid_argument("comultiply: dimension mismatch");
  Operator lift = embed_legs(m, mu.w().layout, {1});
  return {mu.w().layout, mu.w().mat.adjoint() * lift.mat * mu.w().mat};
}

// Phihat(mhat) = What* (1 ⊗ mhat) What.
inline Operator comultiply_dual(const MultiplicativeUnitary& mu, const Operator& mhat) {
  Operator what = dual_unitary_op(mu.w());
  Operator lift = embed_legs(mhat, what.layout, {1});
  return {what.layout, what.mat.adjoint() * lift.mat * what.mat};
}

// ||(Phi ⊗ id)(Phi(m)) - (id ⊗ Phi)(Phi(m))||.
inline double coassociativity_residual(const MultiplicativeUnitary& mu,
                                       const Operator& m) {
  const int n = mu.hdim();
  TensorLayout l3{n, n, n};
  Operator phi_m = comultiply(mu, m);
  Operator w12 = embed_legs(mu.w(), l3, {0, 1});
  Operator w23 = embed_legs(mu.w(), l3, {1, 2});
  // (Phi ⊗ id) moves the first slot of Phi(m) to legs (1, 2).
  Operator lhs = adjoint(w12) * embed_legs(phi_m, l3, {1, 2}) * w12;
  Operator rhs = adjoint(w23) * embed_legs(phi_m, l3, {0, 2}) * w23;
  return distance(lhs, rhs);
}

// (psi ⊗ om)(W): the duality pairing of (id ⊗ om)(W) with (psi ⊗ id)(W).
inline complex pairing(const Functional& psi, const Functional& om,
                       const MultiplicativeUnitary& mu) {
  Functional both = tensor_functional(psi, om);
  return evaluate(both, mu.w());
}

struct DualityResiduals {
  double coproduct_vs_product;          // hat side products
  double flipped_coproduct_vs_product;  // plain side products
};

// Numerical form of the two pairing identities
//   <Phi(m), mhat1 ⊗ mhat2> = <m, mhat1 mhat2>
//   <m1 ⊗ m2, Phihat'(mhat)> = <m1 m2, mhat>
// with m, mi produced by right slices and mhat, mhati by left slices.
// The three-leg product W13 W23 and the dual unitary are precomputed so many
// functional triples can be tested cheaply.
class DualityTester {
 public:
  explicit DualityTester(const MultiplicativeUnitary& mu) : mu_(mu) {
    const int n = mu.hdim();
    TensorLayout l3{n, n, n};
    w13w23_ = (embed_legs(mu.w(), l3, {0, 2}) * embed_legs(mu.w(), l3, {1, 2})).mat;
    what_ = dual_unitary_op(mu.w());
    sigma_ = flip(mu.w().layout).mat;
  }

  DualityResiduals residuals(const Functional& psi1, const Functional& psi2,
                             const Functional& om) const {
    Functional triple = tensor_functional(tensor_functional(psi1, psi2), om);
    Operator mhat1 = slice_left(mu_.w(), psi1);
    Operator mhat2 = slice_left(mu_.w(), psi2);
    complex lhs1 = evaluate(triple, w13w23_);
    complex rhs1 = evaluate(om, mhat1 * mhat2);

    Operator mhat = slice_left(mu_.w(), om);
    Operator lift = embed_legs(mhat, what_.layout, {1});
    Matrix phihat = what_.mat.adjoint() * lift.mat * what_.mat;
    Matrix flipped = sigma_ * phihat * sigma_;
    Operator m1 = slice_right(mu_.w(), psi1);
    Operator m2 = slice_right(mu_.w(), psi2);
    complex lhs2 = evaluate(tensor_functional(psi1, psi2), flipped);
    complex rhs2 = evaluate(om, m1 * m2);
    return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
  }

 private:
  const MultiplicativeUnitary& mu_;
  Matrix w13w23_;
  Operator what_;
  Matrix sigma_;
};

inline DualityResiduals duality_residuals(const MultiplicativeUnitary& mu,
                                          const Functional& psi1,
                                          const Functional& psi2,
                                          const Functional& om) {
  return DualityTester(mu).residuals(psi1, psi2, om);
}

struct TrimResult {
  bool trim = false;
  int product_dim = 0;
  // How far span(Shat* S) sticks out of span(S Shat*); zero in exact
  // arithmetic for any multiplicative unitary.
  double reverse_product_defect = 0.0;
};

// W is trim when span{s shat* : s in S, shat in Shat} is all of B(H).
inline TrimResult trim_check(const MultiplicativeUnitary& mu, double tol = 1e-9) {
  const auto s_ops = mu.S().basis_ops();
  const auto shat_ops = mu.Shat().basis_ops();
  std::vector<Operator> fwd, rev;
  for (const auto& s : s_ops)
    for (const auto& sh : shat_ops) fwd.push_back(s * adjoint(sh));
  for (const auto& sh : shat_ops)
    for (const auto& s : s_ops) rev.push_back(adjoint(sh) * s);
  OperatorSpace fwd_span = span_of(mu.hilbert(), fwd, tol);
  double defect = 0.0;
  for (const auto& r : rev)
    defect = std::max(defect, project_residual(fwd_span, r) * frobenius(r.mat));
  TrimResult out;
  out.product_dim = fwd_span.dim();
  out.trim = is_dense(fwd_span);
  out.reverse_product_defect = defect;
  return out;
}

// C = {(id ⊗ om)(Sigma W)}, D = {(id ⊗ om)(W Sigma)}.
inline OperatorSpace C_space(const MultiplicativeUnitary& mu) {
  const int n = mu.hdim();
  Operator sigma = flip(mu.w().layout);
  Operator sw{mu.w().layout, sigma.mat * mu.w().mat};
  std::vector<Operator> slices;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      slices.push_back(slice_right(sw, matrix_unit_functional(n, i, j)));
  return span_of(mu.hilbert(), slices);
}

inline OperatorSpace D_space(const MultiplicativeUnitary& mu) {
  const int n = mu.hdim();
  Operator sigma = flip(mu.w().layout);
  Operator ws{mu.w().layout, mu.w().mat * sigma.mat};
  std::vector<Operator> slices;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      slices.push_back(slice_right(ws, matrix_unit_functional(n, i, j)));
  return span_of(mu.hilbert(), slices);
}

}  // namespace qgf

#endif
