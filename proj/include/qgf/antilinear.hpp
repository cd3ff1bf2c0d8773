#ifndef QGF_ANTILINEAR_HPP
#define QGF_ANTILINEAR_HPP

#include "qgf/operator.hpp"

namespace qgf {

// Antilinear map, stored through the matrix A of the linear map it becomes
// after entrywise conjugation of the argument: xi -> A * conj(xi).
//
// Consequences of this storage convention:
//   adjoint        J* <-> A^T
//   self-adjoint   J = J*   iff  A symmetric
//   involution     J^2 = 1  iff  A * conj(A) = 1
//   composition    J K (linear)    = A_J * conj(A_K)
//   conjugation    J x J (linear)  = A * conj(x) * conj(A)
//   tensor         J ⊗ K  <->  A_J ⊗ A_K
struct Antilinear {
  TensorLayout layout;
  Matrix mat;

  Antilinear() = default;
  Antilinear(TensorLayout l, Matrix m) : layout(std::move(l)), mat(std::move(m)) {
    if (mat.rows() != layout.total() || mat.cols() != layout.total())
      throw std::invalid_argument("Antilinear: matrix size does not match layout");
  }

  int dim() const { return layout.total(); }
};

inline Vector apply(const Antilinear& j, const Vector& xi) { return j.mat * xi.conjugate(); }

// Plain entrywise conjugation in the standard basis.
inline Antilinear conjugation(const TensorLayout& l) {
  return {l, Matrix::Identity(l.total(), l.total())};
}

inline Antilinear antilinear_tensor(const Antilinear& a, const Antilinear& b) {
  return {concat(a.layout, b.layout), kron(a.mat, b.mat)};
}

inline Antilinear scale(const Antilinear& j, complex gamma) { return {j.layout, gamma * j.mat}; }

// The linear operator J K.
inline Operator compose(const Antilinear& j, const Antilinear& k) {
  if (j.dim() != k.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return {j.layout, j.mat * k.mat.conjugate()};
}

// The linear operator J x J.
inline Operator conjugate_by(const Antilinear& j, const Operator& x) {
  if (j.dim() != x.dim()) throw std::invalid_argument("conjugate_by: dimension mismatch");
  return {x.layout, j.mat * x.mat.conjugate() * j.mat.conjugate()};
}

// The linear operator J x K for two (possibly different) antilinear maps.
inline Operator sandwich(const Antilinear& j, const Operator& x, const Antilinear& k) {
  if (j.dim() != x.dim() || k.dim() != x.dim())
    throw std::invalid_argument("sandwich: dimension mismatch");
  return {x.layout, j.mat * x.mat.conjugate() * k.mat.conjugate()};
}

// u J (first the antilinear map, then the unitary).
inline Antilinear compose_lin_anti(const Operator& u, const Antilinear& j) {
  return {j.layout, u.mat * j.mat};
}

// J u (first the unitary, then the antilinear map).
inline Antilinear compose_anti_lin(const Antilinear& j, const Operator& u) {
  return {j.layout, j.mat * u.mat.conjugate()};
}

inline double selfadjoint_defect(const Antilinear& j) {
  return frobenius(j.mat - j.mat.transpose());
}

inline double involution_defect(const Antilinear& j) {
  return frobenius(j.mat * j.mat.conjugate() - Matrix::Identity(j.dim(), j.dim()));
}

inline bool is_selfadjoint(const Antilinear& j, double tol = 1e-10) {
  return selfadjoint_defect(j) < tol * j.dim();
}

inline bool is_involution(const Antilinear& j, double tol = 1e-10) {
  return involution_defect(j) < tol * j.dim();
}

}  // namespace qgf

#endif
