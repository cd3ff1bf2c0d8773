#ifndef QGF_OPERATOR_SPACE_HPP
#define QGF_OPERATOR_SPACE_HPP

#include <Eigen/SVD>
#include <vector>

#include "qgf/operator.hpp"

namespace qgf {

inline Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, int n) {
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

// Linear subspace of B(H), stored as an orthonormal basis in the
// Hilbert-Schmidt inner product <a, b> = trace(b* a). Columns of `basis`
// are vectorized operators.
struct OperatorSpace {
  TensorLayout layout;
  Matrix basis;  // total^2 x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }

  Operator basis_op(int i) const {
    return {layout, unvec(basis.col(i), layout.total())};
  }

  std::vector<Operator> basis_ops() const {
    std::vector<Operator> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) out.push_back(basis_op(i));
    return out;
  }
};

// Orthonormalizes the generators by modified Gram-Schmidt in the given order.
// Vectors whose post-projection norm falls below tol times the largest input
// norm are discarded, so the resulting dimension is a numerical rank.
inline OperatorSpace span_of(const TensorLayout& layout,
                             const std::vector<Operator>& gens, double tol = 1e-9) {
  const int t = layout.total();
  double max_norm = 0.0;
  for (const auto& g : gens) {
    if (g.dim() != t) throw std::invalid_argument("span_of: generator dimension mismatch");
    max_norm = std::max(max_norm, frobenius(g.mat));
  }
  Matrix basis(t * t, gens.size());
  int d = 0;
  for (const auto& g : gens) {
    Vector v = vec(g.mat);
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < d; ++i) v -= basis.col(i).dot(v) * basis.col(i);
    double nv = v.norm();
    if (nv > tol * max_norm && nv > 0.0) basis.col(d++) = v / nv;
  }
  return {layout, basis.leftCols(d)};
}

struct AlgebraOptions {
  bool unital = true;
  bool star_closed = true;
};

// Smallest subspace containing the generators (plus 1 and adjoints when
// requested) and closed under products. Iterates pairwise products of the
// current basis, in basis order, until the dimension stabilizes.
inline OperatorSpace generated_algebra(const TensorLayout& layout,
                                       const std::vector<Operator>& gens,
                                       AlgebraOptions opts = {}, double tol = 1e-9) {
  std::vector<Operator> seed;
  if (opts.unital) seed.push_back(identity_op(layout));
  for (const auto& g : gens) seed.push_back(g);
  if (opts.star_closed)
    for (const auto& g : gens) seed.push_back(adjoint(g));
  OperatorSpace cur = span_of(layout, seed, tol);
  for (;;) {
    std::vector<Operator> next = cur.basis_ops();
    const int d = cur.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) next.push_back(next[i] * next[j]);
    OperatorSpace grown = span_of(layout, next, tol);
    if (grown.dim() == cur.dim()) return grown;
    cur = std::move(grown);
  }
}

// Commutant of a set of operators: the joint nullspace of x -> x g - g x over
// the generators, computed by SVD. Singular values at or below tol times the
// largest generator norm count as zero; the generator norm (not the largest
// singular value) sets the scale so that a nearly central generator set does
// not turn pure noise into rank. The empty generator set yields all of B(H).
inline OperatorSpace commutant(const TensorLayout& layout,
                               const std::vector<Operator>& gens, double tol = 1e-9) {
  const int t = layout.total();
  const int n2 = t * t;
  if (gens.empty()) return {layout, Matrix::Identity(n2, n2)};
  // Column-major vec: vec(X G - G X) = (G^T ⊗ 1 - 1 ⊗ G) vec(X).
  Matrix a(n2 * gens.size(), n2);
  const Matrix id = Matrix::Identity(t, t);
  double scale = 0.0;
  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].dim() != t) throw std::invalid_argument("commutant: generator dimension mismatch");
    a.middleRows(k * n2, n2) =
        kron(gens[k].mat.transpose(), id) - kron(id, gens[k].mat);
    scale = std::max(scale, frobenius(gens[k].mat));
  }
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * scale) ++rank;
  Matrix v = svd.matrixV();
  return {layout, v.rightCols(v.cols() - rank)};
}

// Norm of the component of x orthogonal to the space, relative to ||x||.
inline double project_residual(const OperatorSpace& s, const Operator& x) {
  Vector v = vec(x.mat);
  double nv = v.norm();
  if (nv == 0.0) return 0.0;
  Vector r = v - s.basis * (s.basis.adjoint() * v);
  return r.norm() / nv;
}

inline double containment_defect(const OperatorSpace& a, const OperatorSpace& b) {
  // How far b is from being contained in a.
  double worst = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    Vector v = b.basis.col(i);
    Vector r = v - a.basis * (a.basis.adjoint() * v);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

inline bool space_contains(const OperatorSpace& a, const OperatorSpace& b,
                           double tol = 1e-9) {
  return containment_defect(a, b) < tol;
}

inline bool space_eq(const OperatorSpace& a, const OperatorSpace& b, double tol = 1e-9) {
  return a.dim() == b.dim() && space_contains(a, b, tol) && space_contains(b, a, tol);
}

inline bool is_dense(const OperatorSpace& s) {
  return s.dim() == s.layout.total() * s.layout.total();
}

inline bool is_commutative(const OperatorSpace& s, double tol = 1e-9) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (frobenius(commutator(s.basis_op(i), s.basis_op(j)).mat) > tol) return false;
  return true;
}

inline OperatorSpace adjoint_space(const OperatorSpace& s) {
  std::vector<Operator> ops;
  ops.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) ops.push_back(adjoint(s.basis_op(i)));
  return span_of(s.layout, ops);
}

}  // namespace qgf

#endif
