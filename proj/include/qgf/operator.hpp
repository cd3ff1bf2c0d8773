#ifndef QGF_OPERATOR_HPP
#define QGF_OPERATOR_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "qgf/layout.hpp"

namespace qgf {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator on a tensor product of finite-dimensional Hilbert spaces.
// The layout records the factor structure of the domain; the matrix is the
// flattened representation.
struct Operator {
  TensorLayout layout;
  Matrix mat;

  Operator() = default;
  Operator(TensorLayout l, Matrix m) : layout(std::move(l)), mat(std::move(m)) {
    if (mat.rows() != layout.total() || mat.cols() != layout.total())
      throw std::invalid_argument("Operator: matrix size does not match layout");
  }

  int dim() const { return layout.total(); }
};

inline double frobenius(const Matrix& m) { return m.norm(); }

inline Operator identity_op(const TensorLayout& l) {
  return {l, Matrix::Identity(l.total(), l.total())};
}

inline Operator with_layout(const Operator& x, TensorLayout l) {
  if (l.total() != x.dim())
    throw std::invalid_argument("with_layout: total dimension mismatch");
  return {std::move(l), x.mat};
}

inline Operator adjoint(const Operator& x) { return {x.layout, x.mat.adjoint()}; }

inline Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("operator*: dimension mismatch");
  return {a.layout, a.mat * b.mat};
}

inline Operator operator*(complex s, const Operator& a) { return {a.layout, s * a.mat}; }

inline Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("operator+: dimension mismatch");
  return {a.layout, a.mat + b.mat};
}

inline Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("operator-: dimension mismatch");
  return {a.layout, a.mat - b.mat};
}

inline double distance(const Operator& a, const Operator& b) {
  return frobenius(a.mat - b.mat);
}

inline Operator commutator(const Operator& a, const Operator& b) {
  return {a.layout, a.mat * b.mat - b.mat * a.mat};
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

inline Operator tensor_product(const Operator& a, const Operator& b) {
  return {concat(a.layout, b.layout), kron(a.mat, b.mat)};
}

// Unitary relabelling of tensor factors: output leg i carries input leg
// perm[i]. The returned operator's layout is the permuted layout.
inline Operator permute_legs(const TensorLayout& from, const std::vector<int>& perm) {
  const int r = from.rank();
  if (static_cast<int>(perm.size()) != r)
    throw std::invalid_argument("permute_legs: permutation rank mismatch");
  std::vector<int> seen(r, 0);
  std::vector<int> out_dims(r);
  for (int i = 0; i < r; ++i) {
    if (perm[i] < 0 || perm[i] >= r || seen[perm[i]]++)
      throw std::invalid_argument("permute_legs: not a permutation");
    out_dims[i] = from.dims[perm[i]];
  }
  TensorLayout to(out_dims);
  const int t = from.total();
  Matrix p = Matrix::Zero(t, t);
  std::vector<int> out_idx(r);
  for (int f = 0; f < t; ++f) {
    std::vector<int> idx = from.unflatten(f);
    for (int i = 0; i < r; ++i) out_idx[i] = idx[perm[i]];
    p(to.flatten(out_idx), f) = 1.0;
  }
  return {to, std::move(p)};
}

// Flip of a two-factor space, (x, y) -> (y, x).
inline Operator flip(const TensorLayout& l) {
  if (l.rank() != 2) throw std::invalid_argument("flip: layout must have two factors");
  return permute_legs(l, {1, 0});
}

// Embeds x, acting on the factors of `target` selected by `legs` (in order),
// as an operator on the whole of `target`, acting as the identity elsewhere.
inline Operator embed_legs(const Operator& x, const TensorLayout& target,
                           const std::vector<int>& legs) {
  const int r = target.rank();
  if (x.layout.rank() != static_cast<int>(legs.size()))
    throw std::invalid_argument("embed_legs: leg count does not match operator rank");
  std::vector<int> used(r, 0);
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 0 || legs[i] >= r || used[legs[i]]++)
      throw std::invalid_argument("embed_legs: bad leg list");
    if (x.layout.dims[i] != target.dims[legs[i]])
      throw std::invalid_argument("embed_legs: leg dimension mismatch");
  }
  // Order: selected legs first, the rest in increasing order.
  std::vector<int> order = legs;
  for (int i = 0; i < r; ++i)
    if (!used[i]) order.push_back(i);
  std::vector<int> rest_dims;
  for (size_t i = legs.size(); i < order.size(); ++i)
    rest_dims.push_back(target.dims[order[i]]);
  Matrix y0 = rest_dims.empty()
                  ? x.mat
                  : kron(x.mat, Matrix::Identity(TensorLayout(rest_dims).total(),
                                                 TensorLayout(rest_dims).total()));
  std::vector<int> l0_dims(r);
  for (int i = 0; i < r; ++i) l0_dims[i] = target.dims[order[i]];
  TensorLayout l0(l0_dims);
  std::vector<int> q(r);  // inverse of order
  for (int i = 0; i < r; ++i) q[order[i]] = i;
  Operator p = permute_legs(l0, q);
  return {target, p.mat * y0 * p.mat.transpose()};
}

inline bool is_unitary(const Operator& x, double tol = 1e-10) {
  Matrix d = x.mat.adjoint() * x.mat - Matrix::Identity(x.dim(), x.dim());
  return frobenius(d) < tol * x.dim();
}

inline bool is_hermitian(const Operator& x, double tol = 1e-10) {
  return frobenius(x.mat - x.mat.adjoint()) < tol * x.dim();
}

inline bool is_projection(const Operator& x, double tol = 1e-10) {
  return is_hermitian(x, tol) && frobenius(x.mat * x.mat - x.mat) < tol * x.dim();
}

}  // namespace qgf

#endif
