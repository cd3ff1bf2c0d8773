#ifndef QGF_FUNCTIONAL_HPP
#define QGF_FUNCTIONAL_HPP

#include "qgf/operator.hpp"

namespace qgf {

// Normal linear functional on B(H), stored through its density matrix:
// om(x) = trace(density * x). The vector functional om_{xi,eta}(x) =
// <x xi, eta> has density xi * conj(eta)^T.
struct Functional {
  TensorLayout layout;
  Matrix density;

  Functional() = default;
  Functional(TensorLayout l, Matrix d) : layout(std::move(l)), density(std::move(d)) {
    if (density.rows() != layout.total() || density.cols() != layout.total())
      throw std::invalid_argument("Functional: density size does not match layout");
  }

  int dim() const { return layout.total(); }
};

// trace(density * x), computed entrywise to stay quadratic in the dimension.
inline complex evaluate(const Functional& om, const Matrix& x) {
  if (om.density.rows() != x.rows())
    throw std::invalid_argument("evaluate: dimension mismatch");
  return om.density.transpose().cwiseProduct(x).sum();
}

inline complex evaluate(const Functional& om, const Operator& x) {
  return evaluate(om, x.mat);
}

inline Functional vector_functional(const Vector& xi, const Vector& eta) {
  if (xi.size() != eta.size())
    throw std::invalid_argument("vector_functional: vector size mismatch");
  return {TensorLayout{static_cast<int>(xi.size())}, xi * eta.conjugate().transpose()};
}

// om(x) = x(j, i); the functional om_{e_i, e_j}.
inline Functional matrix_unit_functional(int n, int i, int j) {
  Matrix d = Matrix::Zero(n, n);
  d(i, j) = 1.0;
  return {TensorLayout{n}, std::move(d)};
}

inline Functional tensor_functional(const Functional& a, const Functional& b) {
  return {concat(a.layout, b.layout), kron(a.density, b.density)};
}

// (id ⊗ om)(x) for x on a two-factor layout; om lives on the second factor.
inline Operator slice_right(const Operator& x, const Functional& om) {
  if (x.layout.rank() != 2)
    throw std::invalid_argument("slice_right: operator must have two factors");
  const int d1 = x.layout.dims[0], d2 = x.layout.dims[1];
  if (om.dim() != d2) throw std::invalid_argument("slice_right: functional dimension mismatch");
  Matrix out = Matrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d1; ++k) {
      complex s = 0.0;
      for (int j = 0; j < d2; ++j)
        for (int l = 0; l < d2; ++l) s += x.mat(i * d2 + j, k * d2 + l) * om.density(l, j);
      out(i, k) = s;
    }
  return {TensorLayout{d1}, std::move(out)};
}

// (om ⊗ id)(x); om lives on the first factor.
inline Operator slice_left(const Operator& x, const Functional& om) {
  if (x.layout.rank() != 2)
    throw std::invalid_argument("slice_left: operator must have two factors");
  const int d1 = x.layout.dims[0], d2 = x.layout.dims[1];
  if (om.dim() != d1) throw std::invalid_argument("slice_left: functional dimension mismatch");
  Matrix out = Matrix::Zero(d2, d2);
  for (int j = 0; j < d2; ++j)
    for (int l = 0; l < d2; ++l) {
      complex s = 0.0;
      for (int i = 0; i < d1; ++i)
        for (int k = 0; k < d1; ++k) s += x.mat(i * d2 + j, k * d2 + l) * om.density(k, i);
      out(j, l) = s;
    }
  return {TensorLayout{d2}, std::move(out)};
}

}  // namespace qgf

#endif
