#ifndef QGF_LAYOUT_HPP
#define QGF_LAYOUT_HPP

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgf {

// Ordered list of tensor-factor dimensions. Multi-indices flatten row-major,
// factor 1 most significant, so the matrix of a ⊗ b is the literal Kronecker
// product of the matrices of a and b.
struct TensorLayout {
  std::vector<int> dims;

  TensorLayout() = default;
  TensorLayout(std::initializer_list<int> d) : dims(d) { check(); }
  explicit TensorLayout(std::vector<int> d) : dims(std::move(d)) { check(); }

  int rank() const { return static_cast<int>(dims.size()); }

  int total() const {
    int t = 1;
    for (int d : dims) t *= d;
    return t;
  }

  int flatten(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
      throw std::invalid_argument("flatten: index rank mismatch");
    int flat = 0;
    for (int i = 0; i < rank(); ++i) {
      if (idx[i] < 0 || idx[i] >= dims[i])
        throw std::out_of_range("flatten: index out of range");
      flat = flat * dims[i] + idx[i];
    }
    return flat;
  }

  std::vector<int> unflatten(int flat) const {
    if (flat < 0 || flat >= total())
      throw std::out_of_range("unflatten: index out of range");
    std::vector<int> idx(rank());
    for (int i = rank() - 1; i >= 0; --i) {
      idx[i] = flat % dims[i];
      flat /= dims[i];
    }
    return idx;
  }

  bool operator==(const TensorLayout&) const = default;

 private:
  void check() const {
    for (int d : dims)
      if (d <= 0)
        throw std::invalid_argument("TensorLayout: dimensions must be positive");
  }
};

inline TensorLayout concat(const TensorLayout& a, const TensorLayout& b) {
  std::vector<int> d = a.dims;
  d.insert(d.end(), b.dims.begin(), b.dims.end());
  return TensorLayout(std::move(d));
}

}  // namespace qgf

#endif
