#ifndef QGF_RNG_HPP
#define QGF_RNG_HPP

#include <Eigen/QR>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qgf/functional.hpp"
#include "qgf/operator_space.hpp"

namespace qgf {

// Deterministic generator (xoshiro256**, seeded through splitmix64) with a
// fully specified double mapping, so streams are reproducible across
// platforms and standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& si : s_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      si = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal, Box-Muller on the uniform stream.
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  complex cgauss() {
    double re = gauss();
    double im = gauss();
    return {re, im};
  }

  Vector random_vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = cgauss();
    return v;
  }

  Matrix random_matrix(int n) {
    Matrix m(n, n);
    // Column-major fill keeps the draw order independent of how callers use it.
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = cgauss();
    return m;
  }

  // Haar-distributed unitary: QR of a Gaussian matrix with the phase
  // ambiguity fixed by the diagonal of R.
  Operator haar_unitary(int n) {
    Matrix g = random_matrix(n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      complex d = r(i, i);
      double ad = std::abs(d);
      q.col(i) *= (ad > 0.0) ? d / ad : complex(1.0, 0.0);
    }
    return {TensorLayout{n}, std::move(q)};
  }

  // Random functional with unit Hilbert-Schmidt norm density.
  Functional random_functional(const TensorLayout& l) {
    Matrix d = random_matrix(l.total());
    d /= d.norm();
    return {l, std::move(d)};
  }

  // Random element of a spanned space with unit-norm coefficient vector.
  Operator random_element(const OperatorSpace& s) {
    Vector c(s.dim());
    for (int i = 0; i < s.dim(); ++i) c(i) = cgauss();
    c /= c.norm();
    return {s.layout, unvec(s.basis * c, s.layout.total())};
  }

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qgf

#endif
