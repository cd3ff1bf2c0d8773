#include <catch2/catch_amalgamated.hpp>

#include "qgf/antilinear.hpp"
#include "qgf/functional.hpp"
#include "qgf/operator.hpp"
#include "qgf/rng.hpp"

using namespace qgf;

TEST_CASE("layout flatten and unflatten") {
  TensorLayout l{2, 3, 4};
  REQUIRE(l.total() == 24);
  REQUIRE(l.rank() == 3);
  for (int f = 0; f < l.total(); ++f) {
    auto idx = l.unflatten(f);
    REQUIRE(l.flatten(idx) == f);
  }
  // Factor 1 is most significant.
  REQUIRE(l.flatten(std::vector<int>{1, 0, 0}) == 12);
  REQUIRE(l.flatten(std::vector<int>{0, 1, 0}) == 4);
  REQUIRE(l.flatten(std::vector<int>{0, 0, 1}) == 1);
  REQUIRE_THROWS_AS(TensorLayout({2, 0}), std::invalid_argument);
}

TEST_CASE("tensor product is the literal Kronecker product") {
  Rng rng(7);
  Operator a{TensorLayout{2}, rng.random_matrix(2)};
  Operator b{TensorLayout{3}, rng.random_matrix(3)};
  Operator ab = tensor_product(a, b);
  REQUIRE(ab.layout == TensorLayout{2, 3});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 3; ++l)
          REQUIRE(std::abs(ab.mat(i * 3 + j, k * 3 + l) - a.mat(i, k) * b.mat(j, l)) <
                  1e-15);
}

TEST_CASE("flip swaps factors and squares to the identity") {
  Operator s = flip(TensorLayout{3, 2});
  Vector xi = Rng(1).random_vector(3);
  Vector eta = Rng(2).random_vector(2);
  Vector both = kron(Matrix(xi), Matrix(eta));
  Vector expect = kron(Matrix(eta), Matrix(xi));
  REQUIRE((s.mat * both - expect).norm() < 1e-14);
  Operator back = flip(TensorLayout{2, 3});
  REQUIRE(frobenius(back.mat * s.mat - Matrix::Identity(6, 6)) < 1e-15);
}

TEST_CASE("embed_legs matches the flip construction of W13") {
  Rng rng(3);
  Operator w = rng.haar_unitary(4);
  Operator w2{TensorLayout{2, 2}, w.mat};
  TensorLayout l3{2, 2, 2};
  Operator w13 = embed_legs(w2, l3, {0, 2});
  Operator sig23 = embed_legs(flip(TensorLayout{2, 2}), l3, {1, 2});
  Matrix w12 = kron(w2.mat, Matrix::Identity(2, 2));
  REQUIRE(frobenius(w13.mat - sig23.mat * w12 * sig23.mat) < 1e-13);
}

TEST_CASE("embed_legs permutes correctly on unequal dimensions") {
  Rng rng(9);
  Operator x{TensorLayout{2, 4}, rng.random_matrix(8)};
  TensorLayout big{2, 3, 4};
  Operator e = embed_legs(x, big, {0, 2});
  // Slice out the middle leg at a fixed index and compare.
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 4; ++l) {
            int row = big.flatten(std::vector<int>{i, m, j});
            int col = big.flatten(std::vector<int>{k, m, l});
            REQUIRE(std::abs(e.mat(row, col) - x.mat(i * 4 + j, k * 4 + l)) < 1e-15);
          }
  REQUIRE_THROWS_AS(embed_legs(x, big, {0, 1}), std::invalid_argument);
}

TEST_CASE("permute_legs composes like permutations") {
  TensorLayout l{2, 3, 4};
  Operator p = permute_legs(l, {2, 0, 1});
  REQUIRE(p.layout == TensorLayout{4, 2, 3});
  Operator q = permute_legs(p.layout, {1, 2, 0});
  REQUIRE(frobenius(q.mat * p.mat - Matrix::Identity(24, 24)) < 1e-15);
}

TEST_CASE("vector functionals evaluate as inner products") {
  Rng rng(11);
  Vector xi = rng.random_vector(4), eta = rng.random_vector(4);
  Operator x{TensorLayout{4}, rng.random_matrix(4)};
  Functional om = vector_functional(xi, eta);
  complex direct = eta.conjugate().transpose() * (x.mat * xi);
  REQUIRE(std::abs(evaluate(om, x) - direct) < 1e-13);
}

TEST_CASE("slices of elementary tensors") {
  Rng rng(5);
  Operator a{TensorLayout{3}, rng.random_matrix(3)};
  Operator b{TensorLayout{2}, rng.random_matrix(2)};
  Operator ab = tensor_product(a, b);
  Functional om = rng.random_functional(TensorLayout{2});
  Functional psi = rng.random_functional(TensorLayout{3});
  REQUIRE(frobenius(slice_right(ab, om).mat - evaluate(om, b) * a.mat) < 1e-13);
  REQUIRE(frobenius(slice_left(ab, psi).mat - evaluate(psi, a) * b.mat) < 1e-13);
}

TEST_CASE("antilinear storage convention") {
  Rng rng(13);
  Matrix a = rng.random_matrix(3);
  Antilinear j{TensorLayout{3}, a};
  Vector xi = rng.random_vector(3);
  REQUIRE((qgf::apply(j, xi) - a * xi.conjugate()).norm() < 1e-14);

  // <J xi, eta> = <J* eta, xi> with J* stored as the transpose.
  Antilinear jstar{TensorLayout{3}, a.transpose()};
  Vector eta = rng.random_vector(3);
  complex lhs = eta.conjugate().transpose() * qgf::apply(j, xi);
  complex rhs = xi.conjugate().transpose() * qgf::apply(jstar, eta);
  REQUIRE(std::abs(lhs - rhs) < 1e-13);

  Antilinear c = conjugation(TensorLayout{3});
  REQUIRE(is_selfadjoint(c));
  REQUIRE(is_involution(c));

  // Composition and conjugation as matrices.
  Antilinear k{TensorLayout{3}, rng.random_matrix(3)};
  Vector v = rng.random_vector(3);
  REQUIRE((compose(j, k).mat * v - qgf::apply(j, qgf::apply(k, v))).norm() < 1e-13);
  Operator x{TensorLayout{3}, rng.random_matrix(3)};
  REQUIRE((conjugate_by(j, x).mat * v - qgf::apply(j, x.mat * qgf::apply(j, v))).norm() < 1e-12);
  REQUIRE((sandwich(j, x, k).mat * v - qgf::apply(j, x.mat * qgf::apply(k, v))).norm() < 1e-12);

  Antilinear jk = antilinear_tensor(j, k);
  Vector w = rng.random_vector(9);
  REQUIRE((qgf::apply(jk, w) - kron(j.mat, k.mat) * w.conjugate()).norm() < 1e-13);
}
