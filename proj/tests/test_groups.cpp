#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "qgf/group.hpp"
#include "qgf/io.hpp"

using namespace qgf;

TEST_CASE("group table validation") {
  REQUIRE_THROWS_AS(make_group("bad", {{1, 0}, {0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_group("bad", {{0, 1}, {1, 1}}), std::invalid_argument);
  // A Latin square with identity that is not associative.
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  REQUIRE_THROWS_AS(make_group("loop", loop), std::invalid_argument);
  FiniteGroup z2 = make_group("Z2", {{0, 1}, {1, 0}});
  REQUIRE(z2.inverse(1) == 1);
}

TEST_CASE("builtin groups") {
  REQUIRE(cyclic(6).abelian());
  REQUIRE(group_product(cyclic(2), cyclic(3)).order == 6);
  REQUIRE(group_product(cyclic(2), cyclic(3)).abelian());

  FiniteGroup s3 = symmetric3();
  REQUIRE(s3.order == 6);
  REQUIRE_FALSE(s3.abelian());

  FiniteGroup d4 = dihedral(4);
  REQUIRE(d4.order == 8);
  REQUIRE_FALSE(d4.abelian());

  FiniteGroup q8 = quaternion8();
  REQUIRE(q8.order == 8);
  REQUIRE_FALSE(q8.abelian());
  // -1 is central of order 2; i, j, k have order 4.
  auto orders = element_orders(q8);
  REQUIRE(orders[4] == 2);
  REQUIRE(std::count(orders.begin(), orders.end(), 4) == 6);

  // S3 and Z6 have the same order but different element order profiles.
  auto s3o = element_orders(s3);
  auto z6o = element_orders(cyclic(6));
  std::sort(s3o.begin(), s3o.end());
  std::sort(z6o.begin(), z6o.end());
  REQUIRE(s3o != z6o);
  // Z2 x Z3 is Z6.
  auto z23o = element_orders(group_product(cyclic(2), cyclic(3)));
  std::sort(z23o.begin(), z23o.end());
  REQUIRE(z23o == z6o);
}

TEST_CASE("regular representation is a unitary homomorphism") {
  FiniteGroup g = dihedral(3);
  for (int p = 0; p < g.order; ++p) {
    REQUIRE(is_unitary(regular_rep(g, p)));
    for (int q = 0; q < g.order; ++q)
      REQUIRE(distance(regular_rep(g, p) * regular_rep(g, q),
                       regular_rep(g, g.mul(p, q))) < 1e-14);
  }
  Vector f = Vector::Zero(g.order);
  f(2) = 3.0;
  REQUIRE(distance(lambda_of(g, f), complex(3.0) * regular_rep(g, 2)) < 1e-14);
}

TEST_CASE("structure report for S3") {
  StructureReport s = structure_report(symmetric3());
  REQUIRE(s.order == 6);
  REQUIRE_FALSE(s.abelian);
  REQUIRE(s.pentagon < 1e-12);
  REQUIRE(s.dim_m == 6);
  REQUIRE(s.dim_mhat == 6);
  REQUIRE(s.m_commutative);
  REQUIRE_FALSE(s.mhat_commutative);
  REQUIRE(s.trim_dim == 36);
  REQUIRE(std::abs(std::abs(s.k) - 1.0) < 1e-12);
  REQUIRE(s.k_defect < 1e-10);
  REQUIRE(std::abs(s.lambda - complex(1.0)) < 1e-12);
  REQUIRE(s.pairing_table_residual < 1e-12);
}

TEST_CASE("fourier transform conjugates the dual unitary to the dual group's") {
  REQUIRE(fourier_check({2}) < 1e-12);
  REQUIRE(fourier_check({3}) < 1e-12);
  REQUIRE(fourier_check({4}) < 1e-12);
  REQUIRE(fourier_check({2, 3}) < 1e-12);
}

TEST_CASE("semidirect products") {
  FiniteGroup z3 = cyclic(3), z2 = cyclic(2);
  auto alpha = inversion_action(z3, z2);
  FiniteGroup sd = semidirect(z3, z2, alpha);
  REQUIRE(sd.order == 6);
  REQUIRE_FALSE(sd.abelian());
  auto sdo = element_orders(sd);
  auto s3o = element_orders(symmetric3());
  std::sort(sdo.begin(), sdo.end());
  std::sort(s3o.begin(), s3o.end());
  REQUIRE(sdo == s3o);

  // Trivial action gives the direct product.
  Automorphism id = {0, 1, 2};
  FiniteGroup direct = semidirect(z3, z2, {id, id});
  REQUIRE(direct.cayley == group_product(z3, z2).cayley);

  // Inversion on Z4 by Z2 is D4.
  auto d4o = element_orders(dihedral(4));
  auto sd2o = element_orders(semidirect(cyclic(4), z2, inversion_action(cyclic(4), z2)));
  std::sort(d4o.begin(), d4o.end());
  std::sort(sd2o.begin(), sd2o.end());
  REQUIRE(d4o == sd2o);

  REQUIRE_THROWS_AS(semidirect(z3, z2, {id, {1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("group files parse into validated groups") {
  FiniteGroup s3 = group_from_file(std::string(QGF_DATA_DIR) + "/groups/s3.json");
  REQUIRE(s3.order == 6);
  REQUIRE_FALSE(s3.abelian());
  REQUIRE(s3.cayley == symmetric3().cayley);

  FiniteGroup q8 = group_from_file(std::string(QGF_DATA_DIR) + "/groups/q8.json");
  REQUIRE(q8.cayley == quaternion8().cayley);
  REQUIRE(q8.labels[4] == "-1");

  FiniteGroup z23 = group_from_file(std::string(QGF_DATA_DIR) + "/groups/z2xz3.json");
  REQUIRE(z23.cayley == group_product(cyclic(2), cyclic(3)).cayley);

  REQUIRE_THROWS_AS(group_from_json(nlohmann::json::parse("{\"cayley\": [[0,1],[1,1]]}")),
                    ParseError);
  REQUIRE_THROWS_AS(group_from_json(nlohmann::json::parse("{\"order\": 2}")), ParseError);
}
