#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "qgf/azb.hpp"

using namespace qgf;

TEST_CASE("root of unity and index arithmetic") {
  REQUIRE(std::abs(azb_q(2) - std::polar(1.0, std::numbers::pi / 2.0)) < 1e-15);
  REQUIRE(azb_mod(-1, 4) == 3);
  REQUIRE(azb_mod(9, 4) == 1);
  // Phases reduce exponents mod 2n exactly.
  for (int n = 1; n <= 5; ++n)
    for (int e = -10; e <= 10; ++e)
      REQUIRE(std::abs(azb_phase(n, e) - azb_phase(n, e + 2 * n)) == 0.0);
}

TEST_CASE("the two conjugations on the doubled cyclic space") {
  for (int n = 1; n <= 6; ++n) {
    INFO("n = " << n);
    const int d = 2 * n;
    Antilinear j2 = azb_j2(n);
    Antilinear j2hat = azb_j2hat(n);
    REQUIRE(j2.layout == TensorLayout{d, d});
    REQUIRE(is_selfadjoint(j2));
    REQUIRE(is_involution(j2));
    REQUIRE(is_selfadjoint(j2hat));
    REQUIRE(is_involution(j2hat));
    // The two conjugations commute.
    REQUIRE(frobenius(compose(j2, j2hat).mat - compose(j2hat, j2).mat) < 1e-13);
  }
}

TEST_CASE("entrywise action of the product conjugation") {
  const int n = 3, d = 2 * n;
  Matrix prod = compose(azb_j2(n), azb_j2hat(n)).mat;
  // J2 J2hat (e_k ⊗ e_l) = (-1)^k q^{-k^2/2 - kl} e_k ⊗ e_{-k-l}.
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      complex coeff = azb_j2hat_coefficient(n, k) * azb_phase(n, azb_mod(-k * l, 2 * n));
      int row = k * d + azb_mod(-k - l, d);
      for (int r = 0; r < d * d; ++r) {
        complex expect = (r == row) ? coeff : complex(0.0);
        REQUIRE(std::abs(prod(r, k * d + l) - expect) < 1e-13);
      }
    }
}

TEST_CASE("coefficients do not depend on the integer representative") {
  for (int n = 1; n <= 6; ++n)
    for (int k = -5; k <= 5; ++k) {
      complex a = azb_j2hat_coefficient(n, k);
      complex b = azb_j2hat_coefficient(n, k + 4 * n);
      REQUIRE(a == b);  // bitwise, thanks to exact exponent reduction
    }
}

TEST_CASE("commutation report passes for small sizes") {
  for (int n = 1; n <= 6; ++n) {
    auto checks = azb_commutation_report(n);
    for (const auto& c : checks) {
      INFO("n = " << n << ", check " << c.id);
      REQUIRE(c.pass);
    }
  }
}
