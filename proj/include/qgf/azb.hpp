#ifndef QGF_AZB_HPP
#define QGF_AZB_HPP

#include <numbers>

#include "qgf/antilinear.hpp"
#include "qgf/report.hpp"

namespace qgf {

// Discrete-index model on C^{2n} ⊗ C^{2n} with q = exp(i pi / n). Indices are
// residues mod 2n; exponents only matter mod 4n, which is why the half-square
// phase below is representative independent.

inline complex azb_q(int n) { return std::polar(1.0, std::numbers::pi / n); }

inline int azb_mod(int k, int m) { return ((k % m) + m) % m; }

// q^e with the exponent reduced mod 2n in integer arithmetic, so equal
// residues give bitwise equal phases.
inline complex azb_phase(int n, long long e) {
  return std::polar(1.0, std::numbers::pi * azb_mod(static_cast<int>(e % (2 * n)), 2 * n) / n);
}

// J2 (e_k ⊗ e_l) = q^{k l} e_{-k} ⊗ e_{-l}.
inline Antilinear azb_j2(int n) {
  const int d = 2 * n;
  TensorLayout l{d, d};
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int ell = 0; ell < d; ++ell)
      m(azb_mod(-k, d) * d + azb_mod(-ell, d), k * d + ell) =
          azb_phase(n, static_cast<long long>(k) * ell);
  return {l, std::move(m)};
}

// The coefficient (-1)^k q^{-k^2/2} of J2hat at index k. The exponent
// (2nk - k^2)/(4n) of exp(2 pi i ...) only matters mod 4n; it is reduced in
// integer arithmetic, which makes the value independent of the residue
// representative down to the last bit.
inline complex azb_j2hat_coefficient(int n, long long k) {
  long long m4 = 4LL * n;
  long long e = ((2LL * n * k - k * k) % m4 + m4) % m4;
  return std::polar(1.0, std::numbers::pi * static_cast<double>(e) / (2.0 * n));
}

// J2hat (e_k ⊗ e_l) = (-1)^k q^{-k^2/2} e_{-k} ⊗ e_{k+l}.
inline Antilinear azb_j2hat(int n) {
  const int d = 2 * n;
  TensorLayout l{d, d};
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int ell = 0; ell < d; ++ell)
      m(azb_mod(-k, d) * d + azb_mod(k + ell, d), k * d + ell) =
          azb_j2hat_coefficient(n, k);
  return {l, std::move(m)};
}

inline std::vector<CheckResult> azb_commutation_report(int n, double tol = 1e-12) {
  std::vector<CheckResult> out;
  Antilinear j2 = azb_j2(n);
  Antilinear j2h = azb_j2hat(n);
  const int d2 = j2.dim();
  out.push_back(residual_check("j2-selfadjoint", "J2 = J2*", selfadjoint_defect(j2),
                               tol * d2));
  out.push_back(residual_check("j2-involution", "J2^2 = 1", involution_defect(j2),
                               tol * d2));
  out.push_back(residual_check("j2hat-selfadjoint", "J2hat = J2hat*",
                               selfadjoint_defect(j2h), tol * d2));
  out.push_back(residual_check("j2hat-involution", "J2hat^2 = 1",
                               involution_defect(j2h), tol * d2));
  out.push_back(residual_check("j2-j2hat-commute", "J2 J2hat = J2hat J2",
                               distance(compose(j2, j2h), compose(j2h, j2)), tol * d2));

  // Entrywise form of the commutation: both orders send e_k ⊗ e_l to
  // (-1)^k q^{-k^2/2} q^{-k l} e_k ⊗ e_{-k-l}.
  const int d = 2 * n;
  Matrix expected = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int ell = 0; ell < d; ++ell)
      expected(k * d + azb_mod(-k - ell, d), k * d + ell) =
          azb_j2hat_coefficient(n, k) *
          azb_phase(n, -static_cast<long long>(k) * ell);
  out.push_back(residual_check("entrywise-product", "closed form of J2 J2hat",
                               frobenius(compose(j2, j2h).mat - expected), tol * d2));

  double rep_worst = 0.0;
  for (int k = 0; k < d; ++k)
    rep_worst = std::max(rep_worst,
                         std::abs(azb_j2hat_coefficient(n, k) -
                                  azb_j2hat_coefficient(n, k + 2 * d)));
  out.push_back(residual_check("representative-shift",
                               "phase unchanged under k -> k + 4n", rep_worst, tol));
  return out;
}

}  // namespace qgf

#endif
