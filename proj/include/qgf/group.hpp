#ifndef QGF_GROUP_HPP
#define QGF_GROUP_HPP

#include <string>

#include "qgf/frame.hpp"

namespace qgf {

// Finite group as a Cayley table: cayley[p][q] is the index of p * q, with
// the identity at index 0.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> cayley;
  std::vector<int> inv;

  int mul(int p, int q) const { return cayley[p][q]; }
  int inverse(int p) const { return inv[p]; }

  bool abelian() const {
    for (int p = 0; p < order; ++p)
      for (int q = p + 1; q < order; ++q)
        if (mul(p, q) != mul(q, p)) return false;
    return true;
  }
};

inline FiniteGroup make_group(std::string name, std::vector<std::vector<int>> cayley,
                              std::vector<std::string> labels = {}) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = static_cast<int>(cayley.size());
  g.cayley = std::move(cayley);
  const int n = g.order;
  if (n == 0) throw std::invalid_argument("group: empty table");
  for (const auto& row : g.cayley)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: table is not square");
  for (const auto& row : g.cayley)
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: entry out of range");
  for (int p = 0; p < n; ++p)
    if (g.mul(0, p) != p || g.mul(p, 0) != p)
      throw std::invalid_argument("group: index 0 is not the identity");
  // Latin square (cancellation).
  for (int p = 0; p < n; ++p) {
    std::vector<int> seen_r(n, 0), seen_c(n, 0);
    for (int q = 0; q < n; ++q) {
      if (seen_r[g.mul(p, q)]++) throw std::invalid_argument("group: row is not a bijection");
      if (seen_c[g.mul(q, p)]++) throw std::invalid_argument("group: column is not a bijection");
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        if (g.mul(g.mul(p, q), r) != g.mul(p, g.mul(q, r)))
          throw std::invalid_argument("group: multiplication is not associative");
  g.inv.assign(n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (g.mul(p, q) == 0) g.inv[p] = q;
  for (int p = 0; p < n; ++p)
    if (g.inv[p] < 0) throw std::invalid_argument("group: missing inverse");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("group: label count mismatch");
  g.labels = std::move(labels);
  return g;
}

inline FiniteGroup cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) t[p][q] = (p + q) % n;
  return make_group("Z" + std::to_string(n), std::move(t));
}

// Direct product; element (a, b) has index a * |g2| + b.
inline FiniteGroup group_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order, n2 = g2.order;
  std::vector<std::vector<int>> t(n1 * n2, std::vector<int>(n1 * n2));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n1; ++c)
        for (int d = 0; d < n2; ++d)
          t[a * n2 + b][c * n2 + d] = g1.mul(a, c) * n2 + g2.mul(b, d);
  return make_group(g1.name + "x" + g2.name, std::move(t));
}

namespace detail {
inline FiniteGroup permutation_group(std::string name,
                                     const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("permutation_group: product not in list");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(perms[a].size());
      for (size_t x = 0; x < comp.size(); ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = find(comp);
    }
  return make_group(std::move(name), std::move(t));
}
}  // namespace detail

inline FiniteGroup symmetric3() {
  // All permutations of {0,1,2} in lexicographic order; identity first.
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  FiniteGroup g = detail::permutation_group("S3", perms);
  return g;
}

// Dihedral group of order 2n: rotations k -> k + i, then reflections
// k -> -k - i, acting on the vertices of an n-gon.
inline FiniteGroup dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be positive");
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = (k + i) % n;
    perms.push_back(p);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = ((-k - i) % n + n) % n;
    perms.push_back(p);
  }
  FiniteGroup g = detail::permutation_group("D" + std::to_string(n), perms);
  return g;
}

// Quaternion group {1, i, j, k, -1, -i, -j, -k} with that index order.
inline FiniteGroup quaternion8() {
  auto mul = [](int a, int b) {
    int sa = a / 4, sb = b / 4, ua = a % 4, ub = b % 4;
    // Unit part: 0 = 1, 1 = i, 2 = j, 3 = k.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int s = (sa + sb + sign[ua][ub]) % 2;
    return s * 4 + unit[ua][ub];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return make_group("Q8", std::move(t),
                    {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

inline std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> out(g.order);
  for (int p = 0; p < g.order; ++p) {
    int x = p, k = 1;
    while (x != 0) {
      x = g.mul(x, p);
      ++k;
    }
    out[p] = k;
  }
  return out;
}

// Left regular representation: lambda_p e_q = e_{p q}.
inline Operator regular_rep(const FiniteGroup& g, int p) {
  const int n = g.order;
  Matrix m = Matrix::Zero(n, n);
  for (int q = 0; q < n; ++q) m(g.mul(p, q), q) = 1.0;
  return {TensorLayout{n}, std::move(m)};
}

inline Operator lambda_of(const FiniteGroup& g, const Vector& f) {
  const int n = g.order;
  Matrix m = Matrix::Zero(n, n);
  for (int p = 0; p < n; ++p) m += f(p) * regular_rep(g, p).mat;
  return {TensorLayout{n}, std::move(m)};
}

// W e_{(a,b)} = e_{(a, a b)} on l2(G) ⊗ l2(G).
inline Operator group_unitary_op(const FiniteGroup& g) {
  const int n = g.order;
  TensorLayout l{n, n};
  Matrix m = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a * n + g.mul(a, b), a * n + b) = 1.0;
  return {l, std::move(m)};
}

inline MultiplicativeUnitary group_unitary(const FiniteGroup& g, double tol = 1e-10) {
  return MultiplicativeUnitary(group_unitary_op(g), tol);
}

// Antilinear xi -> conj(xi composed with inversion).
inline Antilinear inversion_conjugation(const FiniteGroup& g) {
  const int n = g.order;
  Matrix m = Matrix::Zero(n, n);
  for (int p = 0; p < n; ++p) m(g.inverse(p), p) = 1.0;
  return {TensorLayout{n}, std::move(m)};
}

// The frame of the function algebra: M is the diagonal (pointwise
// multiplication) algebra, Mhat the group von Neumann algebra.
inline Frame group_frame(const FiniteGroup& g, double tol = 1e-10) {
  return Frame(group_unitary(g, tol), conjugation(TensorLayout{g.order}),
               inversion_conjugation(g));
}

// The dual frame: roles of the two algebras are exchanged and W is replaced
// by Sigma W* Sigma.
inline Frame dual_group_frame(const FiniteGroup& g, double tol = 1e-10) {
  return Frame(MultiplicativeUnitary(dual_unitary_op(group_unitary_op(g)), tol),
               inversion_conjugation(g), conjugation(TensorLayout{g.order}));
}

inline Matrix fourier_matrix(const std::vector<int>& factors) {
  Matrix f = Matrix::Identity(1, 1);
  for (int m : factors) {
    Matrix fm(m, m);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        fm(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(m)),
                              -2.0 * std::numbers::pi * j * k / m);
    f = kron(f, fm);
  }
  return f;
}

// For a product of cyclic groups the Fourier transform carries the dual
// unitary back to the unitary of the (isomorphic) dual group:
// (F ⊗ F) What (F ⊗ F)* = W.
inline double fourier_check(const std::vector<int>& factors) {
  FiniteGroup g = cyclic(factors.empty() ? 1 : factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) g = group_product(g, cyclic(factors[i]));
  Operator w = group_unitary_op(g);
  Operator what = dual_unitary_op(w);
  Matrix f = fourier_matrix(factors);
  Matrix ff = kron(f, f);
  return frobenius(ff * what.mat * ff.adjoint() - w.mat);
}

// Group automorphism as an index permutation.
using Automorphism = std::vector<int>;

inline void check_action(const FiniteGroup& h, const FiniteGroup& g,
                         const std::vector<Automorphism>& alpha) {
  if (static_cast<int>(alpha.size()) != g.order)
    throw std::invalid_argument("semidirect: one automorphism per group element required");
  for (int p = 0; p < g.order; ++p) {
    const auto& a = alpha[p];
    if (static_cast<int>(a.size()) != h.order)
      throw std::invalid_argument("semidirect: automorphism size mismatch");
    std::vector<int> seen(h.order, 0);
    for (int x : a)
      if (x < 0 || x >= h.order || seen[x]++)
        throw std::invalid_argument("semidirect: not a permutation");
    for (int x = 0; x < h.order; ++x)
      for (int y = 0; y < h.order; ++y)
        if (a[h.mul(x, y)] != h.mul(a[x], a[y]))
          throw std::invalid_argument("semidirect: not an automorphism");
  }
  for (int x = 0; x < h.order; ++x)
    if (alpha[0][x] != x) throw std::invalid_argument("semidirect: alpha at identity is not trivial");
  for (int p = 0; p < g.order; ++p)
    for (int q = 0; q < g.order; ++q)
      for (int x = 0; x < h.order; ++x)
        if (alpha[g.mul(p, q)][x] != alpha[p][alpha[q][x]])
          throw std::invalid_argument("semidirect: alpha is not a homomorphism");
}

// Semidirect product H x| G for alpha: G -> Aut(H). Element (a, b) has index
// a * |G| + b and (a1, b1)(a2, b2) = (a1 alpha_{b1}(a2), b1 b2).
inline FiniteGroup semidirect(const FiniteGroup& h, const FiniteGroup& g,
                              const std::vector<Automorphism>& alpha) {
  check_action(h, g, alpha);
  const int nh = h.order, ng = g.order;
  std::vector<std::vector<int>> t(nh * ng, std::vector<int>(nh * ng));
  for (int a1 = 0; a1 < nh; ++a1)
    for (int b1 = 0; b1 < ng; ++b1)
      for (int a2 = 0; a2 < nh; ++a2)
        for (int b2 = 0; b2 < ng; ++b2)
          t[a1 * ng + b1][a2 * ng + b2] =
              h.mul(a1, alpha[b1][a2]) * ng + g.mul(b1, b2);
  return make_group(h.name + "x|" + g.name, std::move(t));
}

// alpha_p = inversion for odd powers of the generator; valid for cyclic G
// acting on an abelian H.
inline std::vector<Automorphism> inversion_action(const FiniteGroup& h,
                                                  const FiniteGroup& g) {
  if (!h.abelian())
    throw std::invalid_argument("inversion_action: H must be abelian");
  std::vector<Automorphism> alpha(g.order, Automorphism(h.order));
  std::vector<int> orders = element_orders(g);
  // Works when G is cyclic of even order (or trivial): generator -> inversion.
  std::vector<int> id(h.order), invp(h.order);
  for (int x = 0; x < h.order; ++x) {
    id[x] = x;
    invp[x] = h.inverse(x);
  }
  for (int p = 0; p < g.order; ++p) alpha[p] = (p % 2 == 0) ? id : invp;
  check_action(h, g, alpha);
  return alpha;
}

struct StructureReport {
  std::string name;
  int order = 0;
  bool abelian = false;
  double pentagon = 0.0;
  int dim_m = 0, dim_mhat = 0, trim_dim = 0;
  bool m_commutative = false, mhat_commutative = false;
  complex k = 0.0;
  double k_defect = 0.0;
  complex lambda = 0.0;
  double lambda_defect = 0.0;
  double pairing_table_residual = 0.0;
};

// Point mass at r on the function side, realized as a slice functional.
inline Functional point_mass_functional(const FiniteGroup& g, int r) {
  Matrix rho = Matrix::Zero(g.order, g.order);
  rho(0, r) = 1.0;
  return {TensorLayout{g.order}, std::move(rho)};
}

// Point mass at s on the convolution side: density E_ss gives lambda_s.
inline Functional point_mass_functional_hat(const FiniteGroup& g, int s) {
  Matrix rho = Matrix::Zero(g.order, g.order);
  rho(s, s) = 1.0;
  return {TensorLayout{g.order}, std::move(rho)};
}

inline StructureReport structure_report(const FiniteGroup& g, double tol = 1e-10) {
  (void)tol;
  StructureReport out;
  out.name = g.name;
  out.order = g.order;
  out.abelian = g.abelian();
  Frame f = group_frame(g);
  out.pentagon = f.w.pentagon_defect();
  out.dim_m = f.w.M().dim();
  out.dim_mhat = f.w.Mhat().dim();
  out.m_commutative = is_commutative(f.w.M());
  out.mhat_commutative = is_commutative(f.w.Mhat());
  out.trim_dim = trim_check(f.w).product_dim;
  ScalarResult k = irreducibility_scalar(f);
  out.k = k.value;
  out.k_defect = k.defect;
  ScalarResult lam = commutation_scalar(f);
  out.lambda = lam.value;
  out.lambda_defect = lam.defect;
  // Pairing of point masses delta_r (function side) with delta_s
  // (convolution side) is [r == s] under counting measure.
  double worst = 0.0;
  for (int s = 0; s < g.order; ++s)
    for (int r = 0; r < g.order; ++r) {
      complex v = pairing(point_mass_functional_hat(g, s), point_mass_functional(g, r),
                          f.w);
      worst = std::max(worst, std::abs(v - complex(r == s ? 1.0 : 0.0)));
    }
  out.pairing_table_residual = worst;
  return out;
}

}  // namespace qgf

#endif
