#include "nbho/jmatrix.hpp"

#include <cmath>

namespace nbho {

namespace {

// Partial sums of the one-body strengths: K[j] = k_1 + ... + k_j.
std::vector<double> k_prefix(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  std::vector<double> K(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) K[i] = K[i - 1] + sys.k(i);
  return K;
}

}  // namespace

Matrix build_F(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  const std::vector<double> al = alpha(sys);
  const std::vector<double> A = alpha_prefix(al);  // A[j] = alpha_1..alpha_j
  const std::vector<double> K = k_prefix(sys);
  const auto a = [&](int i) { return al[static_cast<std::size_t>(i - 1)]; };

  Matrix F(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    F(i - 1, i - 1) =
        (sys.k(i + 1) * A[i] * A[i] + K[i] * a(i + 1) * a(i + 1)) /
        (A[i] * A[i + 1] * a(i + 1));
    for (int j = 1; j < i; ++j) {
      const double gamma = std::sqrt(A[j + 1] * A[i] * a(i + 1) /
                                     (A[i + 1] * A[j] * a(j + 1)));
      const double v = gamma * (K[j] * a(j + 1) - sys.k(j + 1) * A[j]) /
                       (A[j + 1] * A[i]);
      F(i - 1, j - 1) = v;
      F(j - 1, i - 1) = v;
    }
  }
  return F;
}

Matrix build_G(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  const std::vector<double> al = alpha(sys);
  const std::vector<double> A = alpha_prefix(al);
  const auto a = [&](int i) { return al[static_cast<std::size_t>(i - 1)]; };

  // Prefix tables over the symmetrized couplings, ascending index order.
  //   C[l][m] = sum_{p<=l} sum_{q<=m} g(p,q)
  //   R[r][c] = sum_{q<=c} g(r,q)
  std::vector<std::vector<double>> C(n + 1, std::vector<double>(n + 1, 0.0));
  std::vector<std::vector<double>> R(n + 1, std::vector<double>(n + 1, 0.0));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      R[r][c] = R[r][c - 1] + sys.g(r, c);
      C[r][c] = C[r - 1][c] + C[r][c - 1] - C[r - 1][c - 1] + sys.g(r, c);
    }

  Matrix G(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    // Each term is a block sum over the pair couplings; an empty index
    // range contributes exactly zero.
    const double s_above = C[i][n] - C[i][i];          // l<=i, m in i+1..N
    const double s_above1 = C[i + 1][n] - C[i + 1][i + 1];
    const double s_col = R[i + 1][i];                  // l<=i paired with i+1
    const double s_row = R[i + 1][n] - R[i + 1][i];    // i+1 paired with l>i
    G(i - 1, i - 1) = s_above / A[i] - s_above1 / A[i + 1] +
                      (s_col + s_row) / a(i + 1);
    for (int j = 1; j < i; ++j) {
      const double gamma = std::sqrt(1.0 / A[j] + 1.0 / a(j + 1)) *
                           std::sqrt(1.0 / A[i] + 1.0 / a(i + 1)) /
                           (A[i + 1] * A[j + 1]);
      const double t1 = R[i + 1][j];                   // l<=j with i+1
      const double t2 = R[j + 1][n] - R[j + 1][i + 1]; // j+1 with l>=i+2
      const double t3 = C[j][n] - C[j][i];             // l<=j, m>=i+1
      const double t4 = sys.g(j + 1, i + 1);
      const double v = gamma * (a(j + 1) * A[i] * t1 - a(i + 1) * A[j] * t2 +
                                a(i + 1) * a(j + 1) * t3 -
                                A[i + 1] * A[j] * t4);
      G(i - 1, j - 1) = v;
      G(j - 1, i - 1) = v;
    }
  }
  return G;
}

JMatrix build_J(const ParticleSystem& sys) {
  JMatrix jm;
  jm.n_modes = sys.size() - 1;
  jm.F = build_F(sys);
  jm.G = build_G(sys);
  jm.J = jm.F + jm.G;
  return jm;
}

}  // namespace nbho
