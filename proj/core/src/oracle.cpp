#include "nbho/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "nbho/errors.hpp"

namespace nbho {

double oracle_potential(const ParticleSystem& sys,
                        const std::vector<double>& x) {
  const int n = static_cast<int>(sys.size());
  double com = 0.0;
  for (int i = 1; i <= n; ++i)
    com += sys.mass(i) * x[static_cast<std::size_t>(i - 1)];
  com /= sys.total_mass();

  double v = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double r = x[static_cast<std::size_t>(i - 1)] - com;
    v += sys.k(i) * r * r;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double r =
          x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)];
      v += sys.g(i, j) * r * r;
    }
  return v;
}

Matrix oracle_hessian(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  const double big_m = sys.total_mass();
  Matrix h(static_cast<std::size_t>(n));

  // One-body part: d(x_i - X)/dx_a = delta_ia - m_a/M, so
  // H_ab = 2 sum_i k_i (delta_ia - m_a/M)(delta_ib - m_b/M).
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      double s = 0.0;
      for (int i = 1; i <= n; ++i) {
        const double da = (i == a ? 1.0 : 0.0) - sys.mass(a) / big_m;
        const double db = (i == b ? 1.0 : 0.0) - sys.mass(b) / big_m;
        s += sys.k(i) * da * db;
      }
      h(a - 1, b - 1) += 2.0 * s;
    }

  // Pair part of g_ab (x_a - x_b)^2.
  for (int a = 1; a <= n; ++a) {
    double diag = 0.0;
    for (int c = 1; c <= n; ++c) {
      if (c == a) continue;
      diag += sys.g(a, c);
      h(a - 1, c - 1) += -2.0 * sys.g(a, c);
    }
    h(a - 1, a - 1) += 2.0 * diag;
  }
  return h;
}

NormalModeReport normal_modes(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  const Matrix h = oracle_hessian(sys);

  Eigen::MatrixXd s(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s(a, b) = h(a, b) / std::sqrt(sys.mass(a + 1) * sys.mass(b + 1));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success)
    throw PhysicsError("NoConvergence", "oracle eigensolver failed");

  const double zero_threshold = 1e-10 * std::max(1.0, s.norm());
  NormalModeReport report;
  for (int i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= zero_threshold) {
      ++report.zero_modes;
    } else if (lambda < 0.0) {
      throw UnstableSystemError(i + 1, 0.5 * lambda);
    } else {
      report.omega_oracle.push_back(std::sqrt(lambda));
    }
  }
  if (report.zero_modes != 1)
    throw WrongZeroModeCountError(report.zero_modes);
  std::sort(report.omega_oracle.begin(), report.omega_oracle.end());
  return report;
}

NormalModeReport cross_check(const ParticleSystem& sys,
                             const Spectrum& reference, double tol) {
  NormalModeReport report = normal_modes(sys);
  if (report.omega_oracle.size() != reference.omega.size())
    throw MismatchError(1.0);
  double dev = 0.0;
  for (std::size_t i = 0; i < reference.omega.size(); ++i)
    dev = std::max(dev, std::abs(report.omega_oracle[i] - reference.omega[i]) /
                            reference.omega[i]);
  report.max_relative_deviation = dev;
  if (dev > tol) throw MismatchError(dev);
  return report;
}

}  // namespace nbho
