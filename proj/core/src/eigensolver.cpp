#include "nbho/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nbho/errors.hpp"

namespace nbho {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.order();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenResult eigen_symmetric(Matrix a) {
  const std::size_t n = a.order();
  const double norm = a.frobenius_norm();
  if (a.max_asymmetry() > 1e-10 * std::max(1.0, norm))
    throw PhysicsError("NotSymmetric", "matrix is not symmetric");

  Matrix v = Matrix::identity(n);
  const double target = 1e-14 * norm;
  constexpr int kMaxSweeps = 50;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps)
      throw PhysicsError("NoConvergence",
                         "Jacobi sweeps exceeded " + std::to_string(kMaxSweeps));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenResult res;
  res.values.resize(n);
  res.vectors = Matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    res.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) res.vectors(r, c) = v(r, order[c]);
  }
  return res;
}

Spectrum spectrum_from_j(const JMatrix& jm, const ParticleSystem& system) {
  const EigenResult eig = eigen_symmetric(jm.J);
  Spectrum spec;
  spec.mass_scale = system.mass_scale();
  spec.d = eig.values;
  spec.omega.reserve(spec.d.size());
  for (std::size_t i = 0; i < spec.d.size(); ++i) {
    if (!(spec.d[i] > 0.0))
      throw UnstableSystemError(static_cast<int>(i + 1), spec.d[i]);
    spec.omega.push_back(std::sqrt(2.0 * spec.d[i] / spec.mass_scale));
  }
  return spec;
}

}  // namespace nbho
