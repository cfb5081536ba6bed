#include "nbho/analytic.hpp"

#include <cmath>

#include "nbho/errors.hpp"

namespace nbho {

namespace {

double max_abs_k(const ParticleSystem& sys) {
  double mx = 0.0;
  for (double k : sys.one_body()) mx = std::max(mx, std::abs(k));
  return mx;
}

double max_abs_g(const ParticleSystem& sys) {
  const int n = static_cast<int>(sys.size());
  double mx = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) mx = std::max(mx, std::abs(sys.g(i, j)));
  return mx;
}

bool one_body_matches(const ParticleSystem& sys, double rho, double tol) {
  const double scale = max_abs_k(sys);
  const int n = static_cast<int>(sys.size());
  for (int i = 1; i <= n; ++i)
    if (std::abs(sys.k(i) - rho * sys.mass(i)) > tol * scale) return false;
  return true;
}

bool row_matches(const ParticleSystem& sys, const std::vector<double>& row,
                 double tol) {
  const int n = static_cast<int>(sys.size());
  const double a1 = sys.mass(1);
  const double scale = max_abs_g(sys);
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double g1j = row[static_cast<std::size_t>(j - 2)];
      if (std::abs(sys.g(i, j) * a1 - g1j * sys.mass(i)) > tol * a1 * scale)
        return false;
    }
  return true;
}

bool product_matches(const ParticleSystem& sys, double beta, double tol) {
  const int n = static_cast<int>(sys.size());
  const double scale = max_abs_g(sys);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::abs(sys.g(i, j) - beta * sys.mass(i) * sys.mass(j)) >
          tol * scale)
        return false;
  return true;
}

}  // namespace

AnalyticCondition detect(const ParticleSystem& sys, double tol) {
  AnalyticCondition cond;
  cond.tolerance = tol;

  const double rho = sys.k(1) / sys.mass(1);
  if (one_body_matches(sys, rho, tol)) cond.one_body_rho = rho;

  const int n = static_cast<int>(sys.size());
  std::vector<double> row(static_cast<std::size_t>(n - 1));
  for (int j = 2; j <= n; ++j)
    row[static_cast<std::size_t>(j - 2)] = sys.g(1, j);
  if (row_matches(sys, row, tol)) {
    cond.two_body_row = row;
    const double beta = sys.g(1, 2) / (sys.mass(1) * sys.mass(2));
    if (product_matches(sys, beta, tol)) cond.product_beta = beta;
  }
  return cond;
}

std::vector<double> analytic_frequencies(const ParticleSystem& sys,
                                         const AnalyticCondition& cond) {
  const double tol = cond.tolerance;
  if (sys.has_one_body()) {
    if (!cond.one_body_rho || !one_body_matches(sys, *cond.one_body_rho, tol))
      throw InputError("ConditionNotSatisfied",
                       "one-body strengths are not proportional to the masses");
  }
  if (sys.has_two_body()) {
    if (!cond.two_body_row || !row_matches(sys, *cond.two_body_row, tol))
      throw InputError("ConditionNotSatisfied",
                       "pair couplings do not follow the first-row pattern");
  }

  const int n = static_cast<int>(sys.size());
  const std::vector<double> al = alpha(sys);
  const std::vector<double> A = alpha_prefix(al);
  const auto a = [&](int i) { return al[static_cast<std::size_t>(i - 1)]; };
  const double rho = cond.one_body_rho.value_or(0.0);
  const double m = sys.mass_scale();

  std::vector<double> omega(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    double bracket = 0.0;
    if (cond.two_body_row) {
      const std::vector<double>& row = *cond.two_body_row;
      double tail = 0.0;  // g_1j for j = i+2 .. N
      for (int j = i + 2; j <= n; ++j)
        tail += row[static_cast<std::size_t>(j - 2)];
      bracket = tail * a(i + 1) +
                row[static_cast<std::size_t>(i - 1)] * A[i + 1];
    }
    const double w2 = 2.0 * (rho + bracket / (m * a(1) * a(i + 1)));
    if (!(w2 > 0.0))
      throw UnstableSystemError(i, 0.5 * m * w2);
    omega[static_cast<std::size_t>(i - 1)] = std::sqrt(w2);
  }
  return omega;
}

double mode_q(const ModeQuanta& q, int dimension) {
  if (dimension == 1) return q.n + 0.5;
  return 2.0 * q.n + q.l + 0.5 * dimension;
}

double analytic_energy(const ParticleSystem& sys, const AnalyticCondition& cond,
                       const QuantumState& state) {
  validate_state(state, sys);
  const std::vector<double> omega = analytic_frequencies(sys, cond);
  double e = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i)
    e += omega[i] * mode_q(state.modes[i], sys.dimension());
  return e;
}

}  // namespace nbho
