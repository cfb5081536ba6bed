#ifndef NBHO_ANALYTIC_HPP
#define NBHO_ANALYTIC_HPP

#include <optional>
#include <vector>

#include "nbho/model.hpp"

namespace nbho {

// Outcome of probing the system for the coupling/mass relations under
// which J is diagonal and the spectrum has a closed form.
struct AnalyticCondition {
  // Present iff k_i = rho * m_i for every particle (all-zero k gives 0).
  std::optional<double> one_body_rho;
  // Present iff g_ij = g_1j * m_i / m_1 for all 2 <= i < j <= N; holds the
  // first row g_1j, j = 2..N.
  std::optional<std::vector<double>> two_body_row;
  // Present iff additionally g_ij = beta * m_i * m_j for every pair.
  std::optional<double> product_beta;
  double tolerance = 0.0;

  // Every nonzero coupling is covered, so the closed forms apply.
  bool closed_form_applies(const ParticleSystem& system) const {
    const bool k_ok = one_body_rho.has_value() || !system.has_one_body();
    const bool g_ok = two_body_row.has_value() || !system.has_two_body();
    return k_ok && g_ok;
  }
};

// Residual-based detection at relative tolerance `tol` (scaled by the
// largest coupling magnitude). Uses the particle labeling as given; no
// relabeling search.
AnalyticCondition detect(const ParticleSystem& system, double tol = 1e-9);

// Mode frequencies in mode order (unsorted), valid only when `cond`
// covers every nonzero coupling of `system`. Throws
// InputError("ConditionNotSatisfied") otherwise, UnstableSystemError if
// a squared frequency comes out non-positive.
std::vector<double> analytic_frequencies(const ParticleSystem& system,
                                         const AnalyticCondition& cond);

// E = sum_i omega_i Q_i with Q_i = n_i + 1/2 (D = 1) or
// 2 n_i + l_i + D/2 (D >= 2).
double analytic_energy(const ParticleSystem& system,
                       const AnalyticCondition& cond,
                       const QuantumState& state);

// Q_i for one mode in dimension D.
double mode_q(const ModeQuanta& q, int dimension);

}  // namespace nbho

#endif
