#include "nbho/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nbho {

bool ParticleSystem::has_one_body() const {
  return std::any_of(one_body_.begin(), one_body_.end(),
                     [](double k) { return k != 0.0; });
}

bool ParticleSystem::has_two_body() const {
  return std::any_of(g_.begin(), g_.end(), [](double g) { return g != 0.0; });
}

std::vector<TwoBodyEntry> ParticleSystem::two_body_entries() const {
  const int n = static_cast<int>(masses_.size());
  std::vector<TwoBodyEntry> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i - 1) * n + (j - 1);
      if (g_set_[idx]) out.push_back({i, j, g_[idx]});
    }
  return out;
}

ParticleSystem validate_system(const SystemInput& input) {
  if (input.dimension < 1)
    throw InputError("BadDimension",
                     "dimension must be >= 1, got " +
                         std::to_string(input.dimension));
  const std::size_t n = input.masses.size();
  if (n < 2)
    throw InputError("TooFewParticles",
                     "need at least 2 particles, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!(input.masses[i] > 0.0))
      throw InputError("NonPositiveMass",
                       "mass " + std::to_string(i + 1) + " is " +
                           std::to_string(input.masses[i]));
  if (!input.one_body.empty() && input.one_body.size() != n)
    throw InputError("OneBodySizeMismatch",
                     "one_body has " + std::to_string(input.one_body.size()) +
                         " entries for " + std::to_string(n) + " particles");

  ParticleSystem sys;
  sys.dimension_ = input.dimension;
  sys.masses_ = input.masses;
  sys.one_body_ =
      input.one_body.empty() ? std::vector<double>(n, 0.0) : input.one_body;
  sys.g_.assign(n * n, 0.0);
  sys.g_set_.assign(n * n, false);
  for (const TwoBodyEntry& e : input.two_body) {
    if (e.i < 1 || e.j < 1 || e.i >= e.j || e.j > static_cast<int>(n))
      throw InputError("DuplicateOrOutOfRangeCoupling",
                       "pair (" + std::to_string(e.i) + ", " +
                           std::to_string(e.j) + ") violates 1 <= i < j <= N");
    const std::size_t idx = static_cast<std::size_t>(e.i - 1) * n + (e.j - 1);
    if (sys.g_set_[idx])
      throw InputError("DuplicateOrOutOfRangeCoupling",
                       "pair (" + std::to_string(e.i) + ", " +
                           std::to_string(e.j) + ") given twice");
    sys.g_[idx] = e.g;
    sys.g_set_[idx] = true;
  }
  sys.mass_scale_ = input.mass_scale.value_or(input.masses[0]);
  if (!(sys.mass_scale_ > 0.0))
    throw InputError("NonPositiveMassScale",
                     "mass_scale is " + std::to_string(sys.mass_scale_));
  sys.total_mass_ =
      std::accumulate(input.masses.begin(), input.masses.end(), 0.0);
  return sys;
}

std::vector<double> alpha(const ParticleSystem& system) {
  std::vector<double> a(system.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = system.masses()[i] / system.mass_scale();
  return a;
}

std::vector<double> alpha_prefix(const std::vector<double>& alpha_values) {
  std::vector<double> p(alpha_values.size() + 1, 0.0);
  for (std::size_t i = 0; i < alpha_values.size(); ++i)
    p[i + 1] = p[i] + alpha_values[i];
  return p;
}

void validate_state(const QuantumState& state, const ParticleSystem& system) {
  if (state.modes.size() != system.size() - 1)
    throw InputError("DimensionMismatch",
                     "state has " + std::to_string(state.modes.size()) +
                         " modes, system has " +
                         std::to_string(system.size() - 1));
  for (const ModeQuanta& q : state.modes)
    if (q.n < 0 || q.l < 0)
      throw InputError("DimensionMismatch",
                       "quantum numbers must be non-negative");
}

}  // namespace nbho
