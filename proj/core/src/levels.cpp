#include "nbho/levels.hpp"

#include <algorithm>
#include <cmath>

#include "nbho/analytic.hpp"
#include "nbho/errors.hpp"

namespace nbho {

double energy(const Spectrum& spec, const QuantumState& state, int dimension) {
  if (state.modes.size() != spec.omega.size())
    throw InputError("DimensionMismatch",
                     "state has " + std::to_string(state.modes.size()) +
                         " modes, spectrum has " +
                         std::to_string(spec.omega.size()));
  double e = 0.0;
  for (std::size_t i = 0; i < spec.omega.size(); ++i)
    e += spec.omega[i] * mode_q(state.modes[i], dimension);
  return e;
}

std::uint64_t oscillator_degeneracy(int quanta, int dimension) {
  if (dimension == 1) return 1;
  // C(quanta + dimension - 1, dimension - 1)
  std::uint64_t r = 1;
  for (int t = 1; t <= dimension - 1; ++t)
    r = r * static_cast<std::uint64_t>(quanta + t) / t;
  return r;
}

std::vector<EnergyLevel> enumerate_levels(const Spectrum& spec, int dimension,
                                          double e_max) {
  const std::size_t n_modes = spec.omega.size();
  const double q0 = dimension == 1 ? 0.5 : 0.5 * dimension;
  double ground = 0.0;
  for (double w : spec.omega) ground += w * q0;
  if (e_max < ground)
    throw InputError("CutoffTooLow",
                     "e_max = " + std::to_string(e_max) +
                         " is below the ground state " + std::to_string(ground));

  // Depth-first walk over per-mode total quanta.
  std::vector<EnergyLevel> states;
  std::vector<int> quanta(n_modes, 0);
  const auto walk = [&](const auto& self, std::size_t mode, double e) -> void {
    if (mode == n_modes) {
      std::uint64_t deg = 1;
      for (int q : quanta) deg *= oscillator_degeneracy(q, dimension);
      states.push_back({e, quanta, deg});
      return;
    }
    for (int q = 0;; ++q) {
      const double en = e + q * spec.omega[mode];
      if (en > e_max) break;
      quanta[mode] = q;
      self(self, mode + 1, en);
    }
    quanta[mode] = 0;
  };
  walk(walk, 0, ground);

  std::sort(states.begin(), states.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return a.quanta < b.quanta;
            });

  std::vector<EnergyLevel> levels;
  for (EnergyLevel& s : states) {
    if (!levels.empty() &&
        std::abs(s.energy - levels.back().energy) <=
            1e-10 * (1.0 + std::abs(s.energy))) {
      levels.back().degeneracy += s.degeneracy;
    } else {
      levels.push_back(std::move(s));
    }
  }
  return levels;
}

}  // namespace nbho
