#ifndef NBHO_LEVELS_HPP
#define NBHO_LEVELS_HPP

#include <cstdint>
#include <vector>

#include "nbho/eigensolver.hpp"
#include "nbho/model.hpp"

namespace nbho {

// One energy level of the internal motion. `quanta` holds per-mode total
// quanta (2n_i + l_i for D >= 2, n_i for D = 1) of one representative
// state; `degeneracy` counts all states merged into this level.
struct EnergyLevel {
  double energy = 0.0;
  std::vector<int> quanta;
  std::uint64_t degeneracy = 1;
};

// E = sum_i omega_i Q_i for an explicit (n, l) assignment.
double energy(const Spectrum& spec, const QuantumState& state, int dimension);

// Number of D-dimensional oscillator states with total quanta q:
// C(q + D - 1, D - 1).
std::uint64_t oscillator_degeneracy(int quanta, int dimension);

// All levels with energy <= e_max, sorted ascending. Energies coinciding
// within 1e-10 * (1 + |E|) merge with degeneracies summed. Throws
// InputError("CutoffTooLow") if e_max is below the ground state.
std::vector<EnergyLevel> enumerate_levels(const Spectrum& spec, int dimension,
                                          double e_max);

}  // namespace nbho

#endif
