#ifndef NBHO_MODEL_HPP
#define NBHO_MODEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nbho/errors.hpp"

namespace nbho {

// One pair coupling, 1-based particle indices with i < j.
struct TwoBodyEntry {
  int i = 0;
  int j = 0;
  double g = 0.0;
};

// Untyped system description, as parsed from a file or assembled in code.
// Goes through validate_system() before anything else touches it.
struct SystemInput {
  int dimension = 3;
  std::vector<double> masses;
  std::vector<double> one_body;        // empty means all zero
  std::vector<TwoBodyEntry> two_body;  // absent pairs are zero
  std::optional<double> mass_scale;    // defaults to masses[0]
};

// Validated, immutable N-particle system with harmonic one-body forces
// (strength k_i toward the center of mass) and pair forces (strength g_ij).
// Safe for concurrent reads.
class ParticleSystem {
 public:
  int dimension() const { return dimension_; }
  std::size_t size() const { return masses_.size(); }

  const std::vector<double>& masses() const { return masses_; }
  const std::vector<double>& one_body() const { return one_body_; }
  double mass_scale() const { return mass_scale_; }
  double total_mass() const { return total_mass_; }

  // Pair coupling, 1-based symmetric accessor. Equal or out-of-range
  // indices read as exact zero, so every summation formula stays total.
  double g(int i, int j) const {
    const int n = static_cast<int>(masses_.size());
    if (i < 1 || j < 1 || i > n || j > n || i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return g_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }

  double k(int i) const { return one_body_[static_cast<std::size_t>(i - 1)]; }
  double mass(int i) const { return masses_[static_cast<std::size_t>(i - 1)]; }

  bool has_one_body() const;
  bool has_two_body() const;

  // Sparse view of the stored pair couplings (i < j, nonzero entries only
  // plus any explicitly stored zeros), in ascending (i, j) order.
  std::vector<TwoBodyEntry> two_body_entries() const;

  friend ParticleSystem validate_system(const SystemInput& input);

 private:
  ParticleSystem() = default;

  int dimension_ = 0;
  std::vector<double> masses_;
  std::vector<double> one_body_;
  std::vector<double> g_;  // dense N*N, upper triangle populated
  std::vector<bool> g_set_;
  double mass_scale_ = 0.0;
  double total_mass_ = 0.0;
};

// Checks every structural invariant and fills defaults (absent couplings
// become exact zeros, mass_scale becomes m_1).
// Throws InputError with codes NonPositiveMass, NonPositiveMassScale,
// BadDimension, TooFewParticles, DuplicateOrOutOfRangeCoupling,
// OneBodySizeMismatch.
ParticleSystem validate_system(const SystemInput& input);

// Dimensionless mass ratios alpha_i = m_i / mass_scale, all positive.
std::vector<double> alpha(const ParticleSystem& system);

// Prefix sums: result[j] = alpha_1 + ... + alpha_j for j = 0..N (result[0] = 0).
std::vector<double> alpha_prefix(const std::vector<double>& alpha_values);

// Quantum numbers for the N-1 internal modes. For dimension 1 only n is
// meaningful; for dimension >= 2 the pair (n, l) labels a radial state.
struct ModeQuanta {
  int n = 0;
  int l = 0;
};

struct QuantumState {
  std::vector<ModeQuanta> modes;

  static QuantumState ground(std::size_t n_modes) {
    return QuantumState{std::vector<ModeQuanta>(n_modes)};
  }
};

// Rejects negative quantum numbers or a mode count != N-1.
void validate_state(const QuantumState& state, const ParticleSystem& system);

}  // namespace nbho

#endif
