#ifndef NBHO_ORACLE_HPP
#define NBHO_ORACLE_HPP

#include <vector>

#include "nbho/eigensolver.hpp"
#include "nbho/matrix.hpp"
#include "nbho/model.hpp"

namespace nbho {

// Verification path that never touches the order-(N-1) closed forms: it
// works in the full N-coordinate picture and discards the center-of-mass
// zero mode.
struct NormalModeReport {
  std::vector<double> omega_oracle;  // ascending, N-1 entries
  int zero_modes = 0;                // expected exactly 1
  double max_relative_deviation = 0.0;
};

// Hessian of the potential for one Cartesian component (isotropy makes one
// component sufficient), assembled from the analytic gradient of
// V = sum_i k_i (x_i - X)^2 + sum_{i<j} g_ij (x_i - x_j)^2.
Matrix oracle_hessian(const ParticleSystem& system);

// The potential itself, for finite-difference checks of the Hessian.
double oracle_potential(const ParticleSystem& system,
                        const std::vector<double>& x);

// Mass-weighted eigenproblem: omega_i = sqrt(lambda_i) for the N-1
// positive eigenvalues of M^{-1/2} H M^{-1/2}. Throws
// WrongZeroModeCountError or UnstableSystemError.
NormalModeReport normal_modes(const ParticleSystem& system);

// Compares the oracle frequencies against a reference spectrum (sorted
// lists, max relative deviation). Throws MismatchError above `tol`.
NormalModeReport cross_check(const ParticleSystem& system,
                             const Spectrum& reference, double tol = 1e-9);

}  // namespace nbho

#endif
