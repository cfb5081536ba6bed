#ifndef NBHO_EIGENSOLVER_HPP
#define NBHO_EIGENSOLVER_HPP

#include <vector>

#include "nbho/jmatrix.hpp"
#include "nbho/matrix.hpp"
#include "nbho/model.hpp"

namespace nbho {

struct EigenResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns match values
};

// Cyclic Jacobi rotations for a dense symmetric matrix. Sweeps until the
// off-diagonal Frobenius norm drops below 1e-14 * ||A||_F, capped at 50
// sweeps. Throws PhysicsError("NotSymmetric") if the input asymmetry
// exceeds 1e-10 * ||A||_F, PhysicsError("NoConvergence") at the cap.
EigenResult eigen_symmetric(Matrix a);

// Internal-mode frequencies: d holds the ascending eigenvalues of J,
// omega_i = sqrt(2 d_i / mass_scale).
struct Spectrum {
  std::vector<double> d;
  std::vector<double> omega;
  double mass_scale = 0.0;
};

// Throws UnstableSystemError if any eigenvalue is <= 0 (a zero mode means
// an unbound internal degree of freedom, not a discrete level).
Spectrum spectrum_from_j(const JMatrix& jm, const ParticleSystem& system);

}  // namespace nbho

#endif
