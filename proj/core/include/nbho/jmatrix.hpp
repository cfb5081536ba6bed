#ifndef NBHO_JMATRIX_HPP
#define NBHO_JMATRIX_HPP

#include "nbho/matrix.hpp"
#include "nbho/model.hpp"

namespace nbho {

// The order-(N-1) symmetric matrices whose eigenvalues carry the internal
// normal-mode stiffnesses: F from the one-body forces, G from the pair
// forces, J = F + G.
struct JMatrix {
  std::size_t n_modes = 0;
  Matrix F;
  Matrix G;
  Matrix J;
};

// One-body contribution, assembled from the closed-form matrix elements.
Matrix build_F(const ParticleSystem& system);

// Two-body contribution. Coupling sums run in ascending index order via
// prefix tables, so assembly is O(N^2) and bit-reproducible.
Matrix build_G(const ParticleSystem& system);

// J = F + G, entrywise.
JMatrix build_J(const ParticleSystem& system);

}  // namespace nbho

#endif
