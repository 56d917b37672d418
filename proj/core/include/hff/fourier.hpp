#ifndef HFF_FOURIER_HPP
#define HFF_FOURIER_HPP

#include "hff/lattice_fn.hpp"

namespace hff {

// The lattice Fourier transform
//   (F phi)(z_p) = w * sum_z exp(-2 pi i z_p z / M) phi(z),  w = 1/sqrt(M),
// which on a level-1 lattice is the epsilon-weighted transform (epsilon
// sqrt(N) = 1) and on a level-2 lattice is the per-site factor of the
// functional transform. The kernel is exact in the integer product
// z_p * z mod M, so subgroup and Poisson identities hold to rounding.
LatticeFn forward(const LatticeFn& phi);

// Conjugate kernel; inverse(forward(phi)) == phi up to rounding.
LatticeFn inverse(const LatticeFn& phi);

// (phi * psi)(x) = w * sum_y phi(x - y) psi(y), indices mod M.
// Direct evaluation with compensated accumulation; quadratic in M.
LatticeFn convolve(const LatticeFn& phi, const LatticeFn& psi);

// delta(0) = sqrt(M) (= H at level 1), 0 elsewhere; F(delta) = 1.
LatticeFn delta(const CyclicLattice& grid);

}  // namespace hff

#endif
