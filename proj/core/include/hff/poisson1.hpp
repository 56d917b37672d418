#ifndef HFF_POISSON1_HPP
#define HFF_POISSON1_HPP

#include <utility>

#include "hff/fourier.hpp"
#include "hff/lattice.hpp"
#include "hff/special_sums.hpp"

namespace hff {

// Both sides of the subgroup Poisson identity
//   |S^perp|^(-1/2) sum_{p in S^perp} (F phi)(p)
//     = |S|^(-1/2) sum_{x in S} phi(x).
// The identity is exact on the finite lattice; callers assert |lhs - rhs|.
std::pair<cdouble, cdouble> poisson_pair(const LatticeFn& phi, const SubgroupSpec& s);

// The s = H specialization applied to phi_xi = exp(-xi pi x^2):
//   sum over the integer points of (F phi_xi)(p) versus sum of phi_xi(x);
// both sides tend to theta(i xi) as H grows.
std::pair<cdouble, cdouble> theta_identity_lhs_rhs(cdouble xi, const Level1Lattice& lattice);

// sum_{p in S^perp} (F phi_xi)(p) for the subgroup generated by a fixed
// small step s; as H grows every nonzero p in S^perp escapes to infinity
// and the sum converges to 1/sqrt(xi).
cdouble infinitesimal_generator_limit(cdouble xi, std::int64_t s, const Level1Lattice& lattice);

// The m-scaled finite Gauss identity: for m | 2H^2, s | H^2 and
// m | (H^2 / s),
//   lhs = H c_im sum_{p in S^perp} exp(i pi p^2 / m)
//   rhs = s sum_{x in S} exp(-i m pi x^2)
// with c_im the closed character-sum factor; lhs = rhs exactly.
std::pair<cdouble, cdouble> scaled_gauss_identity(std::int64_t m, const Level1Lattice& lattice,
                                                  std::int64_t s);

}  // namespace hff

#endif
