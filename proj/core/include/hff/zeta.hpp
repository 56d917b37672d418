#ifndef HFF_ZETA_HPP
#define HFF_ZETA_HPP

#include <cstdint>
#include <vector>

#include "hff/functional.hpp"
#include "hff/lattice.hpp"
#include "hff/numeric.hpp"

namespace hff {

// Parameters of the prime-indexed functional experiments.
struct ZetaParams {
    cdouble s;
    std::int64_t prime_count = 1;               // K: number of primes/sites
    std::int64_t depth = 1;                     // geometric truncation (the finite H')
    Level2Mode mode = Level2Mode::Plain;
};

// First k primes, by sieve; the bound n (ln n + ln ln n) is re-extended on
// shortfall.
std::vector<std::int64_t> nth_primes(std::int64_t k);

// Prime attached to the site with centered index z: the (z + H^2/2 + 1)-th.
std::int64_t site_prime(const Level1Lattice& lattice, std::int64_t z_site);

// Per-site sum  sum_{a in L'} exp(-(2 pi i b + s log p) a)  over the level-2
// lattice, with b the value of the centered index z_b. Direct summation.
cdouble zeta_site_factor_direct(std::int64_t p, cdouble s, std::int64_t z_b,
                                const Level2Lattice& l2);

// The closed per-site transform factor
//   eps' p^(-s H'/2) sinh(w H'/2) / (exp(-eps' w / 2) sinh(eps' w / 2)),
// with w = 2 pi i b + s log p, evaluated in the overflow-free fused form
// eps' (-1)^(z_b) (1 - p^(-s H')) / (1 - exp(-eps' w)). Equals
// eps' p^(-s H'/2) times the direct sum. Throws on the degenerate ratio
// w = 0 mod 2 pi i / eps', where the geometric denominator vanishes.
cdouble zeta_site_factor_closed(std::int64_t p, cdouble s, std::int64_t z_b,
                                const Level2Lattice& l2);

// prod_{n=1}^{K} (1 - p_n^(-s depth)) / (1 - p_n^(-s)); depth >= 1.
cdouble zeta_partial(cdouble s, std::int64_t prime_count, std::int64_t depth);

// The depth -> infinity limit prod 1 / (1 - p^(-s)); Re(s) > 1.
cdouble euler_product(cdouble s, std::int64_t prime_count);

// Riemann zeta by Dirichlet series with Euler-Maclaurin tail correction;
// absolute accuracy below 1e-10 for Re(s) >= 1.5 (and well beyond it).
cdouble zeta_reference(cdouble s);

// Z_s as a product functional on a Plain space: per-site factor
// p_k^(-s (a(k) + H'/2)). Summing it over the product subgroup with
// per-site value generator 1 reproduces zeta_partial(s, H^2, H') exactly.
FactoredFunctional zeta_functional(const FunctionalSpace& space, cdouble s);

}  // namespace hff

#endif
