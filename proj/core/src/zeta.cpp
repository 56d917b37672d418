#include "hff/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace hff {

std::vector<std::int64_t> nth_primes(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("prime count must be positive");
    auto bound = static_cast<std::int64_t>(32);
    if (k >= 6) {
        const double n = static_cast<double>(k);
        bound = static_cast<std::int64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
    }
    std::vector<std::int64_t> primes;
    while (true) {
        primes.clear();
        std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
        for (std::int64_t i = 2; i <= bound; ++i) {
            if (composite[static_cast<std::size_t>(i)]) continue;
            primes.push_back(i);
            if (static_cast<std::int64_t>(primes.size()) == k) return primes;
            for (std::int64_t j = i * i; j <= bound; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        bound += bound / 2;
    }
}

std::int64_t site_prime(const Level1Lattice& lattice, std::int64_t z_site) {
    if (z_site < -lattice.N / 2 || z_site >= lattice.N / 2)
        throw std::invalid_argument("site index outside the level-1 lattice");
    const std::int64_t idx = z_site + lattice.N / 2 + 1;  // 1-based prime index
    return nth_primes(idx).back();
}

cdouble zeta_site_factor_direct(std::int64_t p, cdouble s, std::int64_t z_b,
                                const Level2Lattice& l2) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    if (l2.mode != Level2Mode::Plain)
        throw std::invalid_argument("zeta site factors are defined on Plain lattices");
    const CyclicLattice g = l2.grid();
    const double logp = std::log(static_cast<double>(p));
    CompensatedComplexSum acc;
    for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z) {
        const double a = g.value(z);
        // exp(-2 pi i b a) with b a = z_b z / N' reduced exactly
        const double phase =
            -2.0 * pi * static_cast<double>(mod_floor(z_b * z, g.size)) / static_cast<double>(g.size);
        acc.add(std::exp(-s * logp * a) * std::polar(1.0, phase));
    }
    return acc.value();
}

cdouble zeta_site_factor_closed(std::int64_t p, cdouble s, std::int64_t z_b,
                                const Level2Lattice& l2) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    if (l2.mode != Level2Mode::Plain)
        throw std::invalid_argument("zeta site factors are defined on Plain lattices");
    const double eps_p = l2.epsilon_p();
    const double logp = std::log(static_cast<double>(p));
    const double b = l2.grid().value(z_b);
    const cdouble w = cdouble{0.0, 2.0 * pi} * b + s * logp;
    const cdouble denom = 1.0 - std::exp(-eps_p * w);
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("degenerate site factor: w vanishes mod 2 pi i / eps'");
    const double hp = static_cast<double>(l2.Hp);
    const double sign = (z_b % 2 == 0) ? 1.0 : -1.0;  // exp(i pi b H') = (-1)^(z_b)
    const cdouble num = sign * (1.0 - std::exp(-s * logp * hp));
    return eps_p * num / denom;
}

cdouble zeta_partial(cdouble s, std::int64_t prime_count, std::int64_t depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    cdouble prod = 1.0;
    for (const std::int64_t p : nth_primes(prime_count)) {
        const double logp = std::log(static_cast<double>(p));
        const cdouble ps = std::exp(-s * logp);
        prod *= (1.0 - std::exp(-s * static_cast<double>(depth) * logp)) / (1.0 - ps);
    }
    return prod;
}

cdouble euler_product(cdouble s, std::int64_t prime_count) {
    cdouble prod = 1.0;
    for (const std::int64_t p : nth_primes(prime_count))
        prod /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    return prod;
}

cdouble zeta_reference(cdouble s) {
    if (!(s.real() > 1.0)) throw std::invalid_argument("zeta reference needs Re(s) > 1");
    constexpr std::int64_t n0 = 64;
    const double n = static_cast<double>(n0);
    CompensatedComplexSum acc;
    for (std::int64_t j = 1; j < n0; ++j)
        acc.add(std::exp(-s * std::log(static_cast<double>(j))));
    cdouble z = acc.value();
    const cdouble npow = std::exp(-s * std::log(n));  // n^(-s)
    z += npow * n / (s - 1.0);                        // n^(1-s)/(s-1)
    z += npow / 2.0;
    // Euler-Maclaurin corrections with B2, B4, B6, B8; the next term is
    // below 1e-17 at n = 64 for |s| up to ~10.
    const cdouble s1 = s, s2 = s + 1.0, s3 = s + 2.0, s4 = s + 3.0, s5 = s + 4.0;
    const cdouble s6 = s + 5.0, s7 = s + 6.0;
    cdouble fall = s1;  // s
    z += fall * npow / (12.0 * n);
    fall *= s2 * s3;  // s(s+1)(s+2)
    z -= fall * npow / (720.0 * n * n * n);
    fall *= s4 * s5;
    z += fall * npow / (30240.0 * n * n * n * n * n);
    fall *= s6 * s7;
    z -= fall * npow / (1209600.0 * n * n * n * n * n * n * n);
    return z;
}

FactoredFunctional zeta_functional(const FunctionalSpace& space, cdouble s) {
    if (space.mode() != Level2Mode::Plain)
        throw std::invalid_argument("the zeta functional is defined on Plain spaces");
    const CyclicLattice g = space.site_grid();
    const double hp = static_cast<double>(space.level2.Hp);
    std::vector<LatticeFn> sites;
    sites.reserve(static_cast<std::size_t>(space.site_count()));
    const std::vector<std::int64_t> primes = nth_primes(space.site_count());
    for (std::int64_t k = 0; k < space.site_count(); ++k) {
        const double logp = std::log(static_cast<double>(primes[static_cast<std::size_t>(k)]));
        LatticeFn site(g);
        for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z)
            site.at(z) = std::exp(-s * logp * (g.value(z) + hp / 2.0));
        sites.push_back(std::move(site));
    }
    return {space, std::move(sites)};
}

}  // namespace hff
