#ifndef HFF_TEST_ORACLES_HPP
#define HFF_TEST_ORACLES_HPP

// Brute-force reference implementations used as independent oracles. These
// deliberately evaluate the defining sums term by term and never call the
// library's transform paths.

#include <cmath>
#include <cstdint>
#include <vector>

#include "hff/functional.hpp"
#include "hff/lattice_fn.hpp"
#include "hff/numeric.hpp"
#include "hff/random.hpp"

namespace hff::oracle {

// (F phi)(z_p) = (1/sqrt(M)) sum_z exp(-sign 2 pi i z_p z / M) phi(z),
// compensated, quadratic.
inline LatticeFn naive_transform(const LatticeFn& phi, int sign) {
    const std::int64_t m = phi.size();
    LatticeFn out(phi.grid());
    const double w = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::int64_t zp = 0; zp < m; ++zp) {
        CompensatedComplexSum acc;
        for (std::int64_t z = 0; z < m; ++z) {
            const double phase = -sign * 2.0 * pi * static_cast<double>(mod_floor(zp * z, m)) /
                                 static_cast<double>(m);
            acc.add(std::polar(1.0, phase) * phi.at(z));
        }
        out.at(zp) = w * acc.value();
    }
    return out;
}

inline LatticeFn naive_forward(const LatticeFn& phi) { return naive_transform(phi, +1); }
inline LatticeFn naive_inverse(const LatticeFn& phi) { return naive_transform(phi, -1); }

// (phi * psi)(x) = (1/sqrt(M)) sum_y phi(x - y) psi(y), plain loops.
inline LatticeFn naive_convolve(const LatticeFn& phi, const LatticeFn& psi) {
    const std::int64_t m = phi.size();
    LatticeFn out(phi.grid());
    const double w = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::int64_t x = 0; x < m; ++x) {
        CompensatedComplexSum acc;
        for (std::int64_t y = 0; y < m; ++y) acc.add(phi.at(x - y) * psi.at(y));
        out.at(x) = w * acc.value();
    }
    return out;
}

// Defining sum of the functional transform:
//   (F f)(b) = eps0 sum_a exp(-sign 2 pi i sum_k z_a(k) z_b(k) / N') f(a).
inline DenseFunctional naive_functional_transform(const DenseFunctional& f, int sign) {
    const FunctionalSpace& sp = f.space();
    const std::int64_t total = f.size();
    const std::int64_t sites = sp.site_count();
    const std::int64_t np = sp.per_site_size();
    const double eps0 = std::pow(sp.per_site_weight(), static_cast<double>(sites));
    DenseFunctional out(sp);
    std::vector<std::int64_t> db(static_cast<std::size_t>(sites));
    for (std::int64_t ib = 0; ib < total; ++ib) {
        std::int64_t r = ib;
        for (std::int64_t k = 0; k < sites; ++k) {
            db[static_cast<std::size_t>(k)] = r % np;
            r /= np;
        }
        CompensatedComplexSum acc;
        for (std::int64_t ia = 0; ia < total; ++ia) {
            std::int64_t q = 0, ra = ia;
            for (std::int64_t k = 0; k < sites; ++k) {
                q += mod_floor(db[static_cast<std::size_t>(k)] * (ra % np), np);
                ra /= np;
            }
            const double phase = -sign * 2.0 * pi * static_cast<double>(q % np) /
                                 static_cast<double>(np);
            acc.add(std::polar(1.0, phase) * f.table()[static_cast<std::size_t>(ia)]);
        }
        out.table()[static_cast<std::size_t>(ib)] = eps0 * acc.value();
    }
    return out;
}

// eps0-weighted convolution on A by the defining double loop.
inline DenseFunctional naive_functional_convolve(const DenseFunctional& f,
                                                 const DenseFunctional& g) {
    const FunctionalSpace& sp = f.space();
    const std::int64_t total = f.size();
    const std::int64_t sites = sp.site_count();
    const std::int64_t np = sp.per_site_size();
    const double eps0 = std::pow(sp.per_site_weight(), static_cast<double>(sites));
    DenseFunctional out(sp);
    for (std::int64_t ia = 0; ia < total; ++ia) {
        const FunctionalPoint a = f.decode(ia);
        CompensatedComplexSum acc;
        for (std::int64_t ib = 0; ib < total; ++ib) {
            const FunctionalPoint b = f.decode(ib);
            FunctionalPoint diff(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
            acc.add(f.at(diff) * g.table()[static_cast<std::size_t>(ib)]);
        }
        out.table()[static_cast<std::size_t>(ia)] = eps0 * acc.value();
    }
    return out;
}

inline LatticeFn random_lattice_fn(const CyclicLattice& grid, std::uint64_t seed) {
    return {grid, random_complex_vector(static_cast<std::size_t>(grid.size), seed)};
}

inline DenseFunctional random_dense(const FunctionalSpace& space, std::uint64_t seed) {
    DenseFunctional f(space);
    f.table() = random_complex_vector(f.table().size(), seed);
    return f;
}

inline FactoredFunctional random_factored(const FunctionalSpace& space, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<LatticeFn> sites;
    for (std::int64_t k = 0; k < space.site_count(); ++k) {
        LatticeFn s(space.site_grid());
        for (auto& v : s.raw()) v = rng.uniform_complex();
        sites.push_back(std::move(s));
    }
    return {space, std::move(sites)};
}

inline double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const LatticeFn& a, const LatticeFn& b) {
    return max_abs_diff(a.raw(), b.raw());
}

inline double max_abs_diff(const DenseFunctional& a, const DenseFunctional& b) {
    return max_abs_diff(a.table(), b.table());
}

}  // namespace hff::oracle

#endif
