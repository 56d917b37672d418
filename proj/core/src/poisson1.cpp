#include "hff/poisson1.hpp"

#include <cmath>
#include <stdexcept>

namespace hff {

std::pair<cdouble, cdouble> poisson_pair(const LatticeFn& phi, const SubgroupSpec& s) {
    if (!(phi.grid() == s.lattice))
        throw std::invalid_argument("subgroup must live on the function's lattice");
    const SubgroupSpec sp = annihilator(s);
    const LatticeFn fphi = forward(phi);
    CompensatedComplexSum top;
    for (const std::int64_t z : sp.elements()) top.add(fphi.at(z));
    CompensatedComplexSum bottom;
    for (const std::int64_t z : s.elements()) bottom.add(phi.at(z));
    const cdouble lhs = top.value() / std::sqrt(static_cast<double>(sp.order));
    const cdouble rhs = bottom.value() / std::sqrt(static_cast<double>(s.order));
    return {lhs, rhs};
}

namespace {

LatticeFn sampled_gaussian(const Level1Lattice& lattice, cdouble xi) {
    return sample(lattice.grid(), [xi](double x) { return std::exp(-xi * pi * x * x); });
}

cdouble annihilator_transform_sum(cdouble xi, std::int64_t s, const Level1Lattice& lattice) {
    const SubgroupSpec sub = subgroup(lattice.grid(), s);
    const LatticeFn f = forward(sampled_gaussian(lattice, xi));
    CompensatedComplexSum acc;
    for (const std::int64_t z : annihilator(sub).elements()) acc.add(f.at(z));
    return acc.value();
}

}  // namespace

std::pair<cdouble, cdouble> theta_identity_lhs_rhs(cdouble xi, const Level1Lattice& lattice) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    const cdouble lhs = annihilator_transform_sum(xi, lattice.H, lattice);
    const SubgroupSpec sub = subgroup(lattice.grid(), lattice.H);
    const LatticeFn phi = sampled_gaussian(lattice, xi);
    CompensatedComplexSum acc;
    for (const std::int64_t z : sub.elements()) acc.add(phi.at(z));
    return {lhs, acc.value()};
}

cdouble infinitesimal_generator_limit(cdouble xi, std::int64_t s, const Level1Lattice& lattice) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    return annihilator_transform_sum(xi, s, lattice);
}

std::pair<cdouble, cdouble> scaled_gauss_identity(std::int64_t m, const Level1Lattice& lattice,
                                                  std::int64_t s) {
    const std::int64_t n = lattice.N;
    if (m == 0 || (2 * n) % m != 0) throw std::invalid_argument("m must divide 2H^2");
    if (s < 1 || n % s != 0) throw std::invalid_argument("s must divide H^2");
    if ((n / s) % std::abs(m) != 0)
        throw std::invalid_argument("m must divide the annihilator generator H^2/s");

    const SubgroupSpec sub = subgroup(lattice.grid(), s);
    const SubgroupSpec perp = annihilator(sub);
    const std::int64_t am = std::abs(m);

    // sum over S^perp of exp(i pi p^2 / m): p^2/m = z^2/(N m), reduced mod 2.
    CompensatedComplexSum top;
    for (const std::int64_t z : perp.elements()) {
        const std::int64_t q = mod_floor(z * z, 2 * n * am);
        double phase = pi * static_cast<double>(q) / static_cast<double>(n * am);
        if (m < 0) phase = -phase;
        top.add(std::polar(1.0, phase));
    }
    // sum over S of exp(-i m pi x^2): m x^2 = m z^2 / N, reduced mod 2.
    CompensatedComplexSum bottom;
    for (const std::int64_t z : sub.elements()) {
        const std::int64_t q = mod_floor(am * z * z, 2 * n);
        double phase = -pi * static_cast<double>(q) / static_cast<double>(n);
        if (m < 0) phase = -phase;
        bottom.add(std::polar(1.0, phase));
    }

    const cdouble c = imaginary_gauss_factor(m, 2 * n);
    const cdouble lhs = static_cast<double>(lattice.H) * c * top.value();
    const cdouble rhs = static_cast<double>(s) * bottom.value();
    return {lhs, rhs};
}

}  // namespace hff
