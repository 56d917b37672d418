#include "hff/special_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace hff {

GaussianParam GaussianParam::general(cdouble xi) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    GaussianParam p;
    p.v_ = xi;
    return p;
}

GaussianParam GaussianParam::imaginary(std::int64_t m) {
    if (m == 0) throw std::invalid_argument("imaginary Gaussian parameter m must be nonzero");
    GaussianParam p;
    p.v_ = m;
    return p;
}

cdouble gauss_sum_direct(std::int64_t z, int sign) {
    if (z < 1) throw std::invalid_argument("Gauss sum length must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    CompensatedComplexSum acc;
    for (std::int64_t l = 0; l < z; ++l) {
        const std::int64_t q = (l * l) % z;  // exact phase residue
        acc.add(std::polar(1.0, sign * 2.0 * pi * static_cast<double>(q) / static_cast<double>(z)));
    }
    return acc.value();
}

cdouble gauss_sum_closed(std::int64_t z) {
    if (z < 1) throw std::invalid_argument("Gauss sum length must be positive");
    const cdouble num = 1.0 + minus_i_pow(z);
    return std::sqrt(static_cast<double>(z)) * num / cdouble{1.0, -1.0};
}

cdouble imaginary_gauss_factor(std::int64_t m, std::int64_t modulus_q) {
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    if (modulus_q <= 0 || modulus_q % 2 != 0)
        throw std::invalid_argument("modulus must be a positive even integer");
    if (modulus_q % m != 0) throw std::invalid_argument("m must divide the character modulus");
    const std::int64_t q = modulus_q / m;  // carries the sign of m
    if (m > 0)
        return std::sqrt(static_cast<double>(m) / 2.0) * (1.0 + i_pow(q)) / cdouble{1.0, 1.0};
    return std::sqrt(static_cast<double>(-m) / 2.0) * (1.0 + minus_i_pow(-q)) / cdouble{1.0, -1.0};
}

namespace {

// Defining sum with the oscillatory phase reduced exactly:
// the term at index z is exp(pi p^2 / xi) exp(-xi pi x^2) e^{-2 pi i (z z_p mod N)/N}.
cdouble coefficient_direct(const Level1Lattice& lat, cdouble xi, std::int64_t z_p) {
    const CyclicLattice g = lat.grid();
    // p^2 = z_p^2 / N exactly
    const double p_sq = static_cast<double>(z_p * z_p) / static_cast<double>(lat.N);
    const cdouble amp = std::exp(pi * p_sq / xi);
    CompensatedComplexSum acc;
    const double eps = lat.epsilon();
    for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z) {
        const double x = g.value(z);
        const double phase = -2.0 * pi * static_cast<double>(mod_floor(z * z_p, lat.N)) /
                             static_cast<double>(lat.N);
        acc.add(eps * std::exp(-xi * pi * x * x) * std::polar(1.0, phase));
    }
    return amp * acc.value();
}

// Image series of the full-lattice sum: (1/sqrt(xi)) sum_m exp(-pi mH (mH + 2p)/xi).
cdouble coefficient_image_series(const Level1Lattice& lat, cdouble xi, double p) {
    const double h = static_cast<double>(lat.H);
    const cdouble inv_sqrt = 1.0 / std::sqrt(xi);
    CompensatedComplexSum acc;
    for (std::int64_t m = -64; m <= 64; ++m) {
        const double mh = static_cast<double>(m) * h;
        const cdouble term = std::exp(-pi * mh * (mh + 2.0 * p) / xi);
        if (m != 0 && std::abs(term) < 1e-24) continue;
        acc.add(term);
    }
    return inv_sqrt * acc.value();
}

// One half-tail of the window: sum over z = z0, z0 + dir, ... of
// epsilon exp(-xi pi (x + i p/xi)^2); terms decay monotonically in |x|.
cdouble coefficient_tail(const Level1Lattice& lat, cdouble xi, double p, std::int64_t z0,
                         std::int64_t dir) {
    const double eps = lat.epsilon();
    CompensatedComplexSum acc;
    double peak = 0.0;
    const cdouble shift = cdouble{0.0, 1.0} * p / xi;
    for (std::int64_t k = 0; k < 100000; ++k) {
        const double x = eps * static_cast<double>(z0 + dir * k);
        const cdouble t = eps * std::exp(-xi * pi * (x + shift) * (x + shift));
        const double a = std::abs(t);
        peak = std::max(peak, a);
        if (a < 1e-24 * std::max(1.0, peak)) break;
        acc.add(t);
    }
    return acc.value();
}

cdouble coefficient_stable(const Level1Lattice& lat, cdouble xi, std::int64_t z_p) {
    const double p = lat.grid().value(z_p);
    const cdouble full = coefficient_image_series(lat, xi, p);
    const cdouble upper = coefficient_tail(lat, xi, p, lat.N / 2, +1);
    const cdouble lower = coefficient_tail(lat, xi, p, -lat.N / 2 - 1, -1);
    return full - upper - lower;
}

}  // namespace

cdouble gaussian_coefficient(const Level1Lattice& lattice, cdouble xi, std::int64_t z_p) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    const double p = lattice.grid().value(z_p);
    const double amplification = pi * p * p * (1.0 / xi).real();
    if (amplification < 8.0)  // cancellation below ~3e3: direct sum keeps ~12 digits
        return coefficient_direct(lattice, xi, z_p);
    return coefficient_stable(lattice, xi, z_p);
}

LatticeFn gaussian_coefficient_table(const Level1Lattice& lattice, cdouble xi) {
    LatticeFn fn(lattice.grid());
    const CyclicLattice g = lattice.grid();
    for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z)
        fn.at(z) = gaussian_coefficient(lattice, xi, z);
    return fn;
}

cdouble imaginary_gaussian_coefficient(const Level1Lattice& lattice, std::int64_t m) {
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    if ((2 * lattice.N) % m != 0) throw std::invalid_argument("m must divide 2H^2");
    return imaginary_gauss_factor(m, 2 * lattice.N);
}

cdouble theta_sum(cdouble xi) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    const double a = xi.real();
    if (a < 0.05) return theta_sum(1.0 / xi) / std::sqrt(xi);
    // tail bound 2 exp(-a pi M^2) / (1 - exp(-a pi)) < 1e-14 * value scale
    const double denom = 1.0 - std::exp(-a * pi);
    const auto cutoff = static_cast<std::int64_t>(
        std::ceil(std::sqrt(std::max(1.0, std::log(2.0 / (1e-15 * denom)) / (a * pi)))));
    CompensatedComplexSum acc;
    acc.add(1.0);
    for (std::int64_t n = 1; n <= cutoff; ++n) {
        const cdouble t = std::exp(-xi * pi * static_cast<double>(n) * static_cast<double>(n));
        acc.add(t);
        acc.add(t);
    }
    return acc.value();
}

cdouble per_site_gauss_factor(cdouble xi, double shift, double step, double halfwidth) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    if (!(step > 0.0) || !(halfwidth > 0.0))
        throw std::invalid_argument("step and halfwidth must be positive");
    const auto n = static_cast<std::int64_t>(std::llround(2.0 * halfwidth / step));
    const cdouble offset = cdouble{0.0, 1.0} * shift / xi;
    CompensatedComplexSum acc;
    for (std::int64_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) * step - halfwidth;
        acc.add(std::exp(-pi * xi * (x + offset) * (x + offset)));
    }
    return step * acc.value();
}

}  // namespace hff
