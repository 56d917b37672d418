#include <doctest.h>

#include <cmath>

#include "hff/fourier.hpp"
#include "hff/special_sums.hpp"
#include "support/oracles.hpp"

using namespace hff;

namespace {

LatticeFn constant_one(const CyclicLattice& g) {
    LatticeFn fn(g);
    for (auto& v : fn.raw()) v = 1.0;
    return fn;
}

double parseval_gap(const LatticeFn& phi) {
    const LatticeFn f = forward(phi);
    double a = 0.0, b = 0.0;
    for (const auto& v : phi.raw()) a += std::norm(v);
    for (const auto& v : f.raw()) b += std::norm(v);
    return std::abs(a - b) / a;
}

}  // namespace

TEST_CASE("transform of constants and deltas") {
    for (const std::int64_t h : {2, 8}) {
        const CyclicLattice g = make_level1(h).grid();
        const LatticeFn d = delta(g);
        CHECK(d.at(0).real() == doctest::Approx(static_cast<double>(h)));

        const LatticeFn fd = forward(d);
        const LatticeFn fi = inverse(d);
        for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z) {
            CHECK(std::abs(fd.at(z) - 1.0) < 1e-14);
            CHECK(std::abs(fi.at(z) - 1.0) < 1e-14);
        }

        const LatticeFn f1 = forward(constant_one(g));
        CHECK(std::abs(f1.at(0) - static_cast<double>(h)) < 1e-12);
        for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z)
            if (z != 0) CHECK(std::abs(f1.at(z)) < 1e-12);
    }
}

TEST_CASE("single-point input, H = 2") {
    const CyclicLattice g = make_level1(2).grid();
    LatticeFn phi(g);
    phi.at(1) = 1.0;  // indicator of x = 1/2
    const LatticeFn f = forward(phi);
    CHECK(std::abs(f.at(1) - cdouble{0.0, -0.5}) < 1e-15);
}

TEST_CASE("round trips and unitarity on random data") {
    for (const std::int64_t h : {4, 6, 16}) {
        const CyclicLattice g = make_level1(h).grid();
        const LatticeFn phi = oracle::random_lattice_fn(g, 0x11 + static_cast<std::uint64_t>(h));
        CHECK(oracle::max_abs_diff(inverse(forward(phi)), phi) < 1e-12);
        CHECK(oracle::max_abs_diff(forward(inverse(phi)), phi) < 1e-12);
        CHECK(parseval_gap(phi) < 1e-12);

        // F^2 is the parity map, F^4 the identity
        const LatticeFn f2 = forward(forward(phi));
        for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z)
            CHECK(std::abs(f2.at(z) - phi.at(-z)) < 1e-12);
        const LatticeFn f4 = forward(forward(f2));
        CHECK(oracle::max_abs_diff(f4, phi) < 1e-12);
    }
}

TEST_CASE("transform agrees with the quadratic oracle") {
    for (const std::int64_t h : {2, 6, 8}) {
        const CyclicLattice g = make_level1(h).grid();
        const LatticeFn phi = oracle::random_lattice_fn(g, 0x77 + static_cast<std::uint64_t>(h));
        CHECK(oracle::max_abs_diff(forward(phi), oracle::naive_forward(phi)) < 1e-12);
        CHECK(oracle::max_abs_diff(inverse(phi), oracle::naive_inverse(phi)) < 1e-12);
    }
}

TEST_CASE("convolution basics") {
    const CyclicLattice g = make_level1(4).grid();
    const LatticeFn phi = oracle::random_lattice_fn(g, 0xabc);
    const LatticeFn psi = oracle::random_lattice_fn(g, 0xdef);

    CHECK(oracle::max_abs_diff(convolve(phi, delta(g)), phi) < 1e-13);
    CHECK(oracle::max_abs_diff(convolve(delta(g), phi), phi) < 1e-13);
    CHECK(oracle::max_abs_diff(convolve(phi, psi), convolve(psi, phi)) < 1e-13);
    CHECK(oracle::max_abs_diff(convolve(phi, psi), oracle::naive_convolve(phi, psi)) < 1e-13);

    const LatticeFn ones = constant_one(g);
    const LatticeFn c = convolve(ones, ones);
    for (const auto& v : c.raw()) CHECK(std::abs(v - 4.0) < 1e-13);
}

TEST_CASE("convolution theorems") {
    for (const std::int64_t h : {4, 8}) {
        const CyclicLattice g = make_level1(h).grid();
        const LatticeFn phi = oracle::random_lattice_fn(g, 0x31 + static_cast<std::uint64_t>(h));
        const LatticeFn psi = oracle::random_lattice_fn(g, 0x32 + static_cast<std::uint64_t>(h));

        const LatticeFn lhs = forward(convolve(phi, psi));
        const LatticeFn fp = forward(phi), fq = forward(psi);
        double err = 0.0;
        for (std::int64_t z = 0; z < g.size; ++z)
            err = std::max(err, std::abs(lhs.at(z) - fp.at(z) * fq.at(z)));
        CHECK(err < 1e-12);

        const LatticeFn lhs_bar = inverse(convolve(phi, psi));
        const LatticeFn bp = inverse(phi), bq = inverse(psi);
        err = 0.0;
        for (std::int64_t z = 0; z < g.size; ++z)
            err = std::max(err, std::abs(lhs_bar.at(z) - bp.at(z) * bq.at(z)));
        CHECK(err < 1e-12);

        // product rule: F(phi psi) = (F phi) * (F psi)
        LatticeFn prod(g);
        for (std::int64_t z = 0; z < g.size; ++z) prod.at(z) = phi.at(z) * psi.at(z);
        CHECK(oracle::max_abs_diff(forward(prod), convolve(fp, fq)) < 1e-12);
    }
}

// phi_xi = (inverse(c_xi)) * (c_{1/xi}(-x) phi_xi(x)): the coefficient
// identity closes exactly on the finite lattice, through the tabulated
// coefficient function.
TEST_CASE("gaussian coefficient convolution identity") {
    for (const std::int64_t h : {2, 4, 8, 16}) {
        const Level1Lattice lat = make_level1(h);
        const CyclicLattice g = lat.grid();
        for (const cdouble xi : {cdouble{1, 0}, cdouble{2, 0}, cdouble{1, 1}}) {
            const LatticeFn phi = sample(g, [xi](double x) { return std::exp(-xi * pi * x * x); });
            const LatticeFn c_tab = gaussian_coefficient_table(lat, xi);
            const LatticeFn c_rec_tab = gaussian_coefficient_table(lat, 1.0 / xi);

            LatticeFn weighted(g);  // c_{1/xi}(-x) phi_xi(x)
            for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z)
                weighted.at(z) = c_rec_tab.at(g.reduce(-z)) * phi.at(z);

            const LatticeFn recon = convolve(inverse(c_tab), weighted);
            INFO("H=", h, " xi=", xi.real(), "+", xi.imag(), "i");
            CHECK(oracle::max_abs_diff(recon, phi) < 1e-10);
        }
    }
}
