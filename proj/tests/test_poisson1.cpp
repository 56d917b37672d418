#include <doctest.h>

#include <cmath>

#include "hff/poisson1.hpp"
#include "support/oracles.hpp"

using namespace hff;

TEST_CASE("poisson pair hand-checked cases") {
    const Level1Lattice l2 = make_level1(2);
    const CyclicLattice g = l2.grid();

    // phi = delta, s = 2: both sides sqrt(2)
    {
        const auto [lhs, rhs] = poisson_pair(delta(g), subgroup(g, 2));
        CHECK(std::abs(lhs - std::sqrt(2.0)) < 1e-14);
        CHECK(std::abs(rhs - std::sqrt(2.0)) < 1e-14);
    }
    // phi = 1, s = 1: both sides H = 2
    {
        LatticeFn one(g);
        for (auto& v : one.raw()) v = 1.0;
        const auto [lhs, rhs] = poisson_pair(one, subgroup(g, 1));
        CHECK(std::abs(lhs - 2.0) < 1e-14);
        CHECK(std::abs(rhs - 2.0) < 1e-14);
    }
}

TEST_CASE("s = N reduces to inversion at the origin") {
    for (const std::int64_t h : {2, 4, 8}) {
        const CyclicLattice g = make_level1(h).grid();
        const LatticeFn phi = oracle::random_lattice_fn(g, 0x5 + static_cast<std::uint64_t>(h));
        const auto [lhs, rhs] = poisson_pair(phi, subgroup(g, g.size));
        CHECK(std::abs(rhs - phi.at(0)) < 1e-15);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("exact finite poisson summation over every divisor") {
    for (const std::int64_t h : {4, 6, 8}) {
        const CyclicLattice g = make_level1(h).grid();
        for (std::int64_t s = 1; s <= g.size; ++s) {
            if (g.size % s != 0) continue;
            for (int trial = 0; trial < 10; ++trial) {
                const LatticeFn phi = oracle::random_lattice_fn(
                    g, 0x1000 * static_cast<std::uint64_t>(h) + 31 * static_cast<std::uint64_t>(s) +
                           static_cast<std::uint64_t>(trial));
                const auto [lhs, rhs] = poisson_pair(phi, subgroup(g, s));
                INFO("H=", h, " s=", s, " trial=", trial);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("s = H gives the unnormalized equality") {
    for (const std::int64_t h : {4, 6, 8}) {
        const Level1Lattice lat = make_level1(h);
        const CyclicLattice g = lat.grid();
        const SubgroupSpec sub = subgroup(g, h);
        const SubgroupSpec perp = annihilator(sub);
        CHECK(sub.order == perp.order);  // |S| = |S^perp| = H
        const LatticeFn phi = oracle::random_lattice_fn(g, 0x9 + static_cast<std::uint64_t>(h));
        const LatticeFn f = forward(phi);
        CompensatedComplexSum top, bottom;
        for (const std::int64_t z : perp.elements()) top.add(f.at(z));
        for (const std::int64_t z : sub.elements()) bottom.add(phi.at(z));
        CHECK(std::abs(top.value() - bottom.value()) < 1e-10);
    }
}

TEST_CASE("theta identity: lattice sums against the series") {
    const Level1Lattice lat = make_level1(16);
    for (const cdouble xi : {cdouble{1, 0}, cdouble{2, 0}, cdouble{0.5, 0}}) {
        const auto [lhs, rhs] = theta_identity_lhs_rhs(xi, lat);
        CHECK(std::abs(lhs - rhs) < 1e-10);
        CHECK(std::abs(rhs - theta_sum(xi)) < 1e-10);
        CHECK(std::abs(lhs - theta_sum(xi)) < 1e-10);
    }
    // doubling H shrinks the gap to the series until it hits roundoff
    double prev = 1e300;
    for (const std::int64_t h : {4, 8, 16}) {
        const auto [lhs, rhs] = theta_identity_lhs_rhs({1, 0}, make_level1(h));
        const double err = std::abs(lhs - theta_sum({1, 0}));
        CHECK(err < prev + 1e-14);
        prev = err;
    }
    CHECK(prev < 1e-12);
}

TEST_CASE("fixed small generator isolates c_xi(0)") {
    const Level1Lattice lat = make_level1(16);
    CHECK(std::abs(infinitesimal_generator_limit({1, 0}, 2, lat) - 1.0) < 1e-10);
    CHECK(std::abs(infinitesimal_generator_limit({4, 0}, 2, lat) - 0.5) < 1e-10);
    // s = 1: the annihilator is {0}, so the sum is the single value c_xi(0)
    const cdouble v = infinitesimal_generator_limit({2, 0}, 1, lat);
    CHECK(std::abs(v - gaussian_coefficient(lat, {2, 0}, 0)) < 1e-12);
}

TEST_CASE("m-scaled finite gauss identities") {
    {
        const auto [lhs, rhs] = scaled_gauss_identity(1, make_level1(2), 2);
        CHECK(std::abs(lhs) < 1e-14);
        CHECK(std::abs(rhs) < 1e-14);
    }
    {
        const auto [lhs, rhs] = scaled_gauss_identity(1, make_level1(4), 4);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    {
        const auto [lhs, rhs] = scaled_gauss_identity(2, make_level1(4), 8);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(std::abs(lhs - 16.0) < 1e-12);  // hand evaluation of both sides
    }
    // negative m twin
    {
        const auto [lhs, rhs] = scaled_gauss_identity(-2, make_level1(4), 8);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    CHECK_THROWS_AS(scaled_gauss_identity(3, make_level1(4), 4), std::invalid_argument);
    CHECK_THROWS_AS(scaled_gauss_identity(2, make_level1(4), 16), std::invalid_argument);
}

// The m-scaled identity is not the classical theta modular formula: its
// constant sqrt(m/2)(1+i^(2H^2/m))/(1+i) generally differs from the modular
// constant exp(i pi/4)/sqrt(m). Substituting the latter must break the
// finite identity for m >= 2.
TEST_CASE("m-scaled identity constant differs from the modular constant") {
    const Level1Lattice lat = make_level1(4);
    for (const std::int64_t m : {2, 4}) {
        const cdouble ours = imaginary_gauss_factor(m, 2 * lat.N);
        const cdouble modular =
            std::polar(1.0 / std::sqrt(static_cast<double>(m)), pi / 4.0);
        CHECK(std::abs(ours - modular) > 0.1);
    }
}
