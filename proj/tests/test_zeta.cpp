#include <doctest.h>

#include <cmath>

#include "hff/poisson2.hpp"
#include "hff/zeta.hpp"
#include "support/oracles.hpp"

using namespace hff;

namespace {

bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("prime sieve") {
    CHECK(nth_primes(5) == std::vector<std::int64_t>{2, 3, 5, 7, 11});
    CHECK(nth_primes(1) == std::vector<std::int64_t>{2});
    CHECK(nth_primes(25).back() == 97);

    // trial-division oracle over a longer stretch
    const auto primes = nth_primes(400);
    std::int64_t n = 1, found = 0;
    for (const std::int64_t p : primes) {
        while (++n <= p) CHECK(is_prime_trial(n) == (n == p));
        ++found;
    }
    CHECK(found == 400);
}

TEST_CASE("site to prime mapping") {
    const Level1Lattice l2 = make_level1(2);
    CHECK(site_prime(l2, -2) == 2);
    CHECK(site_prime(l2, -1) == 3);
    CHECK(site_prime(l2, 0) == 5);
    CHECK(site_prime(l2, 1) == 7);
    CHECK(site_prime(make_level1(4), -8) == 2);
    CHECK_THROWS_AS(site_prime(l2, 2), std::invalid_argument);
}

TEST_CASE("site factor, direct sum") {
    const Level2Lattice l2 = make_level2(2);
    // p=2, s=2, b=0: 4 + 2 + 1 + 1/2
    CHECK(std::abs(zeta_site_factor_direct(2, {2, 0}, 0, l2) - 7.5) < 1e-12);
    // s=0: every term is 1
    CHECK(std::abs(zeta_site_factor_direct(3, {0, 0}, 0, l2) -
                   static_cast<double>(l2.Np)) < 1e-12);
}

TEST_CASE("site factor, closed form vs direct") {
    const Level2Lattice l2 = make_level2(2);
    // anchor: closed / (eps' p^(-s H'/2)) = direct = 7.5
    {
        const cdouble closed = zeta_site_factor_closed(2, {2, 0}, 0, l2);
        const double prefactor = 0.5 * std::pow(2.0, -2.0);  // eps' 2^(-2)
        CHECK(std::abs(closed / prefactor - 7.5) < 1e-12);
    }
    // 50 random (p, s, b): relative error < 1e-10
    SplitMix64 rng(0x2e7a);
    const auto primes = nth_primes(25);  // up to 97
    for (int t = 0; t < 50; ++t) {
        const std::int64_t p = primes[static_cast<std::size_t>(rng.next() % primes.size())];
        const cdouble s{1.0 + 3.0 * (rng.uniform_signed() + 1.0) / 2.0,
                        4.0 * rng.uniform_signed()};
        const std::int64_t z_b =
            l2.grid().index_at(static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(l2.Np)));
        const cdouble closed = zeta_site_factor_closed(p, s, z_b, l2);
        const cdouble via_direct = l2.epsilon_p() *
                                   std::exp(-s * std::log(static_cast<double>(p)) *
                                            static_cast<double>(l2.Hp) / 2.0) *
                                   zeta_site_factor_direct(p, s, z_b, l2);
        INFO("p=", p, " s=", s.real(), "+", s.imag(), "i z_b=", z_b);
        CHECK(std::abs(closed - via_direct) < 1e-10 * std::abs(closed));
    }
    // a larger lattice as well
    const Level2Lattice l8 = make_level2(8);
    const cdouble closed = zeta_site_factor_closed(5, {2, 1}, 3, l8);
    const cdouble via_direct =
        l8.epsilon_p() *
        std::exp(-cdouble{2, 1} * std::log(5.0) * static_cast<double>(l8.Hp) / 2.0) *
        zeta_site_factor_direct(5, {2, 1}, 3, l8);
    CHECK(std::abs(closed - via_direct) < 1e-10 * std::abs(closed));

    // degenerate ratio: w = 0
    CHECK_THROWS_AS(zeta_site_factor_closed(2, {0, 0}, 0, l2), std::domain_error);
}

TEST_CASE("partial euler products") {
    CHECK(std::abs(zeta_partial({2, 0}, 3, 2) - 13.0 / 9.0) < 1e-12);
    CHECK(std::abs(euler_product({2, 0}, 3) - 1.5625) < 1e-12);
    CHECK_THROWS_AS(zeta_partial({2, 0}, 3, 0), std::invalid_argument);

    // monotone increase in K for real s > 1 at fixed depth > 1
    double prev = 0.0;
    for (const std::int64_t k : {10, 100, 1000}) {
        const double v = zeta_partial({2, 0}, k, 16).real();
        CHECK(v > prev);
        prev = v;
    }
    // and |euler_product - zeta| shrinks as K grows
    const double z2 = zeta_reference({2, 0}).real();
    double preverr = 1e300;
    for (const std::int64_t k : {10, 100, 1000}) {
        const double err = std::abs(euler_product({2, 0}, k).real() - z2);
        CHECK(err < preverr);
        preverr = err;
    }
}

TEST_CASE("zeta reference values") {
    CHECK(std::abs(zeta_reference({2, 0}) - pi * pi / 6.0) < 1e-10);
    CHECK(std::abs(zeta_reference({4, 0}) - pi * pi * pi * pi / 90.0) < 1e-10);
    CHECK(std::abs(zeta_reference({3, 0}) - 1.2020569031595943) < 1e-10);

    // complex argument: against a plain partial sum with a tail bound
    const cdouble s{3.5, 2.0};
    CompensatedComplexSum acc;
    for (std::int64_t n = 1; n <= 200000; ++n)
        acc.add(std::exp(-s * std::log(static_cast<double>(n))));
    CHECK(std::abs(zeta_reference(s) - acc.value()) < 2e-12);

    CHECK_THROWS_AS(zeta_reference({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("zeta functional ties the space to the euler product") {
    const FunctionalSpace sp = make_space(make_level1(2), 4, Level2Mode::Plain);
    const cdouble s{2.0, 0.0};
    const FactoredFunctional zs = zeta_functional(sp, s);

    // Y_Z: per-site value generator 1, i.e. index step H'
    const ProductSubgroup yz = make_product_subgroup(sp, sp.level2.Hp);

    // unnormalized restricted sum = prod_k sum_{j=0}^{H'-1} p_k^(-s j)
    const auto primes = nth_primes(sp.site_count());
    cdouble want = 1.0;
    for (const std::int64_t p : primes) {
        cdouble site = 0.0;
        for (std::int64_t j = 0; j < sp.level2.Hp; ++j)
            site += std::exp(-s * static_cast<double>(j) * std::log(static_cast<double>(p)));
        want *= site;
    }
    CHECK(std::abs(want - zeta_partial(s, sp.site_count(), sp.level2.Hp)) < 1e-12);

    ScaledComplex got_direct;
    for (std::int64_t k = 0; k < sp.site_count(); ++k) {
        CompensatedComplexSum site;
        for (std::int64_t j = 0; j < sp.per_site_size() / yz.generators[static_cast<std::size_t>(k)];
             ++j)
            site.add(zs.sites()[static_cast<std::size_t>(k)].at(
                yz.generators[static_cast<std::size_t>(k)] * j));
        got_direct *= site.value();
    }
    CHECK(std::abs(got_direct.to_complex() - want) < 1e-12 * std::abs(want));

    // the transform side: sum over Y_Z^perp of (F Z_s)(b) equals the same
    // product, exactly, by per-site Poisson
    ScaledComplex got_transform;
    const ProductSubgroup yzp = annihilator_product(yz);
    for (std::int64_t k = 0; k < sp.site_count(); ++k) {
        const LatticeFn fk = forward(zs.sites()[static_cast<std::size_t>(k)]);
        CompensatedComplexSum site;
        for (std::int64_t j = 0;
             j < sp.per_site_size() / yzp.generators[static_cast<std::size_t>(k)]; ++j)
            site.add(fk.at(yzp.generators[static_cast<std::size_t>(k)] * j));
        got_transform *= site.value();
    }
    CHECK(std::abs(got_transform.to_complex() - want) < 1e-10 * std::abs(want));
}

TEST_CASE("transform of the zeta functional matches the closed site product") {
    const FunctionalSpace sp = make_space(make_level1(2), 2, Level2Mode::Plain);
    const cdouble s{2.0, 0.0};
    const DenseFunctional fz = forward_dense(densify(zeta_functional(sp, s)));
    const auto primes = nth_primes(sp.site_count());
    double worst = 0.0;
    for (std::int64_t i = 0; i < fz.size(); ++i) {
        const FunctionalPoint b = fz.decode(i);
        cdouble want = 1.0;
        for (std::size_t k = 0; k < b.size(); ++k)
            want *= zeta_site_factor_closed(primes[k], s, b[k], sp.level2);
        const double rel = std::abs(fz.table()[static_cast<std::size_t>(i)] - want) /
                           std::max(1e-30, std::abs(want));
        worst = std::max(worst, rel);
    }
    CHECK(worst < 1e-10);
}
