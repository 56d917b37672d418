#include <doctest.h>

#include <vector>

#include "hff/fft.hpp"
#include "hff/random.hpp"
#include "support/oracles.hpp"

using namespace hff;

namespace {

// Plain quadratic DFT with compensated accumulation, the engine's oracle.
std::vector<cdouble> dft_oracle(const std::vector<cdouble>& x, bool inv) {
    const auto n = static_cast<std::int64_t>(x.size());
    std::vector<cdouble> out(x.size());
    const double sgn = inv ? 1.0 : -1.0;
    for (std::int64_t k = 0; k < n; ++k) {
        CompensatedComplexSum acc;
        for (std::int64_t j = 0; j < n; ++j)
            acc.add(std::polar(1.0, sgn * 2.0 * pi * static_cast<double>((j * k) % n) /
                                        static_cast<double>(n)) *
                    x[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(k)] = acc.value();
    }
    return out;
}

}  // namespace

TEST_CASE("engine matches the quadratic oracle across lengths") {
    // powers of two, mixed small radices, primes large enough for Bluestein
    for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                                std::size_t{5}, std::size_t{6}, std::size_t{8}, std::size_t{9},
                                std::size_t{12}, std::size_t{16}, std::size_t{36}, std::size_t{49},
                                std::size_t{60}, std::size_t{64}, std::size_t{97}, std::size_t{100},
                                std::size_t{101}, std::size_t{128}, std::size_t{210},
                                std::size_t{256}, std::size_t{1009}}) {
        const std::vector<cdouble> x = random_complex_vector(n, 0xf00d + n);
        for (const bool inv : {false, true}) {
            std::vector<cdouble> got = x;
            fft::transform(got, inv);
            const std::vector<cdouble> want = dft_oracle(x, inv);
            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(got[i] - want[i]));
            INFO("n=", n, " inverse=", inv);
            CHECK(err < 1e-11 * std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("forward then inverse recovers the input") {
    for (const std::size_t n : {std::size_t{360}, std::size_t{1009}, std::size_t{4096}}) {
        const std::vector<cdouble> x = random_complex_vector(n, 0xbeef + n);
        std::vector<cdouble> y = x;
        fft::forward(y);
        fft::inverse(y);
        const double inv_n = 1.0 / static_cast<double>(n);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(y[i] * inv_n - x[i]));
        CHECK(err < 1e-12);
    }
}
