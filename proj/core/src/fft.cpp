#include "hff/fft.hpp"

#include <cmath>
#include <cstdint>

namespace hff::fft {
namespace {

constexpr std::int64_t kLargePrime = 61;  // above this, use Bluestein

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n % 2 == 0) return 2;
    for (std::int64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return p;
    return n;
}

std::int64_t largest_prime_factor(std::int64_t n) {
    std::int64_t best = 1;
    while (n > 1) {
        std::int64_t p = smallest_prime_factor(n);
        best = p;
        while (n % p == 0) n /= p;
    }
    return best;
}

// Unit roots w^j = exp(-s 2 pi i j / n), j in [0, n), s = +-1.
std::vector<cdouble> root_table(std::int64_t n, bool inverse) {
    std::vector<cdouble> tw(static_cast<std::size_t>(n));
    const double sgn = inverse ? 1.0 : -1.0;
    for (std::int64_t j = 0; j < n; ++j)
        tw[static_cast<std::size_t>(j)] =
            std::polar(1.0, sgn * 2.0 * pi * static_cast<double>(j) / static_cast<double>(n));
    return tw;
}

// DFT of x[0], x[stride], ..., x[(n-1)*stride] into out[0..n).
// `scratch` (capacity >= n) is free workspace; `tw` are the length-n0
// roots of the top-level transform and `rep = n0 / n` maps local root
// exponents into that table.
void recurse(const cdouble* x, std::size_t stride, std::int64_t n, cdouble* out,
             cdouble* scratch, const std::vector<cdouble>& tw, std::int64_t rep) {
    if (n == 1) {
        out[0] = x[0];
        return;
    }
    const std::int64_t r = smallest_prime_factor(n);
    const std::int64_t m = n / r;
    for (std::int64_t l = 0; l < r; ++l)
        recurse(x + static_cast<std::size_t>(l) * stride, stride * static_cast<std::size_t>(r), m,
                scratch + l * m, out, tw, rep * r);

    const std::int64_t n0 = static_cast<std::int64_t>(tw.size());
    if (r == 2) {
        for (std::int64_t q = 0; q < m; ++q) {
            const cdouble a = scratch[q];
            const cdouble b = tw[static_cast<std::size_t>((q * rep) % n0)] * scratch[m + q];
            out[q] = a + b;
            out[m + q] = a - b;
        }
        return;
    }
    // Generic radix: gather the r twiddled inputs for each q, then apply
    // an r-point DFT using roots w_r^(l s) = tw[l s m rep mod n0].
    cdouble t[64];
    for (std::int64_t q = 0; q < m; ++q) {
        for (std::int64_t l = 0; l < r; ++l)
            t[l] = tw[static_cast<std::size_t>(((l * q) % n) * rep)] * scratch[l * m + q];
        for (std::int64_t s = 0; s < r; ++s) {
            cdouble acc = t[0];
            for (std::int64_t l = 1; l < r; ++l)
                acc += tw[static_cast<std::size_t>(((l * s * m) % n) * rep)] * t[l];
            out[q + m * s] = acc;
        }
    }
}

void mixed_radix(std::vector<cdouble>& data, bool inverse) {
    const auto n = static_cast<std::int64_t>(data.size());
    const std::vector<cdouble> tw = root_table(n, inverse);
    std::vector<cdouble> out(data.size());
    std::vector<cdouble> scratch(data.size());
    recurse(data.data(), 1, n, out.data(), scratch.data(), tw, 1);
    data.swap(out);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Chirp-z: X[k] = c_k sum_j (x_j c_j) b_{k-j} with c_j = exp(-s pi i j^2 / n)
// and b_j = conj(c_j); the linear convolution runs over a power-of-two.
void bluestein(std::vector<cdouble>& data, bool inverse) {
    const auto n = static_cast<std::int64_t>(data.size());
    const std::size_t m = next_pow2(static_cast<std::size_t>(2 * n - 1));
    const double sgn = inverse ? 1.0 : -1.0;

    // j^2 mod 2n keeps the chirp phase argument small and exact.
    std::vector<cdouble> chirp(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        const std::int64_t q = (j * j) % (2 * n);
        chirp[static_cast<std::size_t>(j)] =
            std::polar(1.0, sgn * pi * static_cast<double>(q) / static_cast<double>(n));
    }

    std::vector<cdouble> a(m, cdouble{});
    for (std::int64_t j = 0; j < n; ++j)
        a[static_cast<std::size_t>(j)] = data[static_cast<std::size_t>(j)] * chirp[static_cast<std::size_t>(j)];

    std::vector<cdouble> b(m, cdouble{});
    b[0] = std::conj(chirp[0]);
    for (std::int64_t j = 1; j < n; ++j) {
        const cdouble v = std::conj(chirp[static_cast<std::size_t>(j)]);
        b[static_cast<std::size_t>(j)] = v;
        b[m - static_cast<std::size_t>(j)] = v;
    }

    mixed_radix(a, false);
    mixed_radix(b, false);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    mixed_radix(a, true);
    const double inv_m = 1.0 / static_cast<double>(m);

    for (std::int64_t k = 0; k < n; ++k)
        data[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * inv_m * chirp[static_cast<std::size_t>(k)];
}

}  // namespace

void transform(std::vector<cdouble>& data, bool inverse) {
    if (data.size() <= 1) return;
    if (largest_prime_factor(static_cast<std::int64_t>(data.size())) > kLargePrime)
        bluestein(data, inverse);
    else
        mixed_radix(data, inverse);
}

}  // namespace hff::fft
