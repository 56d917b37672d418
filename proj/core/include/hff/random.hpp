#ifndef HFF_RANDOM_HPP
#define HFF_RANDOM_HPP

#include <cstdint>
#include <vector>

#include "hff/numeric.hpp"

namespace hff {

// splitmix64: tiny, seedable, and bit-identical on every platform, which is
// what makes seeded experiment output byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [-1, 1)
    double uniform_signed() {
        return static_cast<double>(next() >> 11) * 0x1p-52 - 1.0;
    }

    cdouble uniform_complex() {
        const double re = uniform_signed();
        return {re, uniform_signed()};
    }

private:
    std::uint64_t state_;
};

inline std::vector<cdouble> random_complex_vector(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<cdouble> v(n);
    for (auto& z : v) z = rng.uniform_complex();
    return v;
}

}  // namespace hff

#endif
