#ifndef HFF_FFT_HPP
#define HFF_FFT_HPP

#include <cstddef>
#include <vector>

#include "hff/numeric.hpp"

namespace hff::fft {

// In-place DFT of arbitrary length:
//   forward:  X[k] = sum_j exp(-2 pi i j k / n) x[j]
//   inverse:  X[k] = sum_j exp(+2 pi i j k / n) x[j]
// No 1/n or 1/sqrt(n) factor is applied; callers own the normalization.
// Lengths whose prime factors are all small run through a mixed-radix
// Cooley-Tukey; anything with a large prime factor falls back to a
// Bluestein chirp-z over a power-of-two.
void transform(std::vector<cdouble>& data, bool inverse);

inline void forward(std::vector<cdouble>& data) { transform(data, false); }
inline void inverse(std::vector<cdouble>& data) { transform(data, true); }

}  // namespace hff::fft

#endif
