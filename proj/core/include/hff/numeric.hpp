#ifndef HFF_NUMERIC_HPP
#define HFF_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace hff {

using cdouble = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Neumaier-compensated accumulator. Keeps the running error of the naive
// sum in a carry term, so sums of ~1e6 cancelling terms stay near 1 ulp.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(cdouble z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cdouble value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// i^q and (-i)^q for integer q, evaluated by residue mod 4 (no rounding).
inline cdouble i_pow(std::int64_t q) {
    switch (((q % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline cdouble minus_i_pow(std::int64_t q) { return std::conj(i_pow(q)); }

// Exact reduction of q mod n into [0, n).
inline std::int64_t mod_floor(std::int64_t q, std::int64_t n) {
    std::int64_t r = q % n;
    return r < 0 ? r + n : r;
}

// Complex value carried as mantissa * 2^exp2. Products of thousands of
// per-site factors stay representable even when the plain product would
// overflow or underflow a double.
class ScaledComplex {
public:
    ScaledComplex() : mant_(1.0, 0.0) {}
    explicit ScaledComplex(cdouble z) : mant_(z) { normalize(); }

    ScaledComplex& operator*=(cdouble z) {
        mant_ *= z;
        normalize();
        return *this;
    }
    ScaledComplex& operator*=(const ScaledComplex& o) {
        mant_ *= o.mant_;
        exp2_ += o.exp2_;
        normalize();
        return *this;
    }

    // May round to 0 or overflow to inf when the exponent leaves the
    // double range; callers compare against equally-scaled quantities.
    cdouble to_complex() const {
        return {std::ldexp(mant_.real(), static_cast<int>(clamp_exp())),
                std::ldexp(mant_.imag(), static_cast<int>(clamp_exp()))};
    }

    cdouble mantissa() const { return mant_; }
    std::int64_t exponent2() const { return exp2_; }

private:
    std::int64_t clamp_exp() const {
        if (exp2_ > 40000) return 40000;
        if (exp2_ < -40000) return -40000;
        return exp2_;
    }
    void normalize() {
        const double a = std::abs(mant_.real()) + std::abs(mant_.imag());
        if (a == 0.0) {
            exp2_ = 0;
            return;
        }
        int e = 0;
        std::frexp(a, &e);
        if (e > 48 || e < -48) {
            mant_ = {std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e)};
            exp2_ += e;
        }
    }

    cdouble mant_;
    std::int64_t exp2_ = 0;
};

}  // namespace hff

#endif
