#ifndef HFF_SPECIAL_SUMS_HPP
#define HFF_SPECIAL_SUMS_HPP

#include <cstdint>
#include <variant>

#include "hff/lattice_fn.hpp"

namespace hff {

// Parameter of a Gaussian kernel: either generic xi with Re(xi) > 0, or the
// pure-imaginary form xi = i*m with a nonzero integer m.
class GaussianParam {
public:
    static GaussianParam general(cdouble xi);
    static GaussianParam imaginary(std::int64_t m);

    bool is_imaginary() const { return std::holds_alternative<std::int64_t>(v_); }
    cdouble xi() const { return std::get<cdouble>(v_); }
    std::int64_t m() const { return std::get<std::int64_t>(v_); }

private:
    std::variant<cdouble, std::int64_t> v_;
};

// sum_{l=0}^{z-1} exp(sign * 2 pi i l^2 / z), compensated term-by-term.
cdouble gauss_sum_direct(std::int64_t z, int sign);

// sqrt(z) (1 + (-i)^z) / (1 - i). Equals gauss_sum_direct(z, +1); the
// conjugate sum is gauss_sum_direct(z, -1).
cdouble gauss_sum_closed(std::int64_t z);

// Closed form of the unit-weight quadratic character sum
//   (1/sqrt(Q/2)) sum_{z mod Q/2} exp(-2 pi i (m/Q) z^2)
// for m | Q (Q even):  m > 0 -> sqrt(m/2)  (1 + i^(Q/m))    / (1 + i)
//                      m < 0 -> sqrt(-m/2) (1 + (-i)^(Q/|m|)) / (1 - i).
// Level 1 uses Q = 2H^2; the functional per-site factors use Q = 2N'.
cdouble imaginary_gauss_factor(std::int64_t m, std::int64_t modulus_q);

// c_xi(p) = sum_{x in L} epsilon exp(-xi pi (x + (i/xi) p)^2), Re(xi) > 0,
// for the lattice point p with centered index z_p. The defining sum is
// evaluated directly while well conditioned; once the cancellation scale
// exp(pi p^2 Re(1/xi)) gets large the same value is assembled from the
// Poisson image series minus the two window tails, which are individually
// stable at any p in the window.
cdouble gaussian_coefficient(const Level1Lattice& lattice, cdouble xi, std::int64_t z_p);

// The whole coefficient table p -> c_xi(p) as a lattice function.
LatticeFn gaussian_coefficient_table(const Level1Lattice& lattice, cdouble xi);

// c_im of Proposition-2.3 shape on the level-1 lattice: requires m != 0 and
// m | 2H^2; value imaginary_gauss_factor(m, 2H^2).
cdouble imaginary_gaussian_coefficient(const Level1Lattice& lattice, std::int64_t m);

// theta(i xi) = sum_{n in Z} exp(-xi pi n^2), Re(xi) > 0.
// The cutoff M satisfies the tail bound 2 exp(-a pi M^2) / (1 - exp(-a pi))
// < 1e-14 with a = Re(xi); for very flat Gaussians (a < 0.05) the modular
// identity theta(i xi) = xi^(-1/2) theta(i/xi) is applied first.
cdouble theta_sum(cdouble xi);

// Riemann sum of exp(-pi xi (x + i shift/xi)^2) with the given step over
// [-halfwidth, halfwidth). Converges to 1/sqrt(xi) as step -> 0 and
// halfwidth -> infinity, for any fixed real shift.
cdouble per_site_gauss_factor(cdouble xi, double shift, double step, double halfwidth);

}  // namespace hff

#endif
