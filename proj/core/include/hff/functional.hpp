#ifndef HFF_FUNCTIONAL_HPP
#define HFF_FUNCTIONAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hff/fourier.hpp"
#include "hff/lattice.hpp"
#include "hff/lattice_fn.hpp"

namespace hff {

// Configuration point a in X: one centered level-2 index per site k of the
// level-1 lattice, sites ordered by ascending k.
using FunctionalPoint = std::vector<std::int64_t>;

// The space X of maps from the level-1 lattice into the level-2 lattice,
// together with the normalization that makes the functional transform
// unitary. In both modes the per-site kernel is exp(-2 pi i z_a z_b / N')
// with the per-site weight 1/sqrt(N'); Plain and Epsilon differ only in
// what N' is (H'^2 vs H H'^2), which is exactly the difference between the
// plain pairing <a,b> and the epsilon-scaled pairing.
struct FunctionalSpace {
    Level1Lattice level1;
    Level2Lattice level2;
    std::int64_t dense_limit = std::int64_t{1} << 20;

    Level2Mode mode() const { return level2.mode; }
    std::int64_t site_count() const { return level1.N; }
    std::int64_t per_site_size() const { return level2.Np; }
    CyclicLattice site_grid() const { return level2.grid(); }
    double per_site_weight() const;  // 1/sqrt(N')

    // N'^(H^2) when it fits under dense_limit; throws otherwise.
    std::int64_t dense_size() const;
    bool dense_viable() const;

    // x-coordinate of a per-site index in the sqrt(eps)-scaled variable the
    // Gaussian functionals live in: x = z / sqrt(N').
    double site_coord(std::int64_t z) const;
};

FunctionalSpace make_space(const Level1Lattice& level1, std::int64_t Hp, Level2Mode mode,
                           std::int64_t dense_limit = std::int64_t{1} << 20);

// Full table over X, indexed by mixed-radix digits (one per site, radix N').
class DenseFunctional {
public:
    explicit DenseFunctional(const FunctionalSpace& space);

    const FunctionalSpace& space() const { return space_; }
    std::vector<cdouble>& table() { return table_; }
    const std::vector<cdouble>& table() const { return table_; }
    std::int64_t size() const { return static_cast<std::int64_t>(table_.size()); }

    std::int64_t encode(const FunctionalPoint& a) const;
    FunctionalPoint decode(std::int64_t idx) const;

    cdouble& at(const FunctionalPoint& a) { return table_[static_cast<std::size_t>(encode(a))]; }
    const cdouble& at(const FunctionalPoint& a) const {
        return table_[static_cast<std::size_t>(encode(a))];
    }

private:
    FunctionalSpace space_;
    std::vector<cdouble> table_;
};

// Site-factorized functional f(a) = prod_k f_k(a(k)).
class FactoredFunctional {
public:
    FactoredFunctional(const FunctionalSpace& space, std::vector<LatticeFn> sites);

    const FunctionalSpace& space() const { return space_; }
    const std::vector<LatticeFn>& sites() const { return sites_; }
    std::vector<LatticeFn>& sites() { return sites_; }

    cdouble value(const FunctionalPoint& a) const;
    ScaledComplex scaled_value(const FunctionalPoint& a) const;

private:
    FunctionalSpace space_;
    std::vector<LatticeFn> sites_;
};

// The functional transform on dense tables: the tensor power of the
// per-site unitary kernel, applied axis by axis. Equals the defining sum
// (F f)(b) = sum_a eps0 exp(-2 pi i <a,b>) f(a) to rounding.
DenseFunctional forward_dense(const DenseFunctional& f);
DenseFunctional inverse_dense(const DenseFunctional& f);

// eps0-weighted convolution on A. Direct quadratic evaluation up to an
// internal size threshold, spectral route above it; the two agree to
// rounding and the direct route is what the small-space tests pin down.
DenseFunctional convolve_dense(const DenseFunctional& f, const DenseFunctional& g);

// (f, g) = sum_b eps0 conj(f(b)) g(b).
cdouble inner_product(const DenseFunctional& f, const DenseFunctional& g);

// delta(0) = N'^(H^2/2) = 1/eps0, zero elsewhere; F(delta) = 1, F(1) = delta.
DenseFunctional delta_functional(const FunctionalSpace& space);

// F(delta^l) is the constant eps0 * delta(0)^l = N'^((l-1) H^2 / 2); returns
// that constant. l must be positive.
double delta_power_transform(const FunctionalSpace& space, double l);

// Per-site transform of a product functional: F(prod f_k) = prod F_k(f_k).
FactoredFunctional forward_factored(const FactoredFunctional& f);
FactoredFunctional inverse_factored(const FactoredFunctional& f);

DenseFunctional densify(const FactoredFunctional& f);

// g_xi(a) = exp(-pi xi sum_k x_k^2) in the site coordinate x = z/sqrt(N'),
// which reads exp(-pi xi eps sum a(k)^2) in Epsilon mode and
// exp(-pi xi sum a(k)^2) in Plain mode. Re(xi) > 0.
FactoredFunctional gaussian_functional(const FunctionalSpace& space, cdouble xi);

// g_im(a): per-site factor exp(-i pi m z^2 / N'), phases reduced mod 2N'.
FactoredFunctional imaginary_gaussian_functional(const FunctionalSpace& space, std::int64_t m);

// g_{1/(i m)}(b): per-site factor exp(+i pi z^2 / (m N')); the image side of
// the imaginary-Gaussian transform identity. Requires m | 2N'.
FactoredFunctional imaginary_gaussian_reciprocal(const FunctionalSpace& space, std::int64_t m);

// C_xi(b) (Epsilon) / B_xi(b) (Plain): the coefficient in
// (F g_xi)(b) = C_xi(b) g_xi(b/xi), evaluated as the exact factorization
// into H^2 shifted per-site Gaussian sums.
cdouble functional_gauss_coefficient(const FunctionalSpace& space, cdouble xi,
                                     const FunctionalPoint& b);

// C_im(b) / B_im(b): requires m | 2N' and m | z_b(k) for every site; the
// value is the 2N'-modulus character-sum factor raised to the H^2-th power.
cdouble imaginary_functional_coefficient(const FunctionalSpace& space, std::int64_t m,
                                         const FunctionalPoint& b);

}  // namespace hff

#endif
