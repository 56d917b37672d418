#include "hff/functional.hpp"

#include <cmath>
#include <stdexcept>

#include "hff/fft.hpp"
#include "hff/special_sums.hpp"

namespace hff {

double FunctionalSpace::per_site_weight() const {
    return 1.0 / std::sqrt(static_cast<double>(per_site_size()));
}

std::int64_t FunctionalSpace::dense_size() const {
    std::int64_t total = 1;
    for (std::int64_t k = 0; k < site_count(); ++k) {
        if (total > dense_limit / per_site_size())
            throw std::length_error("dense functional table exceeds the configured limit");
        total *= per_site_size();
    }
    return total;
}

bool FunctionalSpace::dense_viable() const {
    std::int64_t total = 1;
    for (std::int64_t k = 0; k < site_count(); ++k) {
        if (total > dense_limit / per_site_size()) return false;
        total *= per_site_size();
    }
    return true;
}

double FunctionalSpace::site_coord(std::int64_t z) const {
    return static_cast<double>(z) / std::sqrt(static_cast<double>(per_site_size()));
}

FunctionalSpace make_space(const Level1Lattice& level1, std::int64_t Hp, Level2Mode mode,
                           std::int64_t dense_limit) {
    FunctionalSpace s;
    s.level1 = level1;
    s.level2 = make_level2(mode, Hp, level1);
    s.dense_limit = dense_limit;
    return s;
}

DenseFunctional::DenseFunctional(const FunctionalSpace& space)
    : space_(space), table_(static_cast<std::size_t>(space.dense_size())) {}

std::int64_t DenseFunctional::encode(const FunctionalPoint& a) const {
    if (static_cast<std::int64_t>(a.size()) != space_.site_count())
        throw std::invalid_argument("point has wrong number of sites");
    const CyclicLattice g = space_.site_grid();
    std::int64_t idx = 0;
    for (std::int64_t k = space_.site_count() - 1; k >= 0; --k)
        idx = idx * g.size + static_cast<std::int64_t>(g.slot(a[static_cast<std::size_t>(k)]));
    return idx;
}

FunctionalPoint DenseFunctional::decode(std::int64_t idx) const {
    const CyclicLattice g = space_.site_grid();
    FunctionalPoint a(static_cast<std::size_t>(space_.site_count()));
    for (std::int64_t k = 0; k < space_.site_count(); ++k) {
        a[static_cast<std::size_t>(k)] = g.index_at(static_cast<std::size_t>(idx % g.size));
        idx /= g.size;
    }
    return a;
}

FactoredFunctional::FactoredFunctional(const FunctionalSpace& space, std::vector<LatticeFn> sites)
    : space_(space), sites_(std::move(sites)) {
    if (static_cast<std::int64_t>(sites_.size()) != space_.site_count())
        throw std::invalid_argument("factored functional needs one factor per site");
    for (const auto& s : sites_)
        if (s.size() != space_.per_site_size())
            throw std::invalid_argument("per-site factor has wrong length");
}

cdouble FactoredFunctional::value(const FunctionalPoint& a) const {
    return scaled_value(a).to_complex();
}

ScaledComplex FactoredFunctional::scaled_value(const FunctionalPoint& a) const {
    if (a.size() != sites_.size()) throw std::invalid_argument("point has wrong number of sites");
    ScaledComplex prod;
    for (std::size_t k = 0; k < sites_.size(); ++k) prod *= sites_[k].at(a[k]);
    return prod;
}

namespace {

// Apply the length-N' unitary DFT along every site axis of the table.
void axis_transforms(std::vector<cdouble>& t, std::int64_t sites, std::int64_t np, bool inv) {
    const auto total = static_cast<std::int64_t>(t.size());
    const double w = 1.0 / std::sqrt(static_cast<double>(np));
    std::vector<cdouble> fiber(static_cast<std::size_t>(np));
    std::int64_t stride = 1;
    for (std::int64_t k = 0; k < sites; ++k) {
        const std::int64_t block = stride * np;
        for (std::int64_t b0 = 0; b0 < total; b0 += block) {
            for (std::int64_t i = 0; i < stride; ++i) {
                for (std::int64_t j = 0; j < np; ++j)
                    fiber[static_cast<std::size_t>(j)] =
                        t[static_cast<std::size_t>(b0 + i + j * stride)];
                fft::transform(fiber, inv);
                for (std::int64_t j = 0; j < np; ++j)
                    t[static_cast<std::size_t>(b0 + i + j * stride)] =
                        w * fiber[static_cast<std::size_t>(j)];
            }
        }
        stride = block;
    }
}

DenseFunctional dense_transform(const DenseFunctional& f, bool inv) {
    DenseFunctional out = f;
    axis_transforms(out.table(), f.space().site_count(), f.space().per_site_size(), inv);
    return out;
}

constexpr std::int64_t kDirectConvolutionCap = std::int64_t{1} << 12;

}  // namespace

DenseFunctional forward_dense(const DenseFunctional& f) { return dense_transform(f, false); }

DenseFunctional inverse_dense(const DenseFunctional& f) { return dense_transform(f, true); }

DenseFunctional convolve_dense(const DenseFunctional& f, const DenseFunctional& g) {
    if (f.space().site_grid().size != g.space().site_grid().size ||
        f.space().site_count() != g.space().site_count())
        throw std::invalid_argument("convolution operands must share a space");
    const std::int64_t total = f.size();
    const std::int64_t sites = f.space().site_count();
    const std::int64_t np = f.space().per_site_size();
    if (total > kDirectConvolutionCap) {
        // f * g = inverse(forward(f) forward(g)); identical to the direct
        // sum up to rounding, validated against it on small spaces.
        DenseFunctional ff = forward_dense(f);
        const DenseFunctional fg = forward_dense(g);
        for (std::int64_t i = 0; i < total; ++i)
            ff.table()[static_cast<std::size_t>(i)] *= fg.table()[static_cast<std::size_t>(i)];
        return inverse_dense(ff);
    }
    const double eps0 = std::pow(f.space().per_site_weight(), static_cast<double>(sites));
    // Per-axis difference tables: dsub[d][e] = (d - e) mod np as a digit.
    std::vector<std::int64_t> dsub(static_cast<std::size_t>(np * np));
    for (std::int64_t d = 0; d < np; ++d)
        for (std::int64_t e = 0; e < np; ++e)
            dsub[static_cast<std::size_t>(d * np + e)] = mod_floor(d - e, np);
    DenseFunctional out = f;
    std::vector<std::int64_t> da(static_cast<std::size_t>(sites));
    for (std::int64_t ia = 0; ia < total; ++ia) {
        std::int64_t rest = ia;
        for (std::int64_t k = 0; k < sites; ++k) {
            da[static_cast<std::size_t>(k)] = rest % np;
            rest /= np;
        }
        CompensatedComplexSum acc;
        for (std::int64_t ib = 0; ib < total; ++ib) {
            std::int64_t diff = 0, r = ib;
            std::int64_t weight = 1;
            for (std::int64_t k = 0; k < sites; ++k) {
                const std::int64_t db = r % np;
                r /= np;
                diff += weight * dsub[static_cast<std::size_t>(da[static_cast<std::size_t>(k)] * np + db)];
                weight *= np;
            }
            acc.add(f.table()[static_cast<std::size_t>(diff)] *
                    g.table()[static_cast<std::size_t>(ib)]);
        }
        out.table()[static_cast<std::size_t>(ia)] = eps0 * acc.value();
    }
    return out;
}

cdouble inner_product(const DenseFunctional& f, const DenseFunctional& g) {
    if (f.size() != g.size()) throw std::invalid_argument("inner product needs equal tables");
    const double eps0 =
        std::pow(f.space().per_site_weight(), static_cast<double>(f.space().site_count()));
    CompensatedComplexSum acc;
    for (std::int64_t i = 0; i < f.size(); ++i)
        acc.add(std::conj(f.table()[static_cast<std::size_t>(i)]) *
                g.table()[static_cast<std::size_t>(i)]);
    return eps0 * acc.value();
}

DenseFunctional delta_functional(const FunctionalSpace& space) {
    DenseFunctional d(space);
    d.table()[0] = std::pow(static_cast<double>(space.per_site_size()),
                            static_cast<double>(space.site_count()) / 2.0);
    return d;
}

double delta_power_transform(const FunctionalSpace& space, double l) {
    if (!(l > 0.0)) throw std::invalid_argument("delta power exponent must be positive");
    const double h2 = static_cast<double>(space.site_count());
    return std::pow(static_cast<double>(space.per_site_size()), (l - 1.0) * h2 / 2.0);
}

FactoredFunctional forward_factored(const FactoredFunctional& f) {
    std::vector<LatticeFn> out;
    out.reserve(f.sites().size());
    for (const auto& s : f.sites()) out.push_back(forward(s));
    return {f.space(), std::move(out)};
}

FactoredFunctional inverse_factored(const FactoredFunctional& f) {
    std::vector<LatticeFn> out;
    out.reserve(f.sites().size());
    for (const auto& s : f.sites()) out.push_back(inverse(s));
    return {f.space(), std::move(out)};
}

DenseFunctional densify(const FactoredFunctional& f) {
    DenseFunctional out(f.space());
    const std::int64_t total = out.size();
    const std::int64_t sites = f.space().site_count();
    const std::int64_t np = f.space().per_site_size();
    for (std::int64_t i = 0; i < total; ++i) {
        cdouble v = 1.0;
        std::int64_t r = i;
        for (std::int64_t k = 0; k < sites; ++k) {
            v *= f.sites()[static_cast<std::size_t>(k)].raw()[static_cast<std::size_t>(r % np)];
            r /= np;
        }
        out.table()[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

FactoredFunctional gaussian_functional(const FunctionalSpace& space, cdouble xi) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    const CyclicLattice g = space.site_grid();
    LatticeFn site(g);
    for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z) {
        const double x = space.site_coord(z);
        site.at(z) = std::exp(-pi * xi * x * x);
    }
    return {space, std::vector<LatticeFn>(static_cast<std::size_t>(space.site_count()), site)};
}

namespace {

// exp(-i pi m z^2 / N') with the phase residue i pi (m z^2 mod 2N') / N'
// taken exactly in integers.
LatticeFn imaginary_site(const FunctionalSpace& space, std::int64_t num, std::int64_t den_scale) {
    const CyclicLattice g = space.site_grid();
    const std::int64_t np = g.size;
    LatticeFn site(g);
    for (std::int64_t z = g.min_index(); z <= g.max_index(); ++z) {
        const std::int64_t q = mod_floor(num * z * z, 2 * np * den_scale);
        site.at(z) = std::polar(1.0, -pi * static_cast<double>(q) /
                                          static_cast<double>(np * den_scale));
    }
    return site;
}

}  // namespace

FactoredFunctional imaginary_gaussian_functional(const FunctionalSpace& space, std::int64_t m) {
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    LatticeFn site = imaginary_site(space, m, 1);
    return {space, std::vector<LatticeFn>(static_cast<std::size_t>(space.site_count()), site)};
}

FactoredFunctional imaginary_gaussian_reciprocal(const FunctionalSpace& space, std::int64_t m) {
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    if ((2 * space.per_site_size()) % m != 0)
        throw std::invalid_argument("m must divide 2N'");
    // exp(+i pi z^2 / (m N')) = conj of imaginary_site with num=1, den=m
    LatticeFn site = imaginary_site(space, -1, std::abs(m));
    if (m < 0)
        for (auto& v : site.raw()) v = std::conj(v);
    return {space, std::vector<LatticeFn>(static_cast<std::size_t>(space.site_count()), site)};
}

cdouble functional_gauss_coefficient(const FunctionalSpace& space, cdouble xi,
                                     const FunctionalPoint& b) {
    if (static_cast<std::int64_t>(b.size()) != space.site_count())
        throw std::invalid_argument("point has wrong number of sites");
    const double root = std::sqrt(static_cast<double>(space.per_site_size()));
    const double step = 1.0 / root;
    const double halfwidth = root / 2.0;
    ScaledComplex prod;
    for (const std::int64_t zb : b)
        prod *= per_site_gauss_factor(xi, space.site_coord(zb), step, halfwidth);
    return prod.to_complex();
}

cdouble imaginary_functional_coefficient(const FunctionalSpace& space, std::int64_t m,
                                         const FunctionalPoint& b) {
    if (static_cast<std::int64_t>(b.size()) != space.site_count())
        throw std::invalid_argument("point has wrong number of sites");
    const std::int64_t q = 2 * space.per_site_size();
    if (m == 0 || q % m != 0) throw std::invalid_argument("m must divide 2N'");
    for (const std::int64_t zb : b)
        if (zb % m != 0)
            throw std::invalid_argument("every b(k)/epsilon' must be divisible by m");
    const cdouble factor = imaginary_gauss_factor(m, q);
    ScaledComplex prod;
    for (std::int64_t k = 0; k < space.site_count(); ++k) prod *= factor;
    return prod.to_complex();
}

}  // namespace hff
