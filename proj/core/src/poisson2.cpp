#include "hff/poisson2.hpp"

#include <cmath>
#include <stdexcept>

#include "hff/special_sums.hpp"

namespace hff {

namespace {

void validate_generators(const FunctionalSpace& space, const std::vector<std::int64_t>& gens) {
    if (static_cast<std::int64_t>(gens.size()) != space.site_count())
        throw std::invalid_argument("need one generator per site");
    for (const std::int64_t s : gens)
        if (s < 1 || space.per_site_size() % s != 0)
            throw std::invalid_argument("every generator must divide N'");
}

// Sum of fn over the subgroup <gen> of its lattice.
cdouble subgroup_sum(const LatticeFn& fn, std::int64_t gen) {
    CompensatedComplexSum acc;
    const std::int64_t order = fn.size() / gen;
    for (std::int64_t j = 0; j < order; ++j) acc.add(fn.at(gen * j));
    return acc.value();
}

}  // namespace

ProductSubgroup make_product_subgroup(const FunctionalSpace& space,
                                      std::vector<std::int64_t> generators) {
    validate_generators(space, generators);
    return {space, std::move(generators)};
}

ProductSubgroup make_product_subgroup(const FunctionalSpace& space, std::int64_t generator) {
    return make_product_subgroup(
        space, std::vector<std::int64_t>(static_cast<std::size_t>(space.site_count()), generator));
}

ProductSubgroup annihilator_product(const ProductSubgroup& y) {
    std::vector<std::int64_t> gens;
    gens.reserve(y.generators.size());
    for (const std::int64_t s : y.generators) gens.push_back(y.space.per_site_size() / s);
    return {y.space, std::move(gens)};
}

bigint product_subgroup_order(const ProductSubgroup& y) {
    bigint n = 1;
    for (const std::int64_t s : y.generators) n *= bigint(y.space.per_site_size() / s);
    return n;
}

bigint functional_space_order(const FunctionalSpace& space) {
    bigint n = 1;
    for (std::int64_t k = 0; k < space.site_count(); ++k) n *= bigint(space.per_site_size());
    return n;
}

std::pair<cdouble, cdouble> poisson_functional_pair(const DenseFunctional& f,
                                                    const ProductSubgroup& y) {
    validate_generators(f.space(), y.generators);
    const std::int64_t sites = f.space().site_count();
    const std::int64_t np = f.space().per_site_size();
    const DenseFunctional ff = forward_dense(f);
    const ProductSubgroup yp = annihilator_product(y);

    // Odometer over the per-site element digits of a product subgroup.
    const auto restrict_sum = [&](const DenseFunctional& t,
                                  const std::vector<std::int64_t>& gens) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(sites));
        double order = 1.0;
        for (std::int64_t k = 0; k < sites; ++k) {
            counts[static_cast<std::size_t>(k)] = np / gens[static_cast<std::size_t>(k)];
            order *= static_cast<double>(counts[static_cast<std::size_t>(k)]);
        }
        std::vector<std::int64_t> digit(static_cast<std::size_t>(sites), 0);
        CompensatedComplexSum acc;
        while (true) {
            std::int64_t idx = 0;
            for (std::int64_t k = sites - 1; k >= 0; --k)
                idx = idx * np + mod_floor(digit[static_cast<std::size_t>(k)] *
                                               gens[static_cast<std::size_t>(k)],
                                           np);
            acc.add(t.table()[static_cast<std::size_t>(idx)]);
            std::int64_t k = 0;
            while (k < sites) {
                auto& d = digit[static_cast<std::size_t>(k)];
                if (++d < counts[static_cast<std::size_t>(k)]) break;
                d = 0;
                ++k;
            }
            if (k == sites) break;
        }
        return std::pair<cdouble, double>{acc.value(), order};
    };

    const auto [top, top_order] = restrict_sum(ff, yp.generators);
    const auto [bottom, bottom_order] = restrict_sum(f, y.generators);
    return {top / std::sqrt(top_order), bottom / std::sqrt(bottom_order)};
}

std::pair<ScaledComplex, ScaledComplex> poisson_functional_pair(const FactoredFunctional& f,
                                                                const ProductSubgroup& y) {
    validate_generators(f.space(), y.generators);
    const std::int64_t np = f.space().per_site_size();
    ScaledComplex lhs, rhs;
    for (std::size_t k = 0; k < f.sites().size(); ++k) {
        const std::int64_t s = y.generators[k];
        const LatticeFn fk = forward(f.sites()[k]);
        // per-site normalized sides: |Y_k^perp| = s, |Y_k| = N'/s
        lhs *= subgroup_sum(fk, np / s) / std::sqrt(static_cast<double>(s));
        rhs *= subgroup_sum(f.sites()[k], s) / std::sqrt(static_cast<double>(np / s));
    }
    return {lhs, rhs};
}

std::vector<ThetaSiteReport> theta_product_report(const FunctionalSpace& space, cdouble xi,
                                                  const std::vector<std::int64_t>& generators) {
    if (!(xi.real() > 0.0)) throw std::invalid_argument("Re(xi) must be positive");
    validate_generators(space, generators);
    const std::int64_t np = space.per_site_size();
    const FactoredFunctional g = gaussian_functional(space, xi);
    std::vector<ThetaSiteReport> rows;
    rows.reserve(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const std::int64_t s = generators[k];
        ThetaSiteReport row;
        row.site = static_cast<std::int64_t>(k) - space.site_count() / 2;
        row.generator = s;
        row.coord_generator = space.site_coord(s);
        row.computed = subgroup_sum(forward(g.sites()[k]), np / s);
        const double u = row.coord_generator;
        row.closed_form = u * theta_sum(xi * u * u);
        row.abs_diff = std::abs(row.computed - row.closed_form);
        rows.push_back(row);
    }
    return rows;
}

std::pair<cdouble, cdouble> scaled_gauss_functional_identity(
    const FunctionalSpace& space, std::int64_t m, const std::vector<std::int64_t>& generators) {
    validate_generators(space, generators);
    const std::int64_t np = space.per_site_size();
    if (m == 0 || (2 * np) % m != 0) throw std::invalid_argument("m must divide 2N'");
    for (const std::int64_t s : generators)
        if ((np / s) % std::abs(m) != 0)
            throw std::invalid_argument("m must divide every annihilator generator N'/s_k");

    const cdouble c = imaginary_gauss_factor(m, 2 * np);
    const double root = std::sqrt(static_cast<double>(np));
    const FactoredFunctional g_im = imaginary_gaussian_functional(space, m);
    const FactoredFunctional g_rec = imaginary_gaussian_reciprocal(space, m);

    ScaledComplex lhs, rhs;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const std::int64_t s = generators[k];
        lhs *= root * c * subgroup_sum(g_rec.sites()[k], np / s);
        rhs *= static_cast<double>(s) * subgroup_sum(g_im.sites()[k], s);
    }
    return {lhs.to_complex(), rhs.to_complex()};
}

}  // namespace hff
