#include "hff/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "hff/fft.hpp"

namespace hff {

LatticeFn::LatticeFn(CyclicLattice grid, std::vector<cdouble> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.size))
        throw std::invalid_argument("value vector length must equal the lattice point count");
}

namespace {

LatticeFn transform_impl(const LatticeFn& phi, bool inv) {
    std::vector<cdouble> data = phi.raw();
    fft::transform(data, inv);
    const double w = 1.0 / std::sqrt(static_cast<double>(phi.size()));
    for (auto& v : data) v *= w;
    return {phi.grid(), std::move(data)};
}

}  // namespace

LatticeFn forward(const LatticeFn& phi) { return transform_impl(phi, false); }

LatticeFn inverse(const LatticeFn& phi) { return transform_impl(phi, true); }

LatticeFn convolve(const LatticeFn& phi, const LatticeFn& psi) {
    if (!(phi.grid() == psi.grid()))
        throw std::invalid_argument("convolution operands must share a lattice");
    const std::int64_t m = phi.size();
    const double w = 1.0 / std::sqrt(static_cast<double>(m));
    LatticeFn out(phi.grid());
    for (std::int64_t x = 0; x < m; ++x) {
        CompensatedComplexSum acc;
        for (std::int64_t y = 0; y < m; ++y) acc.add(phi.at(x - y) * psi.at(y));
        out.at(x) = w * acc.value();
    }
    return out;
}

LatticeFn delta(const CyclicLattice& grid) {
    LatticeFn fn(grid);
    fn.at(0) = std::sqrt(static_cast<double>(grid.size));
    return fn;
}

}  // namespace hff
