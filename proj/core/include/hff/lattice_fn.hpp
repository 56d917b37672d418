#ifndef HFF_LATTICE_FN_HPP
#define HFF_LATTICE_FN_HPP

#include <cstdint>
#include <vector>

#include "hff/lattice.hpp"
#include "hff/numeric.hpp"

namespace hff {

// Complex-valued function on a cyclic lattice. Values are stored in
// z-mod-size order; access by centered index wraps periodically, which is
// exactly the extension of the function to the ambient lattice.
class LatticeFn {
public:
    LatticeFn() = default;
    explicit LatticeFn(CyclicLattice grid)
        : grid_(grid), values_(static_cast<std::size_t>(grid.size)) {}
    LatticeFn(CyclicLattice grid, std::vector<cdouble> values);

    const CyclicLattice& grid() const { return grid_; }
    std::int64_t size() const { return grid_.size; }

    cdouble& at(std::int64_t z) { return values_[grid_.slot(z)]; }
    const cdouble& at(std::int64_t z) const { return values_[grid_.slot(z)]; }

    std::vector<cdouble>& raw() { return values_; }
    const std::vector<cdouble>& raw() const { return values_; }

private:
    CyclicLattice grid_;
    std::vector<cdouble> values_;
};

// Builds phi(z) = f(value(z)) over the whole lattice.
template <typename F>
LatticeFn sample(const CyclicLattice& grid, F&& f) {
    LatticeFn fn(grid);
    for (std::int64_t z = grid.min_index(); z <= grid.max_index(); ++z)
        fn.at(z) = f(grid.value(z));
    return fn;
}

}  // namespace hff

#endif
