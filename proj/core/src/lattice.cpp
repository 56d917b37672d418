#include "hff/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hff {

Level1Lattice make_level1(std::int64_t H) {
    if (H < 2 || H % 2 != 0) throw std::invalid_argument("H must be even");
    return {H, H * H};
}

Level2Lattice make_level2(Level2Mode mode, std::int64_t Hp, const Level1Lattice& host) {
    if (Hp < 2 || Hp % 2 != 0) throw std::invalid_argument("H' must be even");
    Level2Lattice l2;
    l2.mode = mode;
    l2.Hp = Hp;
    l2.host_H = host.H;
    l2.Np = mode == Level2Mode::Plain ? Hp * Hp : host.H * Hp * Hp;
    return l2;
}

Level2Lattice make_level2(std::int64_t Hp) {
    if (Hp < 2 || Hp % 2 != 0) throw std::invalid_argument("H' must be even");
    return {Level2Mode::Plain, Hp, 0, Hp * Hp};
}

std::vector<std::int64_t> SubgroupSpec::elements() const {
    std::vector<std::int64_t> zs;
    zs.reserve(static_cast<std::size_t>(order));
    for (std::int64_t j = 0; j < order; ++j) zs.push_back(lattice.reduce(s * j));
    std::sort(zs.begin(), zs.end());
    return zs;
}

SubgroupSpec subgroup(const CyclicLattice& lattice, std::int64_t s) {
    if (s < 1 || lattice.size % s != 0)
        throw std::invalid_argument("subgroup step must divide the lattice order");
    return {lattice, s, lattice.size / s};
}

SubgroupSpec annihilator(const SubgroupSpec& sg) {
    return {sg.lattice, sg.lattice.size / sg.s, sg.s};
}

}  // namespace hff
