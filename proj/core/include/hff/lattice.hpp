#ifndef HFF_LATTICE_HPP
#define HFF_LATTICE_HPP

#include <cstdint>
#include <vector>

namespace hff {

// Shared index system of both lattice levels: a cyclic group of `size`
// points indexed by centered integers z in [-size/2, size/2), where the
// point with index z sits at the exact rational value z / value_den.
// All kernel arithmetic is done on integer indices mod `size`; centered
// and standard DFT indexing coincide under that reduction.
struct CyclicLattice {
    std::int64_t size = 0;       // number of points
    std::int64_t value_den = 1;  // value(z) = z / value_den

    double step() const { return 1.0 / static_cast<double>(value_den); }
    std::int64_t min_index() const { return -size / 2; }
    std::int64_t max_index() const { return size / 2 - 1; }
    double value(std::int64_t z) const {
        return static_cast<double>(z) / static_cast<double>(value_den);
    }
    // Centered representative of z mod size.
    std::int64_t reduce(std::int64_t z) const {
        std::int64_t r = z % size;
        if (r < -size / 2) r += size;
        if (r >= size / 2) r -= size;
        return r;
    }
    // Storage slot for index z (values are stored in z-mod-size order).
    std::size_t slot(std::int64_t z) const {
        std::int64_t r = z % size;
        if (r < 0) r += size;
        return static_cast<std::size_t>(r);
    }
    // Centered index stored at a slot.
    std::int64_t index_at(std::size_t slot) const {
        auto z = static_cast<std::int64_t>(slot);
        return z >= size / 2 ? z - size : z;
    }

    bool operator==(const CyclicLattice&) const = default;
};

// First-level lattice: step 1/H on [-H/2, H/2), H even, N = H^2 points.
struct Level1Lattice {
    std::int64_t H = 0;
    std::int64_t N = 0;  // H^2

    double epsilon() const { return 1.0 / static_cast<double>(H); }
    CyclicLattice grid() const { return {N, H}; }
};

enum class Level2Mode {
    Plain,    // step 1/H' on [-H'/2, H'/2), N' = H'^2
    Epsilon,  // step 1/H' on [-H*H'/2, H*H'/2), N' = H * H'^2
};

// Second-level lattice: the value lattice for functional arguments.
struct Level2Lattice {
    Level2Mode mode = Level2Mode::Plain;
    std::int64_t Hp = 0;
    std::int64_t host_H = 0;  // level-1 H; used in Epsilon mode
    std::int64_t Np = 0;

    double epsilon_p() const { return 1.0 / static_cast<double>(Hp); }
    CyclicLattice grid() const { return {Np, Hp}; }
};

Level1Lattice make_level1(std::int64_t H);
Level2Lattice make_level2(Level2Mode mode, std::int64_t Hp, const Level1Lattice& host);
// Plain mode does not need a host lattice.
Level2Lattice make_level2(std::int64_t Hp);

// Cyclic subgroup generated by index step s (s | size), together with the
// lattice it lives on. The annihilator under the pairing
// exp(-2 pi i z_p z_x / size) is the subgroup generated by size / s.
struct SubgroupSpec {
    CyclicLattice lattice;
    std::int64_t s = 1;      // generator step
    std::int64_t order = 0;  // size / s

    // Centered indices of the elements, ascending.
    std::vector<std::int64_t> elements() const;
};

SubgroupSpec subgroup(const CyclicLattice& lattice, std::int64_t s);
SubgroupSpec annihilator(const SubgroupSpec& s);

}  // namespace hff

#endif
