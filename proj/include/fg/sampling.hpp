#pragma once

// Patch sampling: dual-ball and randomly grown face regions, plus targeted
// searches for specific patch shapes (flowers, strips, worms, shells,
// paired-4-chord regions).  Deterministic under a caller-supplied RNG.

#include <cstdint>
#include <optional>
#include <vector>

#include "fg/patch.hpp"

namespace fg {

// xorshift-based deterministic RNG; stable across platforms and stdlibs
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state_ = x;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

private:
    std::uint64_t state_;
};

// faces within dual distance `radius` of `center`
std::vector<int> face_ball(const Fullerene& f, int center, int radius);

// boundary of an edge-connected face set, when it is one plain cycle
std::optional<std::vector<int>> region_boundary_cycle(const Fullerene& f,
                                                      const std::vector<int>& faces);

// patch whose interior is exactly `faces`; nullopt when the set is not
// edge-connected or its border is not a single cycle
std::optional<Patch> region_patch(const Fullerene& f, const std::vector<int>& faces);

// patch on the complementary side of the same border
std::optional<Patch> complement_patch(const Fullerene& f, const std::vector<int>& faces);

// random edge-connected face set grown from a random seed face
std::vector<int> grow_region(const Fullerene& f, Rng& rng, int target_faces);

// hexagon with six hexagon neighbors -> the 18-cycle flower patch
std::optional<Patch> find_hexagon_flower(const Fullerene& f);

// straight strip of `hexagons` collinear hexagons (a slim worm)
std::optional<Patch> find_hex_strip(const Fullerene& f, int hexagons);

// all faces around an interior path of `path_len` edges (a fat worm for
// path_len <= 1; longer spines when the surroundings stay hexagonal)
std::optional<Patch> find_face_corona_around_path(const Fullerene& f, int path_len);

// six hexagons around a claw (the shell)
std::optional<Patch> find_shell(const Fullerene& f);

// two adjacent hexagons plus their side neighbors, minus the two end faces:
// a patch holding a paired-4-chord simplifying cut
std::optional<Patch> find_double_flower_cut_patch(const Fullerene& f);

} // namespace fg
