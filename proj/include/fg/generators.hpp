#pragma once

// Parameterized fullerene families.  All constructions are pure
// rotation-system transforms assembled from explicit oriented face lists, so
// the output is deterministic and validated on the way out.

#include <optional>
#include <string>

#include "fg/planar_graph.hpp"

namespace fg {

enum class Family { Dodecahedron, Nanotube, LeapfrogIterate, HexagonalBarrel };

struct FamilySpec {
    Family family = Family::Dodecahedron;
    int param = 0; // tube rings k, or leapfrog iteration count m
};

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// the (5,0) nanotube: two 6-pentagon caps joined by `rings` rings of 5
// hexagons; rings = 0 degenerates to the dodecahedron (n = 20 + 10k)
Fullerene nanotube(int rings);

Fullerene dodecahedron(); // n = 20

// C24: two hexagonal caps, 12 pentagons in two rings of 6
Fullerene hexagonal_barrel();

// leapfrog transform on the rotation system: vertices of the output are the
// darts of the input; n' = 3n, pentagon count is preserved and the output
// pentagons are pairwise vertex-disjoint
Fullerene leapfrog(const CubicPlanarGraph& g);
Fullerene leapfrog(const Fullerene& f);

Fullerene leapfrog_iterate(int iterations); // leapfrog^m(dodecahedron)

Fullerene make_family(const FamilySpec& spec);

} // namespace fg
