#include "fg/generators.hpp"

#include <string>

namespace fg {

const char* family_name(Family f) {
    switch (f) {
    case Family::Dodecahedron: return "dodecahedron";
    case Family::Nanotube: return "nanotube";
    case Family::LeapfrogIterate: return "leapfrog";
    case Family::HexagonalBarrel: return "hexagonal_barrel";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "dodecahedron") return Family::Dodecahedron;
    if (name == "nanotube") return Family::Nanotube;
    if (name == "leapfrog" || name == "leapfrog_iterate") return Family::LeapfrogIterate;
    if (name == "hexagonal_barrel" || name == "barrel") return Family::HexagonalBarrel;
    return std::nullopt;
}

namespace {

// Tube with polygonal caps: 2k+4 layers of c vertices each.  Layer 0 and
// layer 2k+3 are c-gons; even/odd layer pairs are joined alternately by a
// matching and by a zigzag, which yields c pentagons per cap and k rings of
// c hexagons in between.  c = 5 gives the (5,0) nanotube family (20 + 10k
// vertices), c = 6 with k = 0 gives the C24 hexagonal barrel.
Fullerene barrel_tube(int c, int k) {
    if (k < 0) raise(Err::InvalidArgument, "negative ring count");
    const int layers = 2 * k + 4;
    const int n = c * layers;
    auto id = [c](int layer, int i) { return c * layer + ((i % c) + c) % c; };

    std::vector<std::vector<int>> faces;
    // top polygon, traversed in +i direction
    {
        std::vector<int> f;
        for (int i = 0; i < c; ++i) f.push_back(id(0, i));
        faces.push_back(f);
    }
    // top cap pentagons
    for (int i = 0; i < c; ++i)
        faces.push_back({id(0, i + 1), id(0, i), id(1, i), id(2, i), id(1, i + 1)});
    // body hexagon rings
    for (int m = 1; m <= k; ++m)
        for (int i = 0; i < c; ++i)
            faces.push_back({id(2 * m, i), id(2 * m + 1, i), id(2 * m + 2, i),
                             id(2 * m + 1, i + 1), id(2 * m, i + 1), id(2 * m - 1, i + 1)});
    // bottom cap pentagons
    const int last = layers - 1;
    for (int i = 0; i < c; ++i)
        faces.push_back({id(last, i), id(last, i + 1), id(last - 1, i + 1), id(last - 2, i + 1),
                         id(last - 1, i)});
    // bottom polygon, traversed in -i direction
    {
        std::vector<int> f;
        for (int i = c - 1; i >= 0; --i) f.push_back(id(last, i));
        faces.push_back(f);
    }

    return validate_fullerene(build_from_faces(n, faces));
}

} // namespace

Fullerene nanotube(int rings) { return barrel_tube(5, rings); }

Fullerene dodecahedron() { return barrel_tube(5, 0); }

Fullerene hexagonal_barrel() { return barrel_tube(6, 0); }

Fullerene leapfrog(const CubicPlanarGraph& g) {
    const int n = g.vertex_count();
    FaceStructure fs = trace_face_structure(g);

    // output vertex = dart id 3u + slot
    std::vector<std::vector<int>> faces;
    faces.reserve(fs.faces.size() + n);

    // each input face shrinks to the polygon of its darts
    for (const Face& f : fs.faces) {
        const int len = f.length();
        std::vector<int> cyc(len);
        for (int i = 0; i < len; ++i) {
            int u = f.vertices[i];
            int v = f.vertices[(i + 1) % len];
            cyc[i] = 3 * u + g.slot_of(u, v);
        }
        faces.push_back(std::move(cyc));
    }
    // each input vertex becomes a hexagon alternating its in- and out-darts
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation(v);
        int a = r[0], b = r[1], cc = r[2];
        auto out = [&](int w) { return 3 * v + g.slot_of(v, w); };
        auto in = [&](int w) { return 3 * w + g.slot_of(w, v); };
        faces.push_back({out(a), in(cc), out(cc), in(b), out(b), in(a)});
    }

    return validate_fullerene(build_from_faces(3 * n, faces));
}

Fullerene leapfrog(const Fullerene& f) { return leapfrog(f.graph()); }

Fullerene leapfrog_iterate(int iterations) {
    if (iterations < 0) raise(Err::InvalidArgument, "negative iteration count");
    Fullerene f = dodecahedron();
    for (int i = 0; i < iterations; ++i) f = leapfrog(f);
    return f;
}

Fullerene make_family(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Dodecahedron:
        if (spec.param != 0) raise(Err::InvalidArgument, "dodecahedron takes no parameter");
        return dodecahedron();
    case Family::Nanotube: return nanotube(spec.param);
    case Family::LeapfrogIterate: return leapfrog_iterate(spec.param);
    case Family::HexagonalBarrel:
        if (spec.param != 0) raise(Err::InvalidArgument, "hexagonal_barrel takes no parameter");
        return hexagonal_barrel();
    }
    raise(Err::InvalidArgument, "unknown family");
}

} // namespace fg
