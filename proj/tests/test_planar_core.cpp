#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "fg/generators.hpp"
#include "fg/planar_graph.hpp"

using namespace fg;

namespace {

// consistently oriented tetrahedron
const std::vector<std::vector<int>> kK4 = {{1, 3, 2}, {0, 2, 3}, {1, 0, 3}, {2, 0, 1}};

bool check_err(const Error& e, Err code) { return e.code() == code; }

} // namespace

TEST_CASE("K4 builds and traces four triangles") {
    CubicPlanarGraph g = build_graph(kK4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    auto faces = trace_faces(g);
    REQUIRE(faces.size() == 4);
    for (const Face& f : faces) CHECK(f.length() == 3);
}

TEST_CASE("build_graph rejects malformed rotation tables") {
    SUBCASE("asymmetric adjacency") {
        // triangular prism, except vertex 1 omits 0 from its list
        std::vector<std::vector<int>> rot = {{1, 2, 3}, {2, 4, 5}, {0, 1, 5},
                                             {4, 5, 0}, {3, 5, 1}, {3, 4, 2}};
        try {
            build_graph(rot);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(check_err(e, Err::AsymmetricAdjacency));
        }
    }
    SUBCASE("loops rejected") {
        std::vector<std::vector<int>> rot = {{0, 1, 2}, {0, 2, 3}, {1, 0, 3}, {2, 0, 1}};
        try {
            build_graph(rot);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::LoopOrMultiEdge);
        }
    }
    SUBCASE("non-cubic rejected") {
        std::vector<std::vector<int>> rot = {{1, 2}, {0, 2}, {1, 0, 3}, {2}};
        try {
            build_graph(rot);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::NonCubic);
        }
    }
    SUBCASE("disconnected rejected") {
        std::vector<std::vector<int>> rot;
        for (int copy = 0; copy < 2; ++copy)
            for (const auto& r : kK4) {
                std::vector<int> shifted;
                for (int v : r) shifted.push_back(v + 4 * copy);
                rot.push_back(shifted);
            }
        try {
            build_graph(rot);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::Disconnected);
        }
    }
    SUBCASE("too small rejected") {
        CHECK_THROWS_AS(build_graph({{1, 2, 0}}), Error);
    }
    SUBCASE("reversed rotation at one vertex is not planar") {
        std::vector<std::vector<int>> rot = kK4;
        std::swap(rot[3][1], rot[3][2]);
        try {
            build_graph(rot);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::NonPlanar);
        }
    }
}

TEST_CASE("face tracing partitions darts and satisfies Euler") {
    auto check_graph = [](const CubicPlanarGraph& g) {
        auto fs = trace_face_structure(g);
        long long total = 0;
        for (const Face& f : fs.faces) total += f.length();
        CHECK(total == 2 * g.edge_count());
        CHECK(g.vertex_count() - g.edge_count() + static_cast<int>(fs.faces.size()) == 2);
        for (int d = 0; d < g.dart_count(); ++d) CHECK(fs.face_of_dart[d] >= 0);
    };
    check_graph(build_graph(kK4));
    check_graph(dodecahedron().graph());
    check_graph(nanotube(4).graph());
    check_graph(hexagonal_barrel().graph());
    check_graph(leapfrog_iterate(1).graph());
}

TEST_CASE("validate_fullerene") {
    SUBCASE("dodecahedron") {
        Fullerene f = dodecahedron();
        CHECK(f.n() == 20);
        CHECK(f.pentagons().size() == 12);
        CHECK(f.hexagon_count() == 0);
        CHECK(f.face_count() == 12);
    }
    SUBCASE("K4 has bad face lengths") {
        try {
            validate_fullerene(build_graph(kK4));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::BadFaceLength);
        }
    }
    SUBCASE("hexagonal barrel: n=24, 12 pentagons, 2 hexagons") {
        Fullerene f = hexagonal_barrel();
        CHECK(f.n() == 24);
        CHECK(f.pentagons().size() == 12);
        CHECK(f.hexagon_count() == 2);
        // Euler cross-check: hexagons = n/2 - 10
        CHECK(f.hexagon_count() == f.n() / 2 - 10);
    }
    SUBCASE("hexagon count identity across families") {
        for (const Fullerene& f :
             {nanotube(0), nanotube(1), nanotube(7), leapfrog_iterate(1), leapfrog_iterate(2)})
            CHECK(f.hexagon_count() == f.n() / 2 - 10);
    }
}

TEST_CASE("dual graph") {
    SUBCASE("dodecahedron dual is the icosahedron") {
        Fullerene f = dodecahedron();
        DualGraph d = build_dual(f);
        CHECK(d.node_count() == 12);
        CHECK(d.edges().size() == 30);
        for (int i = 0; i < 12; ++i) CHECK(d.degree(i) == 5);
    }
    SUBCASE("barrel dual: hexagon nodes have degree 6") {
        Fullerene f = hexagonal_barrel();
        DualGraph d = build_dual(f);
        CHECK(d.node_count() == 14);
        int deg6 = 0;
        for (int i = 0; i < d.node_count(); ++i)
            if (d.degree(i) == 6) ++deg6;
        CHECK(deg6 == 2);
    }
    SUBCASE("dual degrees equal face lengths; primal annotation is a bijection") {
        for (const Fullerene& f : {dodecahedron(), nanotube(3), leapfrog_iterate(1)}) {
            DualGraph d = build_dual(f);
            CHECK(static_cast<int>(d.edges().size()) == f.m());
            for (int i = 0; i < d.node_count(); ++i) CHECK(d.degree(i) == f.face(i).length());
            std::set<Edge> primals;
            for (const DualEdge& e : d.edges()) primals.insert(e.primal);
            CHECK(static_cast<int>(primals.size()) == f.m());
        }
    }
}

TEST_CASE("is_bipartite") {
    SUBCASE("hexagon cycle") {
        std::vector<std::vector<int>> adj(6);
        for (int i = 0; i < 6; ++i) {
            adj[i].push_back((i + 1) % 6);
            adj[(i + 1) % 6].push_back(i);
        }
        auto res = is_bipartite(adj);
        CHECK(res.bipartite);
        for (int i = 0; i < 6; ++i)
            for (int j : adj[i]) CHECK(res.coloring[i] != res.coloring[j]);
    }
    SUBCASE("pentagon cycle yields an odd witness of length 5") {
        std::vector<std::vector<int>> adj(5);
        for (int i = 0; i < 5; ++i) {
            adj[i].push_back((i + 1) % 5);
            adj[(i + 1) % 5].push_back(i);
        }
        auto res = is_bipartite(adj);
        REQUIRE_FALSE(res.bipartite);
        CHECK(res.odd_cycle.size() == 5);
    }
    SUBCASE("witness cycles are genuine odd cycles") {
        for (const Fullerene& f : {dodecahedron(), nanotube(2), hexagonal_barrel()}) {
            auto res = is_bipartite(f.graph().adjacency());
            REQUIRE_FALSE(res.bipartite);
            const auto& cyc = res.odd_cycle;
            CHECK(cyc.size() % 2 == 1);
            std::set<int> distinct(cyc.begin(), cyc.end());
            CHECK(distinct.size() == cyc.size());
            auto adj = f.graph().adjacency();
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                CHECK(std::count(adj[u].begin(), adj[u].end(), v) == 1);
            }
        }
    }
}

TEST_CASE("remove_edges") {
    Fullerene f = dodecahedron();
    auto adj = f.graph().adjacency();
    SUBCASE("removing nothing is the identity") {
        CHECK(remove_edges(adj, {}) == adj);
    }
    SUBCASE("removing one edge leaves two degree-2 vertices") {
        Edge e = f.graph().edges().front();
        auto res = remove_edges(adj, {e});
        int deg2 = 0;
        for (const auto& l : res)
            if (l.size() == 2) ++deg2;
        CHECK(deg2 == 2);
    }
    SUBCASE("missing edge raises EdgeNotPresent") {
        auto once = remove_edges(adj, {Edge::of(0, f.graph().rotation(0)[0])});
        try {
            remove_edges(once, {Edge::of(0, f.graph().rotation(0)[0])});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::EdgeNotPresent);
        }
    }
}
