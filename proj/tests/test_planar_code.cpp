#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "fg/generators.hpp"
#include "fg/planar_code.hpp"

using namespace fg;

namespace {

std::vector<std::uint8_t> file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

bool same_rotations(const CubicPlanarGraph& a, const CubicPlanarGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.rotation(v) != b.rotation(v)) return false;
    return true;
}

} // namespace

TEST_CASE("round trip is the identity on rotation tables") {
    std::vector<CubicPlanarGraph> graphs{dodecahedron().graph(), nanotube(3).graph(),
                                         hexagonal_barrel().graph()};
    auto bytes = write_planar_code(graphs);
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(same_rotations(graphs[i], back[i]));
    CHECK(write_planar_code(back) == bytes); // byte-exact writer form
}

TEST_CASE("16-bit extension handles n >= 256") {
    Fullerene big = nanotube(24); // n = 260
    REQUIRE(big.n() == 260);
    auto bytes = write_planar_code({big.graph()});
    CHECK(bytes[15] == 0); // wide-record marker after the header
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == 1);
    CHECK(same_rotations(big.graph(), back[0]));
    CHECK(write_planar_code(back) == bytes);
}

TEST_CASE("header handling") {
    auto bytes = write_planar_code({dodecahedron().graph()});
    SUBCASE("header present") {
        CHECK(std::string(bytes.begin(), bytes.begin() + 15) == ">>planar_code<<");
    }
    SUBCASE("reader accepts a headerless stream") {
        std::vector<std::uint8_t> raw(bytes.begin() + 15, bytes.end());
        auto back = read_planar_code(raw);
        REQUIRE(back.size() == 1);
        CHECK(same_rotations(back[0], dodecahedron().graph()));
    }
    SUBCASE("empty payload after the header is an empty list") {
        std::vector<std::uint8_t> only_header(bytes.begin(), bytes.begin() + 15);
        CHECK(read_planar_code(only_header).empty());
    }
    SUBCASE("corrupted header raises BadHeader") {
        auto bad = bytes;
        bad[5] = 'X';
        try {
            read_planar_code(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::BadHeader);
        }
    }
}

TEST_CASE("malformed records") {
    auto bytes = write_planar_code({dodecahedron().graph()});
    SUBCASE("truncation raises TruncatedRecord") {
        std::vector<std::uint8_t> cut(bytes.begin(), bytes.end() - 5);
        try {
            read_planar_code(cut);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::TruncatedRecord);
        }
    }
    SUBCASE("neighbor id beyond n raises VertexIdOutOfRange") {
        auto bad = bytes;
        bad[16] = 230; // first neighbor byte, n is 20
        try {
            read_planar_code(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Err::VertexIdOutOfRange);
        }
    }
}

TEST_CASE("externally ordered record validates as a fullerene") {
    // the same dodecahedron with vertices relabelled by an arbitrary
    // permutation, as an external generator might emit it
    CubicPlanarGraph g = dodecahedron().graph();
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = (7 * v + 3) % n; // bijection for n=20
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation(v);
        rot[perm[v]] = {perm[r[0]], perm[r[1]], perm[r[2]]};
    }
    std::vector<std::uint8_t> bytes(">>planar_code<<",
                                    (const char*)">>planar_code<<" + 15);
    bytes.push_back(static_cast<std::uint8_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int w : rot[v]) bytes.push_back(static_cast<std::uint8_t>(w + 1));
        bytes.push_back(0);
    }
    auto graphs = read_planar_code(bytes);
    REQUIRE(graphs.size() == 1);
    Fullerene f = validate_fullerene(graphs[0]);
    CHECK(f.n() == 20);
    CHECK(f.pentagons().size() == 12);
}

TEST_CASE("fixture files are byte-exact against the generators") {
    const std::string dir = FGRAPH_DATA_DIR;
    struct Fix {
        const char* file;
        Fullerene f;
    };
    std::vector<Fix> fixtures;
    fixtures.push_back({"dodecahedron.plc", dodecahedron()});
    fixtures.push_back({"hexagonal_barrel.plc", hexagonal_barrel()});
    fixtures.push_back({"c60.plc", leapfrog_iterate(1)});
    fixtures.push_back({"nanotube3.plc", nanotube(3)});
    for (const auto& fix : fixtures) {
        auto expected = write_planar_code({fix.f.graph()});
        auto actual = file_bytes(dir + "/" + fix.file);
        CHECK(expected == actual);
        auto back = read_planar_code(actual);
        REQUIRE(back.size() == 1);
        CHECK(validate_fullerene(back[0]).n() == fix.f.n());
    }
}
