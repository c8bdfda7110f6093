#pragma once

// Embedded cubic planar graphs as rotation systems.
//
// Convention used everywhere in this library: rot[v] lists the three
// neighbors of v in cyclic order (a fixed global orientation).  A dart is a
// directed edge (u, v), identified by 3*u + slot where rot[u][slot] == v.
// Faces are traced by the rule
//     next dart after (u, v) is (v, w), w = rot[v][(slot_of(v, u) + 1) % 3]
// i.e. "take the neighbor after u in v's rotation".  All generators and all
// face-based constructions in this project use this one chirality.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

struct Edge {
    int u = 0, v = 0; // normalized: u < v

    static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    auto operator<=>(const Edge&) const = default;
};

class CubicPlanarGraph {
public:
    int vertex_count() const { return n_; }
    int edge_count() const { return 3 * n_ / 2; }

    const std::array<int, 3>& rotation(int v) const { return rot_[v]; }
    int neighbor(int v, int slot) const { return rot_[v][slot]; }

    // position of `nbr` in rot[v]; caller guarantees adjacency
    int slot_of(int v, int nbr) const {
        const auto& r = rot_[v];
        if (r[0] == nbr) return 0;
        if (r[1] == nbr) return 1;
        return 2;
    }

    int dart_id(int v, int slot) const { return 3 * v + slot; }
    int dart_count() const { return 3 * n_; }

    std::vector<std::vector<int>> adjacency() const;
    std::vector<Edge> edges() const; // sorted, each once

private:
    friend CubicPlanarGraph build_graph(const std::vector<std::vector<int>>& rotations);

    int n_ = 0;
    std::vector<std::array<int, 3>> rot_;
};

// Validates: ids in range, exactly 3 distinct neighbors per vertex, no loops,
// symmetric adjacency, connected, and the Euler relation n - m + f = 2 after
// face tracing.
CubicPlanarGraph build_graph(const std::vector<std::vector<int>>& rotations);

// Builds the rotation system from a complete list of consistently oriented
// face cycles (every dart used by exactly one face).  Used by the generators.
CubicPlanarGraph build_from_faces(int n, const std::vector<std::vector<int>>& faces);

struct Face {
    int id = 0;
    std::vector<int> vertices; // cyclic, in trace order
    int length() const { return static_cast<int>(vertices.size()); }
};

struct FaceStructure {
    std::vector<Face> faces;
    std::vector<int> face_of_dart; // indexed by dart id, size 3n
};

FaceStructure trace_face_structure(const CubicPlanarGraph& g);
std::vector<Face> trace_faces(const CubicPlanarGraph& g);

class Fullerene {
public:
    Fullerene(CubicPlanarGraph g, FaceStructure fs, std::vector<int> pentagons);

    const CubicPlanarGraph& graph() const { return g_; }
    const std::vector<Face>& faces() const { return fs_.faces; }
    const Face& face(int id) const { return fs_.faces[id]; }
    int face_count() const { return static_cast<int>(fs_.faces.size()); }
    const std::vector<int>& pentagons() const { return pentagons_; }

    int n() const { return g_.vertex_count(); }
    int m() const { return g_.edge_count(); }
    int hexagon_count() const { return face_count() - 12; }

    // face to the left of dart (u -> rot[u][slot]) under the trace convention
    int face_of_dart(int u, int slot) const { return fs_.face_of_dart[3 * u + slot]; }
    int face_left_of(int u, int v) const { return face_of_dart(u, g_.slot_of(u, v)); }

    // the two (distinct) faces incident with an edge
    std::pair<int, int> faces_of_edge(Edge e) const {
        return {face_left_of(e.u, e.v), face_left_of(e.v, e.u)};
    }

private:
    CubicPlanarGraph g_;
    FaceStructure fs_;
    std::vector<int> pentagons_;
};

// Checks every face length is 5 or 6 and that exactly twelve 5-faces exist.
Fullerene validate_fullerene(const CubicPlanarGraph& g);

struct DualEdge {
    int f1 = 0, f2 = 0; // f1 < f2
    Edge primal;
};

class DualGraph {
public:
    DualGraph(int nodes, std::vector<DualEdge> edges);

    int node_count() const { return nodes_; }
    const std::vector<DualEdge>& edges() const { return edges_; }
    // (neighbor face, index into edges()) pairs, sorted by neighbor
    const std::vector<std::pair<int, int>>& neighbors(int f) const { return adj_[f]; }
    int degree(int f) const { return static_cast<int>(adj_[f].size()); }

private:
    int nodes_;
    std::vector<DualEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

DualGraph build_dual(const Fullerene& f);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> coloring;  // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle; // vertex cycle (closed implicitly) otherwise
};

BipartiteCheck is_bipartite(const std::vector<std::vector<int>>& adj);

using EdgeSet = std::vector<Edge>; // kept sorted and duplicate-free

EdgeSet make_edge_set(std::vector<Edge> edges);
bool edge_set_contains(const EdgeSet& s, Edge e);

std::vector<std::vector<int>> remove_edges(const std::vector<std::vector<int>>& adj,
                                           const EdgeSet& cut);

} // namespace fg
