#pragma once

// Patches: 2-connected subgraphs of a fullerene bounded by a cycle, all of
// whose faces except the boundary are host faces.  Implements boundary edge
// classification (22/23/33), cyclic boundary descriptions, worm/shell
// classification, chords, simplifying cuts, normality, and layer peeling.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fg/planar_graph.hpp"

namespace fg {

struct BoundaryStats {
    int len = 0; // boundary length
    int s = 0;   // 22-edges
    int t = 0;   // 33-edges
    int s2 = 0;  // cyclically adjacent 22-edge pairs
    int p = 0;   // 5-faces of the patch distinct from the boundary face

    bool operator==(const BoundaryStats&) const = default;
};

// Cyclic token sequence: A = 33-edge, B = 22-edge, integer = maximal run of
// 23-edges.  Stored canonically (lexicographically smallest rotation over
// both orientations, ordering A < B < integers by value).
class BoundaryDescription {
public:
    struct Token {
        enum Kind { A, B, Run } kind = A;
        int run = 0; // only for Kind::Run

        auto operator<=>(const Token&) const = default;
    };

    static BoundaryDescription from_tokens(std::vector<Token> tokens);
    static BoundaryDescription parse(const std::string& text);

    const std::vector<Token>& tokens() const { return tokens_; }
    std::string str() const;

    int letter_count(Token::Kind k) const;
    int run_total() const;

    bool operator==(const BoundaryDescription&) const = default;

private:
    std::vector<Token> tokens_;
};

enum class PatchClass { SlimWorm, FatWorm, Shell, Other };
const char* to_string(PatchClass c);

enum class BoundaryEdgeClass { E22, E23, E33 };

class Patch {
public:
    // cycle: closed vertex sequence in the host; seed_face selects the side
    // taken as interior
    Patch(const Fullerene& host, std::vector<int> cycle, int seed_face);

    const Fullerene& host() const { return *host_; }
    const std::vector<int>& boundary() const { return boundary_; }
    const std::vector<int>& interior_faces() const { return interior_faces_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return in_patch_[v] != 0; }
    bool on_boundary(int v) const { return on_boundary_[v] != 0; }
    bool has_edge(Edge e) const { return edge_set_contains(edges_, e); }
    bool boundary_edge(Edge e) const { return edge_set_contains(boundary_edges_, e); }
    bool interior_face(int f) const;
    int degree(int v) const { return degree_[v]; }

    // class of boundary edge i = (boundary[i], boundary[i+1])
    const std::vector<BoundaryEdgeClass>& boundary_classes() const { return classes_; }
    const BoundaryStats& stats() const { return stats_; }

private:
    const Fullerene* host_;
    std::vector<int> boundary_;
    std::vector<int> interior_faces_; // sorted
    std::vector<int> vertices_;       // sorted
    std::vector<Edge> edges_;         // sorted
    EdgeSet boundary_edges_;
    std::vector<signed char> degree_;      // by host vertex id, 0 if absent
    std::vector<signed char> on_boundary_; // by host vertex id
    std::vector<signed char> in_patch_;    // by host vertex id
    std::vector<BoundaryEdgeClass> classes_;
    BoundaryStats stats_;
};

Patch patch_from_cycle(const Fullerene& host, const std::vector<int>& cycle, int seed_face);

BoundaryStats boundary_stats(const Patch& p);
BoundaryDescription describe_boundary(const Patch& p);
PatchClass classify_patch(const Patch& p);

struct Chord {
    std::vector<int> path;     // vertices, endpoints on the boundary
    bool splits_off_face = false;

    int length() const { return static_cast<int>(path.size()) - 1; }
};

// All simple paths of length 1..lmax with distinct endpoints on the boundary
// and interior vertices/edges off it, deduplicated up to reversal.
std::vector<Chord> find_chords(const Patch& p, int lmax = 4);

// The two sub-patches a chord splits the patch into.
std::pair<Patch, Patch> split_by_chord(const Patch& p, const Chord& q);

struct ShortChordCut {
    Chord chord;
    int t1 = 0, t2 = 0; // 33-counts of the two sides; t1 + t2 < t(o)
};

struct Paired4ChordsCut {
    std::array<int, 5> q1{}, q2{}; // vertex-disjoint 4-chords; v0w0, v2w2,
                                   // v4w4 are edges of the patch
};

using SimplifyingCut = std::variant<ShortChordCut, Paired4ChordsCut>;

std::optional<SimplifyingCut> find_simplifying_cut(const Patch& p);

// indecomposable, no interior 5-face touching the boundary, not a worm or
// the shell
bool is_normal(const Patch& p);

struct PeelReport {
    BoundaryStats outer;
    BoundaryStats inner;
    int layer_faces = 0;     // faces sharing an edge with the old boundary
    int pinch_vertices = 0;  // interior vertices with >= 2 neighbors on it
};

struct PeelResult {
    Patch inner;
    PeelReport report;
};

// Removes the outer layer of faces of a normal patch.  Checks that the new
// boundary is a cycle and that t, s are preserved, s2 does not decrease, and
// len' = len + 2p - 12 - 2*s2; any violation raises LayerLemmaViolated.
PeelResult peel(const Patch& p);

// Syntactic counterpart of peel on the boundary description.
BoundaryDescription rewrite_description(const BoundaryDescription& d);

struct PeelingSequence {
    std::vector<std::vector<int>> cycles;
    std::vector<BoundaryStats> stats; // one per cycle
    int k() const { return static_cast<int>(cycles.size()); }
};

// Peels while the current patch is normal; k = 1 means the patch itself is
// not normal.
PeelingSequence uninterrupted_peeling(const Patch& p);

// For p(patch) != 6: the number of vertices strictly outside the last cycle
// (sum of the peeled cycle lengths) is at least 4k^2/9.  k = 1 passes
// vacuously.
bool check_peeling_volume(const Patch& p, const PeelingSequence& seq);

} // namespace fg
