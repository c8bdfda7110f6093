#pragma once

// Minimum edge bipartization of a fullerene.  The minimum number of edges
// whose removal makes the graph bipartite equals the minimum weight of a
// perfect matching on the 12 pentagons under the dual-distance metric; the
// cut itself is recovered as the symmetric difference of primal edges
// crossed by shortest dual paths between matched pentagons.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "fg/planar_graph.hpp"

namespace fg {

struct PentagonMetric {
    std::array<int, 12> order{};               // pentagon face ids, ascending
    std::array<std::array<int, 12>, 12> d{};   // dual hop distances
};

PentagonMetric pentagon_metric(const Fullerene& f, const DualGraph& dual);

struct PentagonMatching {
    std::array<int, 12> order{};                   // copied from the metric
    std::array<std::pair<int, int>, 6> pairs{};    // index pairs into order, i < j
    int weight = 0;
};

// Exact minimum over all 10395 pairings via subset dynamic programming;
// ties broken toward the lexicographically smallest pair sequence.
PentagonMatching min_weight_perfect_matching(const PentagonMetric& m);

struct Graph12 {
    std::array<std::uint16_t, 12> adj{}; // bitmask rows, irreflexive, symmetric

    void add_edge(int i, int j) {
        adj[i] |= std::uint16_t(1u << j);
        adj[j] |= std::uint16_t(1u << i);
    }
    bool has_edge(int i, int j) const { return (adj[i] >> j) & 1u; }
    int degree(int i) const { return __builtin_popcount(adj[i]); }
    int min_degree() const;
};

// Builds a Graph12 from an adjacency matrix; raises WrongVertexCount unless
// the matrix is exactly 12x12.
Graph12 graph12_from_matrix(const std::vector<std::vector<bool>>& matrix);

bool has_perfect_matching_12(const Graph12& g);
bool contains_K57(const Graph12& g); // some 5-subset fully joined to the other 7

struct ThresholdedMetric {
    long long n = 0;           // host vertex count the threshold was taken at
    Graph12 graph;             // edge iff d <= sqrt(63n/2) + 14
    double threshold = 0.0;    // real value, for reporting only

    int min_degree() const { return graph.min_degree(); }
    bool edge(int i, int j) const { return graph.has_edge(i, j); }
};

// Integer-exact membership test: w <= 14, or 2*(w-14)^2 <= 63*n.
bool within_distance_threshold(long long w, long long n);

ThresholdedMetric thresholded_metric(const PentagonMetric& m, long long n);

struct ProximityReport {
    std::array<int, 12> within_threshold{}; // per pentagon, count of others in range
    bool all_at_least_five = false;
    double threshold = 0.0;
};

ProximityReport check_pentagon_proximity(const Fullerene& f);

EdgeSet recover_edge_cut(const Fullerene& f, const DualGraph& dual,
                         const PentagonMatching& matching);

struct BipartizationResult {
    PentagonMatching matching;
    EdgeSet cut;
    int b = 0;
    double bound_conjecture = 0.0; // sqrt(12n/5), reported only
    double bound_matched = 0.0;    // sqrt(1134n) + 84
    double bound_general = 0.0;    // sqrt(3087n/2) + 98
    bool thresholded_has_matching = false;
};

BipartizationResult bipartize(const Fullerene& f);

// exact integer comparisons for the bounds above
bool general_bound_holds(long long b, long long n);    // b <= sqrt(3087n/2) + 98
bool matched_bound_holds(long long b, long long n);    // b <= sqrt(1134n) + 84
bool conjecture_bound_holds(long long b, long long n); // b <= sqrt(12n/5)

// Independent oracle: iterative-deepening search over edge deletions,
// branching on the edges of a shortest odd cycle.  Returns the exact minimum
// bipartizing cut size, or nullopt if it exceeds `limit`.  Intended for
// small instances (n <= ~40, limit <= ~8).
std::optional<int> brute_force_b(const Fullerene& f, int limit);

} // namespace fg
