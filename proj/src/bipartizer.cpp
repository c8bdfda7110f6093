#include "fg/bipartizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace fg {

namespace {

// BFS distances from one face over the dual
std::vector<int> dual_bfs(const DualGraph& dual, int start) {
    std::vector<int> dist(dual.node_count(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (auto [g, ei] : dual.neighbors(f)) {
            (void)ei;
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                q.push(g);
            }
        }
    }
    return dist;
}

} // namespace

PentagonMetric pentagon_metric(const Fullerene& f, const DualGraph& dual) {
    PentagonMetric m;
    const auto& pent = f.pentagons();
    for (int i = 0; i < 12; ++i) m.order[i] = pent[i];
    for (int i = 0; i < 12; ++i) {
        std::vector<int> dist = dual_bfs(dual, pent[i]);
        for (int j = 0; j < 12; ++j) {
            if (dist[pent[j]] < 0)
                raise(Err::Disconnected, "dual graph is disconnected"); // cannot happen
            m.d[i][j] = dist[pent[j]];
        }
    }
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            if (m.d[i][j] != m.d[j][i])
                raise(Err::InvalidArgument, "asymmetric pentagon metric"); // cannot happen
    return m;
}

PentagonMatching min_weight_perfect_matching(const PentagonMetric& m) {
    constexpr int kFull = (1 << 12) - 1;
    constexpr int kInf = 1 << 29;
    std::array<int, 1 << 12> dp;
    dp.fill(kInf);
    dp[0] = 0;
    for (int mask = 1; mask <= kFull; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        int i = __builtin_ctz(mask);
        int rest = mask ^ (1 << i);
        int best = kInf;
        for (int j = i + 1; j < 12; ++j) {
            if (!((rest >> j) & 1)) continue;
            int cand = dp[rest ^ (1 << j)] + m.d[i][j];
            if (cand < best) best = cand;
        }
        dp[mask] = best;
    }

    PentagonMatching result;
    result.order = m.order;
    result.weight = dp[kFull];
    // reconstruct, always pairing the lowest free index with the smallest
    // partner that achieves the optimum: lexicographically smallest sequence
    int mask = kFull;
    for (int k = 0; k < 6; ++k) {
        int i = __builtin_ctz(mask);
        int rest = mask ^ (1 << i);
        for (int j = i + 1; j < 12; ++j) {
            if (!((rest >> j) & 1)) continue;
            if (dp[rest ^ (1 << j)] + m.d[i][j] == dp[mask]) {
                result.pairs[k] = {i, j};
                mask = rest ^ (1 << j);
                break;
            }
        }
    }
    return result;
}

int Graph12::min_degree() const {
    int best = 12;
    for (int i = 0; i < 12; ++i) best = std::min(best, degree(i));
    return best;
}

Graph12 graph12_from_matrix(const std::vector<std::vector<bool>>& matrix) {
    if (matrix.size() != 12)
        raise(Err::WrongVertexCount, "expected 12 vertices, got " + std::to_string(matrix.size()));
    for (const auto& row : matrix)
        if (row.size() != 12) raise(Err::WrongVertexCount, "non-square 12-vertex matrix");
    Graph12 g;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (matrix[i][j] || matrix[j][i]) g.add_edge(i, j);
    return g;
}

namespace {

// memoized: can `mask` be perfectly matched?  0 unknown, 1 yes, 2 no
bool matchable(const Graph12& g, int mask, std::array<std::uint8_t, 1 << 12>& memo) {
    if (mask == 0) return true;
    auto& slot = memo[mask];
    if (slot) return slot == 1;
    int i = __builtin_ctz(mask);
    int cand = g.adj[i] & mask;
    while (cand) {
        int j = __builtin_ctz(cand);
        cand &= cand - 1;
        if (matchable(g, mask ^ (1 << i) ^ (1 << j), memo)) {
            slot = 1;
            return true;
        }
    }
    slot = 2;
    return false;
}

} // namespace

bool has_perfect_matching_12(const Graph12& g) {
    static_assert(sizeof(std::uint16_t) == 2);
    std::array<std::uint8_t, 1 << 12> memo{};
    return matchable(g, (1 << 12) - 1, memo);
}

bool contains_K57(const Graph12& g) {
    constexpr int kFull = (1 << 12) - 1;
    for (int mask = 0; mask <= kFull; ++mask) {
        if (__builtin_popcount(mask) != 5) continue;
        int comp = kFull ^ mask;
        bool all = true;
        for (int m2 = mask; m2 && all; m2 &= m2 - 1) {
            int i = __builtin_ctz(m2);
            if ((g.adj[i] & comp) != comp) all = false;
        }
        if (all) return true;
    }
    return false;
}

bool within_distance_threshold(long long w, long long n) {
    return w <= 14 || 2 * (w - 14) * (w - 14) <= 63 * n;
}

ThresholdedMetric thresholded_metric(const PentagonMetric& m, long long n) {
    ThresholdedMetric t;
    t.n = n;
    t.threshold = std::sqrt(63.0 * static_cast<double>(n) / 2.0) + 14.0;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (within_distance_threshold(m.d[i][j], n)) t.graph.add_edge(i, j);
    return t;
}

ProximityReport check_pentagon_proximity(const Fullerene& f) {
    DualGraph dual = build_dual(f);
    PentagonMetric m = pentagon_metric(f, dual);
    ThresholdedMetric t = thresholded_metric(m, f.n());
    ProximityReport rep;
    rep.threshold = t.threshold;
    rep.all_at_least_five = true;
    for (int i = 0; i < 12; ++i) {
        rep.within_threshold[i] = t.graph.degree(i);
        if (rep.within_threshold[i] < 5) rep.all_at_least_five = false;
    }
    return rep;
}

EdgeSet recover_edge_cut(const Fullerene& f, const DualGraph& dual,
                         const PentagonMatching& matching) {
    std::map<Edge, int> count;
    for (auto [ia, ib] : matching.pairs) {
        const int src = matching.order[ia];
        const int dst = matching.order[ib];
        std::vector<int> dist = dual_bfs(dual, dst);
        // walk a shortest path src -> dst, stepping to the smallest-id face
        // one hop closer at each point
        int cur = src;
        while (cur != dst) {
            int next = -1, via = -1;
            for (auto [g, ei] : dual.neighbors(cur)) {
                if (dist[g] == dist[cur] - 1) {
                    next = g;
                    via = ei;
                    break; // neighbors are sorted, first hit = smallest id
                }
            }
            if (next < 0)
                raise(Err::Disconnected, "shortest-path walk stuck"); // cannot happen
            ++count[dual.edges()[via].primal];
            cur = next;
        }
    }
    std::vector<Edge> cut;
    for (auto [e, c] : count) {
        if (c > 1)
            raise(Err::OverlapInvariantViolated,
                  "shortest dual paths shared an edge crossing " + std::to_string(e.u) + "-" +
                      std::to_string(e.v));
        cut.push_back(e);
    }
    (void)f;
    return make_edge_set(std::move(cut));
}

bool general_bound_holds(long long b, long long n) {
    if (b <= 98) return true;
    long long x = b - 98;
    return 2 * x * x <= 3087 * n;
}

bool matched_bound_holds(long long b, long long n) {
    if (b <= 84) return true;
    long long x = b - 84;
    return x * x <= 1134 * n;
}

bool conjecture_bound_holds(long long b, long long n) {
    return 5 * b * b <= 12 * n;
}

BipartizationResult bipartize(const Fullerene& f) {
    DualGraph dual = build_dual(f);
    PentagonMetric metric = pentagon_metric(f, dual);
    BipartizationResult res;
    res.matching = min_weight_perfect_matching(metric);
    res.cut = recover_edge_cut(f, dual, res.matching);
    res.b = static_cast<int>(res.cut.size());

    if (res.b != res.matching.weight)
        raise(Err::OverlapInvariantViolated, "cut size differs from matching weight");
    if (res.b < 6)
        raise(Err::OverlapInvariantViolated, "cut smaller than 6"); // weights are >= 1

    BipartiteCheck check = is_bipartite(remove_edges(f.graph().adjacency(), res.cut));
    if (!check.bipartite)
        raise(Err::OverlapInvariantViolated, "graph minus recovered cut is not bipartite");

    const long long n = f.n();
    res.bound_conjecture = std::sqrt(12.0 * static_cast<double>(n) / 5.0);
    res.bound_matched = std::sqrt(1134.0 * static_cast<double>(n)) + 84.0;
    res.bound_general = std::sqrt(3087.0 * static_cast<double>(n) / 2.0) + 98.0;

    ThresholdedMetric thr = thresholded_metric(metric, n);
    res.thresholded_has_matching = has_perfect_matching_12(thr.graph);

    if (!general_bound_holds(res.b, n))
        raise(Err::SuiteFailed, "general O(sqrt n) bound violated at n=" + std::to_string(n));
    if (res.thresholded_has_matching && !matched_bound_holds(res.b, n))
        raise(Err::SuiteFailed, "matched O(sqrt n) bound violated at n=" + std::to_string(n));
    return res;
}

namespace {

struct OddCycleFinder {
    // shortest odd cycle over all BFS roots; good enough branching set
    static std::optional<std::vector<Edge>> find(const std::vector<std::vector<int>>& adj) {
        const int n = static_cast<int>(adj.size());
        std::optional<std::vector<Edge>> best;
        std::vector<int> color(n), parent(n), depth(n);
        for (int s = 0; s < n; ++s) {
            std::fill(color.begin(), color.end(), -1);
            color[s] = 0;
            parent[s] = -1;
            depth[s] = 0;
            std::queue<int> q;
            q.push(s);
            bool done = false;
            while (!q.empty() && !done) {
                int u = q.front();
                q.pop();
                for (int v : adj[u]) {
                    if (color[v] < 0) {
                        color[v] = color[u] ^ 1;
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        q.push(v);
                    } else if (color[v] == color[u]) {
                        std::vector<int> cyc = lift(u, v, parent, depth);
                        std::vector<Edge> edges;
                        for (std::size_t i = 0; i < cyc.size(); ++i)
                            edges.push_back(Edge::of(cyc[i], cyc[(i + 1) % cyc.size()]));
                        if (!best || edges.size() < best->size()) best = std::move(edges);
                        done = true;
                        break;
                    }
                }
            }
            if (best && best->size() <= 3) break;
        }
        return best;
    }

    static std::vector<int> lift(int u, int v, const std::vector<int>& parent,
                                 const std::vector<int>& depth) {
        std::vector<int> pa{u}, pb{v};
        int a = u, b = v;
        while (depth[a] > depth[b]) pa.push_back(a = parent[a]);
        while (depth[b] > depth[a]) pb.push_back(b = parent[b]);
        while (a != b) {
            pa.push_back(a = parent[a]);
            pb.push_back(b = parent[b]);
        }
        pb.pop_back();
        std::vector<int> cyc(pb.rbegin(), pb.rend());
        cyc.insert(cyc.end(), pa.begin(), pa.end());
        return cyc;
    }
};

// depth-limited search: remove edges of some odd cycle; `banned` prevents
// revisiting subsets already covered by an earlier sibling branch
bool search_cut(std::vector<std::vector<int>>& adj, int budget, std::set<Edge>& banned) {
    auto cyc = OddCycleFinder::find(adj);
    if (!cyc) return true;
    if (budget == 0) return false;
    std::vector<Edge> branch;
    for (Edge e : *cyc)
        if (!banned.count(e)) branch.push_back(e);
    std::vector<Edge> newly_banned;
    bool found = false;
    for (Edge e : branch) {
        auto cut = remove_edges(adj, {e});
        adj.swap(cut);
        if (search_cut(adj, budget - 1, banned)) {
            adj.swap(cut);
            found = true;
            break;
        }
        adj.swap(cut);
        banned.insert(e);
        newly_banned.push_back(e);
    }
    for (Edge e : newly_banned) banned.erase(e);
    return found;
}

} // namespace

std::optional<int> brute_force_b(const Fullerene& f, int limit) {
    auto adj = f.graph().adjacency();
    for (int budget = 0; budget <= limit; ++budget) {
        std::set<Edge> banned;
        auto work = adj;
        if (search_cut(work, budget, banned)) return budget;
    }
    return std::nullopt;
}

} // namespace fg
