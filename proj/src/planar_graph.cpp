#include "fg/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace fg {

std::vector<std::vector<int>> CubicPlanarGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (int v = 0; v < n_; ++v)
        adj[v].assign(rot_[v].begin(), rot_[v].end());
    return adj;
}

std::vector<Edge> CubicPlanarGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int v = 0; v < n_; ++v)
        for (int w : rot_[v])
            if (v < w) out.push_back({v, w});
    std::sort(out.begin(), out.end());
    return out;
}

CubicPlanarGraph build_graph(const std::vector<std::vector<int>>& rotations) {
    const int n = static_cast<int>(rotations.size());
    if (n < 4)
        raise(Err::InvalidArgument, "need at least 4 vertices, got " + std::to_string(n));

    CubicPlanarGraph g;
    g.n_ = n;
    g.rot_.resize(n);
    for (int v = 0; v < n; ++v) {
        const auto& r = rotations[v];
        if (r.size() != 3)
            raise(Err::NonCubic, "vertex " + std::to_string(v) + " lists " +
                                     std::to_string(r.size()) + " neighbors");
        for (int w : r)
            if (w < 0 || w >= n)
                raise(Err::InvalidArgument,
                      "vertex " + std::to_string(v) + " lists invalid id " + std::to_string(w));
        if (r[0] == v || r[1] == v || r[2] == v)
            raise(Err::LoopOrMultiEdge, "loop at vertex " + std::to_string(v));
        if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2])
            raise(Err::LoopOrMultiEdge, "repeated neighbor at vertex " + std::to_string(v));
        g.rot_[v] = {r[0], r[1], r[2]};
    }

    for (int v = 0; v < n; ++v) {
        for (int w : g.rot_[v]) {
            const auto& rw = g.rot_[w];
            if (std::count(rw.begin(), rw.end(), v) != 1)
                raise(Err::AsymmetricAdjacency, "edge " + std::to_string(v) + "-" +
                                                    std::to_string(w) + " not listed back");
        }
    }

    // connectivity
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rot_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        raise(Err::Disconnected, std::to_string(reached) + " of " + std::to_string(n) +
                                     " vertices reachable");

    trace_face_structure(g); // raises NonPlanar on a bad Euler count
    return g;
}

FaceStructure trace_face_structure(const CubicPlanarGraph& g) {
    const int n = g.vertex_count();
    const int darts = g.dart_count();
    FaceStructure fs;
    fs.face_of_dart.assign(darts, -1);

    for (int d0 = 0; d0 < darts; ++d0) {
        if (fs.face_of_dart[d0] >= 0) continue;
        Face face;
        face.id = static_cast<int>(fs.faces.size());
        int d = d0;
        do {
            fs.face_of_dart[d] = face.id;
            int u = d / 3;
            int v = g.neighbor(u, d % 3);
            face.vertices.push_back(u);
            int slot = (g.slot_of(v, u) + 1) % 3;
            d = 3 * v + slot;
        } while (d != d0);
        fs.faces.push_back(std::move(face));
    }

    const long long f = static_cast<long long>(fs.faces.size());
    if (n - g.edge_count() + f != 2)
        raise(Err::NonPlanar, "Euler check failed: n=" + std::to_string(n) +
                                  " m=" + std::to_string(g.edge_count()) +
                                  " f=" + std::to_string(f));
    return fs;
}

std::vector<Face> trace_faces(const CubicPlanarGraph& g) {
    return trace_face_structure(g).faces;
}

CubicPlanarGraph build_from_faces(int n, const std::vector<std::vector<int>>& faces) {
    // succ[v]: for each incident dart (u -> v), the next neighbor after u in
    // rot[v]; assembled from consecutive face triples (u, v, w).
    std::vector<std::map<int, int>> succ(n);
    std::map<std::pair<int, int>, char> used;

    long long total = 0;
    for (const auto& cyc : faces) {
        const int len = static_cast<int>(cyc.size());
        if (len < 3) raise(Err::InvalidArgument, "face shorter than 3");
        total += len;
        for (int i = 0; i < len; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % len], w = cyc[(i + 2) % len];
            if (u < 0 || u >= n || v < 0 || v >= n)
                raise(Err::InvalidArgument, "face lists invalid vertex id");
            if (!used.emplace(std::make_pair(u, v), 1).second)
                raise(Err::InvalidArgument, "dart used by two faces: " + std::to_string(u) +
                                                "->" + std::to_string(v));
            if (!succ[v].emplace(u, w).second)
                raise(Err::InvalidArgument, "conflicting rotation at " + std::to_string(v));
        }
    }
    if (total != 3LL * n)
        raise(Err::InvalidArgument, "face lengths sum to " + std::to_string(total) +
                                        ", expected " + std::to_string(3 * n));

    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].size() != 3)
            raise(Err::InvalidArgument, "vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(succ[v].size()));
        int a = succ[v].begin()->first;
        int b = succ[v].at(a);
        int c = succ[v].at(b);
        if (succ[v].at(c) != a)
            raise(Err::InvalidArgument, "rotation at " + std::to_string(v) + " is not a 3-cycle");
        rot[v] = {a, b, c};
    }
    return build_graph(rot);
}

Fullerene::Fullerene(CubicPlanarGraph g, FaceStructure fs, std::vector<int> pentagons)
    : g_(std::move(g)), fs_(std::move(fs)), pentagons_(std::move(pentagons)) {}

Fullerene validate_fullerene(const CubicPlanarGraph& g) {
    FaceStructure fs = trace_face_structure(g);
    std::vector<int> pentagons;
    for (const Face& f : fs.faces) {
        if (f.length() == 5)
            pentagons.push_back(f.id);
        else if (f.length() != 6)
            raise(Err::BadFaceLength,
                  "face " + std::to_string(f.id) + " has length " + std::to_string(f.length()));
    }
    if (pentagons.size() != 12)
        raise(Err::WrongPentagonCount, "found " + std::to_string(pentagons.size()));
    return Fullerene(g, std::move(fs), std::move(pentagons));
}

DualGraph::DualGraph(int nodes, std::vector<DualEdge> edges)
    : nodes_(nodes), edges_(std::move(edges)), adj_(nodes) {
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj_[edges_[i].f1].push_back({edges_[i].f2, i});
        adj_[edges_[i].f2].push_back({edges_[i].f1, i});
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

DualGraph build_dual(const Fullerene& f) {
    std::vector<DualEdge> dedges;
    dedges.reserve(f.m());
    for (Edge e : f.graph().edges()) {
        auto [fa, fb] = f.faces_of_edge(e);
        if (fa == fb)
            raise(Err::NonPlanar, "bridge edge inside a fullerene"); // cannot happen
        dedges.push_back({std::min(fa, fb), std::max(fa, fb), e});
    }
    return DualGraph(f.face_count(), std::move(dedges));
}

BipartiteCheck is_bipartite(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    BipartiteCheck res;
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);

    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // reconstruct the odd cycle through u, v and their paths
                    // to the lowest common ancestor in the BFS forest
                    int a = u, b = v;
                    std::vector<int> pa{a}, pb{b};
                    while (depth[a] > depth[b]) pa.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pb.push_back(b = parent[b]);
                    while (a != b) {
                        pa.push_back(a = parent[a]);
                        pb.push_back(b = parent[b]);
                    }
                    // pa ends at the LCA; pb's copy of it is dropped
                    pb.pop_back();
                    res.odd_cycle.assign(pb.rbegin(), pb.rend());
                    res.odd_cycle.insert(res.odd_cycle.end(), pa.begin(), pa.end());
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    res.coloring = std::move(color);
    return res;
}

EdgeSet make_edge_set(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool edge_set_contains(const EdgeSet& s, Edge e) {
    return std::binary_search(s.begin(), s.end(), e);
}

std::vector<std::vector<int>> remove_edges(const std::vector<std::vector<int>>& adj,
                                           const EdgeSet& cut) {
    std::vector<std::vector<int>> out = adj;
    for (Edge e : cut) {
        if (e.u < 0 || e.v >= static_cast<int>(out.size()))
            raise(Err::EdgeNotPresent, "edge endpoints out of range");
        auto& lu = out[e.u];
        auto& lv = out[e.v];
        auto iu = std::find(lu.begin(), lu.end(), e.v);
        auto iv = std::find(lv.begin(), lv.end(), e.u);
        if (iu == lu.end() || iv == lv.end())
            raise(Err::EdgeNotPresent,
                  std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
        lu.erase(iu);
        lv.erase(iv);
    }
    return out;
}

} // namespace fg
