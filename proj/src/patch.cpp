#include "fg/patch.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace fg {

namespace {

bool hosts_adjacent(const CubicPlanarGraph& g, int u, int v) {
    const auto& r = g.rotation(u);
    return r[0] == v || r[1] == v || r[2] == v;
}

} // namespace

const char* to_string(PatchClass c) {
    switch (c) {
    case PatchClass::SlimWorm: return "slim_worm";
    case PatchClass::FatWorm: return "fat_worm";
    case PatchClass::Shell: return "shell";
    case PatchClass::Other: return "other";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// BoundaryDescription

BoundaryDescription BoundaryDescription::from_tokens(std::vector<Token> tokens) {
    if (tokens.empty()) raise(Err::InvalidArgument, "empty boundary description");
    const int m = static_cast<int>(tokens.size());
    for (int i = 0; i < m; ++i) {
        if (tokens[i].kind == Token::Run) {
            if (tokens[i].run <= 0) raise(Err::InvalidArgument, "non-positive run length");
            if (m > 1 && tokens[(i + 1) % m].kind == Token::Run)
                raise(Err::InvalidArgument, "adjacent integer tokens");
        } else {
            tokens[i].run = 0;
        }
    }

    // canonical form: smallest rotation over both orientations
    auto best = tokens;
    auto consider = [&best](const std::vector<Token>& seq) {
        const int k = static_cast<int>(seq.size());
        for (int r = 0; r < k; ++r) {
            std::vector<Token> rot(seq.begin() + r, seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + r);
            if (rot < best) best = std::move(rot);
        }
    };
    consider(tokens);
    std::reverse(tokens.begin(), tokens.end());
    consider(tokens);

    BoundaryDescription d;
    d.tokens_ = std::move(best);
    return d;
}

BoundaryDescription BoundaryDescription::parse(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'A') {
            tokens.push_back({Token::A, 0});
            ++i;
        } else if (c == 'B') {
            tokens.push_back({Token::B, 0});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                ++i;
            }
            tokens.push_back({Token::Run, val});
        } else {
            raise(Err::InvalidArgument, std::string("bad description character '") + c + "'");
        }
    }
    return from_tokens(std::move(tokens));
}

std::string BoundaryDescription::str() const {
    std::string out;
    for (const Token& t : tokens_) {
        if (t.kind == Token::A)
            out += 'A';
        else if (t.kind == Token::B)
            out += 'B';
        else
            out += std::to_string(t.run);
    }
    return out;
}

int BoundaryDescription::letter_count(Token::Kind k) const {
    int c = 0;
    for (const Token& t : tokens_)
        if (t.kind == k) ++c;
    return c;
}

int BoundaryDescription::run_total() const {
    int c = 0;
    for (const Token& t : tokens_)
        if (t.kind == Token::Run) c += t.run;
    return c;
}

// ---------------------------------------------------------------------------
// Patch construction

Patch::Patch(const Fullerene& host, std::vector<int> cycle, int seed_face) : host_(&host) {
    const CubicPlanarGraph& g = host.graph();
    const int n = g.vertex_count();
    const int L = static_cast<int>(cycle.size());

    if (L < 3) raise(Err::NotACycle, "cycle has fewer than 3 vertices");
    {
        std::vector<int> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0 || sorted.back() >= n)
            raise(Err::NotACycle, "cycle vertex out of range");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            raise(Err::NotACycle, "repeated vertex in cycle");
    }
    std::vector<Edge> cyc;
    for (int i = 0; i < L; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % L];
        if (!hosts_adjacent(g, u, v))
            raise(Err::NotACycle,
                  "consecutive vertices " + std::to_string(u) + "," + std::to_string(v) +
                      " not adjacent");
        cyc.push_back(Edge::of(u, v));
    }
    boundary_edges_ = make_edge_set(cyc);

    if (seed_face < 0 || seed_face >= host.face_count())
        raise(Err::InvalidArgument, "seed face out of range");

    // flood fill over faces, blocked by cycle edges, from the seed side
    std::vector<char> in_region(host.face_count(), 0);
    std::queue<int> q;
    in_region[seed_face] = 1;
    q.push(seed_face);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& verts = host.face(f).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i) {
            int u = verts[i], v = verts[(i + 1) % fl];
            if (edge_set_contains(boundary_edges_, Edge::of(u, v))) continue;
            int other = host.face_left_of(v, u);
            if (!in_region[other]) {
                in_region[other] = 1;
                q.push(other);
            }
        }
    }
    // the cycle must be exactly the region border
    for (Edge e : boundary_edges_) {
        auto [fa, fb] = host.faces_of_edge(e);
        if (in_region[fa] + in_region[fb] != 1)
            raise(Err::SeedOnBoundaryCrossing, "cycle edge " + std::to_string(e.u) + "-" +
                                                   std::to_string(e.v) +
                                                   " does not border the seed region");
    }

    for (int f = 0; f < host.face_count(); ++f)
        if (in_region[f]) interior_faces_.push_back(f);

    // subgraph: all edges of interior faces (the cycle is included since each
    // cycle edge borders exactly one interior face)
    std::vector<Edge> es;
    for (int f : interior_faces_) {
        const auto& verts = host.face(f).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i) es.push_back(Edge::of(verts[i], verts[(i + 1) % fl]));
    }
    edges_ = make_edge_set(std::move(es));

    degree_.assign(n, 0);
    in_patch_.assign(n, 0);
    on_boundary_.assign(n, 0);
    for (Edge e : edges_) {
        ++degree_[e.u];
        ++degree_[e.v];
        in_patch_[e.u] = in_patch_[e.v] = 1;
    }
    for (int v : cycle) on_boundary_[v] = 1;
    for (int v = 0; v < n; ++v)
        if (in_patch_[v]) vertices_.push_back(v);

    for (int v : vertices_) {
        int d = degree_[v];
        if (on_boundary_[v] ? (d < 2 || d > 3) : (d != 3))
            raise(Err::NotTwoConnected, "degree " + std::to_string(d) + " at vertex " +
                                            std::to_string(v)); // construction sentinel
    }

    // articulation check (the patch is a closed disk, so this is a sentinel)
    {
        std::map<int, int> idx;
        for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) idx[vertices_[i]] = i;
        const int k = static_cast<int>(vertices_.size());
        std::vector<std::vector<int>> adj(k);
        for (Edge e : edges_) {
            adj[idx[e.u]].push_back(idx[e.v]);
            adj[idx[e.v]].push_back(idx[e.u]);
        }
        std::vector<int> tin(k, -1), low(k, 0);
        int timer = 0;
        bool cut_vertex = false;
        auto dfs = [&](auto&& self, int v, int parent) -> void {
            tin[v] = low[v] = timer++;
            int children = 0;
            for (int to : adj[v]) {
                if (to == parent) continue;
                if (tin[to] >= 0) {
                    low[v] = std::min(low[v], tin[to]);
                } else {
                    self(self, to, v);
                    low[v] = std::min(low[v], low[to]);
                    if (low[to] >= tin[v] && parent != -1) cut_vertex = true;
                    ++children;
                }
            }
            if (parent == -1 && children > 1) cut_vertex = true;
        };
        dfs(dfs, 0, -1);
        bool connected = std::all_of(tin.begin(), tin.end(), [](int t) { return t >= 0; });
        if (!connected || cut_vertex) raise(Err::NotTwoConnected, "patch subgraph not 2-connected");
    }

    boundary_ = std::move(cycle);
    classes_.resize(L);
    for (int i = 0; i < L; ++i) {
        int a = degree_[boundary_[i]], b = degree_[boundary_[(i + 1) % L]];
        classes_[i] = (a == 2 && b == 2)   ? BoundaryEdgeClass::E22
                      : (a == 3 && b == 3) ? BoundaryEdgeClass::E33
                                           : BoundaryEdgeClass::E23;
    }

    stats_.len = L;
    for (int i = 0; i < L; ++i) {
        if (classes_[i] == BoundaryEdgeClass::E22) ++stats_.s;
        if (classes_[i] == BoundaryEdgeClass::E33) ++stats_.t;
        if (classes_[i] == BoundaryEdgeClass::E22 &&
            classes_[(i + 1) % L] == BoundaryEdgeClass::E22)
            ++stats_.s2;
    }
    for (int f : interior_faces_)
        if (host.face(f).length() == 5) ++stats_.p;

    if (stats_.s != 6 - stats_.p + stats_.t)
        raise(Err::IdentityViolated, "s=" + std::to_string(stats_.s) +
                                         " p=" + std::to_string(stats_.p) +
                                         " t=" + std::to_string(stats_.t));
}

bool Patch::interior_face(int f) const {
    return std::binary_search(interior_faces_.begin(), interior_faces_.end(), f);
}

Patch patch_from_cycle(const Fullerene& host, const std::vector<int>& cycle, int seed_face) {
    return Patch(host, cycle, seed_face);
}

BoundaryStats boundary_stats(const Patch& p) { return p.stats(); }

BoundaryDescription describe_boundary(const Patch& p) {
    using Token = BoundaryDescription::Token;
    const auto& cls = p.boundary_classes();
    const int L = static_cast<int>(cls.size());

    int first_letter = -1;
    for (int i = 0; i < L && first_letter < 0; ++i)
        if (cls[i] != BoundaryEdgeClass::E23) first_letter = i;

    std::vector<Token> tokens;
    if (first_letter < 0) {
        tokens.push_back({Token::Run, L});
        return BoundaryDescription::from_tokens(std::move(tokens));
    }
    int run = 0;
    for (int k = 0; k < L; ++k) {
        const auto c = cls[(first_letter + k) % L];
        if (c == BoundaryEdgeClass::E23) {
            ++run;
            continue;
        }
        if (run > 0) {
            tokens.push_back({Token::Run, run});
            run = 0;
        }
        tokens.push_back({c == BoundaryEdgeClass::E33 ? Token::A : Token::B, 0});
    }
    if (run > 0) tokens.push_back({Token::Run, run});
    return BoundaryDescription::from_tokens(std::move(tokens));
}

// ---------------------------------------------------------------------------
// classification

PatchClass classify_patch(const Patch& p) {
    const BoundaryStats& st = p.stats();
    if (st.p != 0) return PatchClass::Other;

    std::vector<int> interior;
    for (int v : p.vertices())
        if (!p.on_boundary(v)) interior.push_back(v);

    if (interior.empty())
        return st.t == 0 ? PatchClass::SlimWorm : PatchClass::Other;

    if (interior.size() == 4) {
        static const BoundaryDescription kShell = BoundaryDescription::parse("BB4BB4BB4");
        if (describe_boundary(p) == kShell) return PatchClass::Shell;
    }

    // fat worm: the interior induces a path whose inner spine zigzags
    const CubicPlanarGraph& g = p.host().graph();
    std::map<int, std::vector<int>> iadj;
    for (int v : interior) iadj[v] = {};
    int iedges = 0;
    for (int v : interior)
        for (int w : g.rotation(v))
            if (iadj.count(w) && v < w) {
                iadj[v].push_back(w);
                iadj[w].push_back(v);
                ++iedges;
            }
    if (iedges != static_cast<int>(interior.size()) - 1) return PatchClass::Other;
    int endpoints = 0;
    for (auto& [v, nb] : iadj) {
        if (nb.size() > 2) return PatchClass::Other;
        if (nb.size() <= 1) ++endpoints;
    }
    if (interior.size() == 1) {
        if (endpoints != 1) return PatchClass::Other;
    } else if (endpoints != 2) {
        return PatchClass::Other; // disconnected forest or cycle
    }

    // order the path from its smallest endpoint
    std::vector<int> path;
    if (interior.size() == 1) {
        path = interior;
    } else {
        int start = -1;
        for (auto& [v, nb] : iadj)
            if (nb.size() == 1 && (start < 0 || v < start)) start = v;
        int prev = -1, cur = start;
        while (true) {
            path.push_back(cur);
            int next = -1;
            for (int w : iadj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (path.size() != interior.size()) return PatchClass::Other;
    }

    // for consecutive inner (non-endpoint) spine vertices, their off-spine
    // edges must not lie on a common face
    auto off_spine_edge = [&](int v, int before, int after) -> Edge {
        for (int w : g.rotation(v))
            if (w != before && w != after) return Edge::of(v, w);
        raise(Err::InvalidArgument, "cubic vertex without third edge"); // unreachable
    };
    for (std::size_t i = 1; i + 2 < path.size(); ++i) {
        int u = path[i], v = path[i + 1];
        Edge eu = off_spine_edge(u, path[i - 1], v);
        Edge ev = off_spine_edge(v, u, path[i + 2]);
        auto [a1, a2] = p.host().faces_of_edge(eu);
        auto [b1, b2] = p.host().faces_of_edge(ev);
        if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return PatchClass::Other;
    }
    return PatchClass::FatWorm;
}

// ---------------------------------------------------------------------------
// chords

namespace {

// component label per interior face when the patch is cut along the chord;
// exactly two components for a genuine chord
std::pair<std::vector<int>, std::array<int, 2>> chord_partition(const Patch& p, const Chord& q) {
    const Fullerene& host = p.host();
    EdgeSet walls;
    {
        std::vector<Edge> w;
        for (std::size_t i = 0; i + 1 < q.path.size(); ++i)
            w.push_back(Edge::of(q.path[i], q.path[i + 1]));
        walls = make_edge_set(std::move(w));
    }
    std::map<int, int> comp;
    for (int f : p.interior_faces()) comp[f] = -1;
    std::array<int, 2> sizes{0, 0};
    int next_label = 0;
    for (int f0 : p.interior_faces()) {
        if (comp[f0] >= 0) continue;
        if (next_label >= 2)
            raise(Err::InvalidArgument, "chord does not split the patch in two");
        int label = next_label++;
        std::queue<int> qq;
        comp[f0] = label;
        ++sizes[label];
        qq.push(f0);
        while (!qq.empty()) {
            int f = qq.front();
            qq.pop();
            const auto& verts = host.face(f).vertices;
            const int fl = static_cast<int>(verts.size());
            for (int i = 0; i < fl; ++i) {
                Edge e = Edge::of(verts[i], verts[(i + 1) % fl]);
                if (p.boundary_edge(e) || edge_set_contains(walls, e)) continue;
                int other = host.face_left_of(verts[(i + 1) % fl], verts[i]);
                auto it = comp.find(other);
                if (it != comp.end() && it->second < 0) {
                    it->second = label;
                    ++sizes[label];
                    qq.push(other);
                }
            }
        }
    }
    if (next_label != 2) raise(Err::InvalidArgument, "chord does not split the patch in two");
    std::vector<int> labels;
    labels.reserve(comp.size());
    for (int f : p.interior_faces()) labels.push_back(comp[f]);
    return {labels, sizes};
}

} // namespace

std::vector<Chord> find_chords(const Patch& p, int lmax) {
    const CubicPlanarGraph& g = p.host().graph();
    std::set<std::vector<int>> seen;
    std::vector<Chord> out;

    std::vector<int> path;
    auto record = [&](const std::vector<int>& pth) {
        std::vector<int> canon = pth;
        std::vector<int> rev(pth.rbegin(), pth.rend());
        if (rev < canon) canon = rev;
        if (!seen.insert(canon).second) return;
        Chord c;
        c.path = canon;
        auto [labels, sizes] = chord_partition(p, c);
        (void)labels;
        c.splits_off_face = sizes[0] == 1 || sizes[1] == 1;
        out.push_back(std::move(c));
    };

    auto extend = [&](auto&& self, int u) -> void {
        for (int w : g.rotation(u)) {
            Edge e = Edge::of(u, w);
            if (!p.has_edge(e) || p.boundary_edge(e)) continue;
            if (p.on_boundary(w)) {
                if (w != path.front()) {
                    path.push_back(w);
                    record(path);
                    path.pop_back();
                }
                continue;
            }
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (static_cast<int>(path.size()) < lmax) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        }
    };

    for (int v : p.boundary()) {
        path.assign(1, v);
        extend(extend, v);
    }

    std::sort(out.begin(), out.end(), [](const Chord& a, const Chord& b) {
        if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
        return a.path < b.path;
    });
    return out;
}

std::pair<Patch, Patch> split_by_chord(const Patch& p, const Chord& q) {
    const auto& bd = p.boundary();
    const int L = static_cast<int>(bd.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < L; ++i) {
        if (bd[i] == q.path.front()) ia = i;
        if (bd[i] == q.path.back()) ib = i;
    }
    if (ia < 0 || ib < 0 || ia == ib)
        raise(Err::InvalidArgument, "chord endpoints not on the boundary");

    auto side_cycle = [&](int from, int to, bool forward_chord) {
        std::vector<int> cyc;
        for (int i = from; i != to; i = (i + 1) % L) cyc.push_back(bd[i]);
        cyc.push_back(bd[to]);
        // append chord interior walking back to `from`'s vertex
        if (forward_chord) {
            for (std::size_t k = q.path.size() - 2; k >= 1; --k) cyc.push_back(q.path[k]);
        } else {
            for (std::size_t k = 1; k + 1 < q.path.size(); ++k) cyc.push_back(q.path[k]);
        }
        return cyc;
    };

    auto [labels, sizes] = chord_partition(p, q);
    (void)sizes;
    auto comp_of_face = [&](int face) {
        auto it = std::lower_bound(p.interior_faces().begin(), p.interior_faces().end(), face);
        return labels[it - p.interior_faces().begin()];
    };
    // seed each side with the interior face bordering the first edge of its arc
    auto arc_seed = [&](int from) {
        Edge e = Edge::of(bd[from], bd[(from + 1) % L]);
        auto [fa, fb] = p.host().faces_of_edge(e);
        return p.interior_face(fa) ? fa : fb;
    };

    // arc a->b plus chord b->a, and arc b->a plus chord a->b
    std::vector<int> cyc1 = side_cycle(ia, ib, true);
    std::vector<int> cyc2 = side_cycle(ib, ia, false);
    int seed1 = arc_seed(ia);
    int seed2 = arc_seed(ib);
    if (comp_of_face(seed1) == comp_of_face(seed2))
        raise(Err::InvalidArgument, "chord arcs landed on one side"); // unreachable

    Patch p1(p.host(), cyc1, seed1);
    Patch p2(p.host(), cyc2, seed2);
    return {std::move(p1), std::move(p2)};
}

std::optional<SimplifyingCut> find_simplifying_cut(const Patch& p) {
    std::vector<Chord> chords = find_chords(p, 4);

    for (const Chord& c : chords) {
        if (c.length() > 3) continue;
        auto [p1, p2] = split_by_chord(p, c);
        int t1 = p1.stats().t, t2 = p2.stats().t;
        if (t1 + t2 < p.stats().t) return SimplifyingCut{ShortChordCut{c, t1, t2}};
    }

    std::vector<const Chord*> four;
    for (const Chord& c : chords)
        if (c.length() == 4) four.push_back(&c);

    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    };
    auto rungs_match = [&p](const std::vector<int>& v, const std::vector<int>& w) {
        return p.has_edge(Edge::of(v[0], w[0])) && p.has_edge(Edge::of(v[2], w[2])) &&
               p.has_edge(Edge::of(v[4], w[4]));
    };

    for (std::size_t i = 0; i < four.size(); ++i) {
        for (std::size_t j = i + 1; j < four.size(); ++j) {
            const auto& a = four[i]->path;
            const auto& b = four[j]->path;
            if (!disjoint(a, b)) continue;
            std::vector<int> brev(b.rbegin(), b.rend());
            const std::vector<int>* matched = nullptr;
            if (rungs_match(a, b))
                matched = &b;
            else if (rungs_match(a, brev))
                matched = &brev;
            if (matched) {
                Paired4ChordsCut cut;
                std::copy(a.begin(), a.end(), cut.q1.begin());
                std::copy(matched->begin(), matched->end(), cut.q2.begin());
                return SimplifyingCut{cut};
            }
        }
    }
    return std::nullopt;
}

bool is_normal(const Patch& p) {
    if (classify_patch(p) != PatchClass::Other) return false;
    // no interior 5-face may share an edge with the boundary
    for (int f : p.interior_faces()) {
        const Face& face = p.host().face(f);
        if (face.length() != 5) continue;
        const int fl = face.length();
        for (int i = 0; i < fl; ++i)
            if (p.boundary_edge(Edge::of(face.vertices[i], face.vertices[(i + 1) % fl])))
                return false;
    }
    return !find_simplifying_cut(p).has_value();
}

// ---------------------------------------------------------------------------
// peeling

PeelResult peel(const Patch& p) {
    if (!is_normal(p)) raise(Err::NotNormal, "peel requires a normal patch");
    const Fullerene& host = p.host();
    const CubicPlanarGraph& g = host.graph();

    // outer layer: faces sharing an edge with the boundary
    std::set<int> layer;
    for (int f : p.interior_faces()) {
        const auto& verts = host.face(f).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i)
            if (p.boundary_edge(Edge::of(verts[i], verts[(i + 1) % fl]))) {
                layer.insert(f);
                break;
            }
    }

    // pinch vertices: interior vertices with two or more neighbors on the
    // boundary
    std::set<int> pinch;
    for (int v : p.vertices()) {
        if (p.on_boundary(v)) continue;
        int cnt = 0;
        for (int w : g.rotation(v))
            if (p.on_boundary(w)) ++cnt;
        if (cnt >= 2) pinch.insert(v);
    }

    // o' = (edges incident with layer faces) - boundary vertices - pinch set
    std::map<int, std::vector<int>> o_adj;
    for (int f : layer) {
        const auto& verts = host.face(f).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i) {
            int u = verts[i], v = verts[(i + 1) % fl];
            if (p.on_boundary(u) || p.on_boundary(v)) continue;
            if (pinch.count(u) || pinch.count(v)) continue;
            auto& lu = o_adj[u];
            if (std::find(lu.begin(), lu.end(), v) == lu.end()) {
                o_adj[u].push_back(v);
                o_adj[v].push_back(u);
            }
        }
    }
    if (o_adj.size() < 3) raise(Err::LayerLemmaViolated, "inner boundary too small");
    for (auto& [v, nb] : o_adj) {
        std::sort(nb.begin(), nb.end());
        if (nb.size() != 2)
            raise(Err::LayerLemmaViolated,
                  "inner boundary vertex " + std::to_string(v) + " has degree " +
                      std::to_string(nb.size()));
    }
    std::vector<int> inner_cycle;
    {
        int start = o_adj.begin()->first;
        int prev = -1, cur = start;
        do {
            inner_cycle.push_back(cur);
            const auto& nb = o_adj[cur];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        } while (cur != start && inner_cycle.size() <= o_adj.size());
        if (cur != start || inner_cycle.size() != o_adj.size())
            raise(Err::LayerLemmaViolated, "inner boundary is not a single cycle");
    }

    // seed: the non-layer side of an inner-boundary edge
    int seed = -1;
    {
        Edge e = Edge::of(inner_cycle[0], inner_cycle[1]);
        auto [fa, fb] = host.faces_of_edge(e);
        bool la = layer.count(fa) > 0, lb = layer.count(fb) > 0;
        if (la == lb) raise(Err::LayerLemmaViolated, "inner boundary edge not on the layer rim");
        seed = la ? fb : fa;
        if (!p.interior_face(seed))
            raise(Err::LayerLemmaViolated, "peeled region escapes the patch");
    }

    Patch inner(host, inner_cycle, seed);

    for (int f : inner.interior_faces())
        if (!p.interior_face(f) || layer.count(f))
            raise(Err::LayerLemmaViolated, "peeled region overlaps the removed layer");

    const BoundaryStats& so = p.stats();
    const BoundaryStats& si = inner.stats();
    if (si.t != so.t || si.s != so.s || si.s2 < so.s2 ||
        si.len != so.len + 2 * so.p - 12 - 2 * so.s2)
        raise(Err::LayerLemmaViolated,
              "layer counts off: outer(l=" + std::to_string(so.len) + ",s=" +
                  std::to_string(so.s) + ",t=" + std::to_string(so.t) + ",s2=" +
                  std::to_string(so.s2) + ",p=" + std::to_string(so.p) + ") inner(l=" +
                  std::to_string(si.len) + ",s=" + std::to_string(si.s) + ",t=" +
                  std::to_string(si.t) + ",s2=" + std::to_string(si.s2) + ")");

    PeelReport rep;
    rep.outer = so;
    rep.inner = si;
    rep.layer_faces = static_cast<int>(layer.size());
    rep.pinch_vertices = static_cast<int>(pinch.size());
    return PeelResult{std::move(inner), rep};
}

BoundaryDescription rewrite_description(const BoundaryDescription& d) {
    using Token = BoundaryDescription::Token;
    const auto& toks = d.tokens();

    std::vector<Token::Kind> letters;
    std::vector<int> gaps; // gaps[i] follows letters[i], cyclically
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].kind == Token::Run) continue;
        letters.push_back(toks[i].kind);
        const auto& next = toks[(i + 1) % toks.size()];
        gaps.push_back(next.kind == Token::Run ? next.run : 0);
    }
    const int m = static_cast<int>(letters.size());
    if (m == 0) return d; // all-23 boundary peels to itself

    auto left_gap = [&](int i) { return (i + m - 1) % m; };
    std::vector<bool> pair_right(m, false);
    for (int i = 0; i < m; ++i)
        pair_right[i] =
            letters[i] == Token::B && letters[(i + 1) % m] == Token::B && gaps[i] == 0 && m > 1;

    std::vector<int> out = gaps;
    for (int i = 0; i < m; ++i) {
        bool in_right = pair_right[i];
        bool in_left = pair_right[left_gap(i)];
        if (letters[i] == Token::A) {
            ++out[left_gap(i)];
            ++out[i];
        } else if (in_right && in_left) {
            raise(Err::NegativeRunLength, "three consecutive 22-edges");
        } else if (in_right) {
            out[left_gap(i)] -= 3;
        } else if (in_left) {
            out[i] -= 3;
        } else {
            --out[left_gap(i)];
            --out[i];
        }
    }
    for (int v : out)
        if (v < 0) raise(Err::NegativeRunLength, "run would become negative");

    std::vector<Token> result;
    for (int i = 0; i < m; ++i) {
        result.push_back({letters[i], 0});
        if (out[i] > 0) result.push_back({Token::Run, out[i]});
    }
    return BoundaryDescription::from_tokens(std::move(result));
}

PeelingSequence uninterrupted_peeling(const Patch& p) {
    PeelingSequence seq;
    seq.cycles.push_back(p.boundary());
    seq.stats.push_back(p.stats());
    std::optional<Patch> cur(p);
    while (is_normal(*cur)) {
        PeelResult res = peel(*cur);
        seq.cycles.push_back(res.inner.boundary());
        seq.stats.push_back(res.inner.stats());
        cur.emplace(std::move(res.inner));
    }
    return seq;
}

bool check_peeling_volume(const Patch& p, const PeelingSequence& seq) {
    if (p.stats().p == 6)
        raise(Err::PreconditionP6, "peeling volume bound requires p != 6");
    const int k = seq.k();
    if (k <= 1) return true; // no peeled layers
    long long outside = 0;
    for (int i = 0; i + 1 < k; ++i) outside += static_cast<long long>(seq.cycles[i].size());
    return 9 * outside >= 4LL * k * k;
}

} // namespace fg
