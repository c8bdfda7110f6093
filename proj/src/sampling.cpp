#include "fg/sampling.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fg {

namespace {

std::vector<std::vector<int>> face_adjacency(const Fullerene& f) {
    std::vector<std::vector<int>> adj(f.face_count());
    for (int id = 0; id < f.face_count(); ++id) {
        const auto& verts = f.face(id).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i)
            adj[id].push_back(f.face_left_of(verts[(i + 1) % fl], verts[i]));
    }
    return adj;
}

// other face across edge (verts[i], verts[i+1]) of face `id`
int across(const Fullerene& f, int id, int i) {
    const auto& verts = f.face(id).vertices;
    const int fl = static_cast<int>(verts.size());
    return f.face_left_of(verts[(i + 1) % fl], verts[i]);
}

} // namespace

std::vector<int> face_ball(const Fullerene& f, int center, int radius) {
    std::vector<int> dist(f.face_count(), -1);
    std::queue<int> q;
    dist[center] = 0;
    q.push(center);
    std::vector<int> out{center};
    while (!q.empty()) {
        int id = q.front();
        q.pop();
        if (dist[id] == radius) continue;
        const int fl = f.face(id).length();
        for (int i = 0; i < fl; ++i) {
            int other = across(f, id, i);
            if (dist[other] < 0) {
                dist[other] = dist[id] + 1;
                out.push_back(other);
                q.push(other);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> region_boundary_cycle(const Fullerene& f,
                                                      const std::vector<int>& faces) {
    std::vector<char> in_set(f.face_count(), 0);
    for (int id : faces) in_set[id] = 1;

    std::map<int, std::vector<int>> border; // vertex -> border neighbors
    int border_edges = 0;
    for (int id : faces) {
        const auto& verts = f.face(id).vertices;
        const int fl = static_cast<int>(verts.size());
        for (int i = 0; i < fl; ++i) {
            if (in_set[across(f, id, i)]) continue;
            int u = verts[i], v = verts[(i + 1) % fl];
            border[u].push_back(v);
            border[v].push_back(u);
            ++border_edges;
        }
    }
    if (border_edges < 3) return std::nullopt;
    for (auto& [v, nb] : border)
        if (nb.size() != 2) return std::nullopt;

    std::vector<int> cycle;
    int start = border.begin()->first;
    int prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        const auto& nb = border.at(cur);
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != start && cycle.size() <= border.size());
    if (cur != start || cycle.size() != border.size()) return std::nullopt;
    return cycle;
}

namespace {

std::optional<Patch> side_patch(const Fullerene& f, const std::vector<int>& faces, int seed,
                                const std::vector<int>& expected_interior) {
    auto cycle = region_boundary_cycle(f, faces);
    if (!cycle) return std::nullopt;
    try {
        Patch p(f, *cycle, seed);
        if (p.interior_faces() != expected_interior) return std::nullopt;
        return p;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::optional<Patch> region_patch(const Fullerene& f, const std::vector<int>& faces) {
    if (faces.empty()) return std::nullopt;
    std::vector<int> sorted = faces;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return side_patch(f, sorted, sorted.front(), sorted);
}

std::optional<Patch> complement_patch(const Fullerene& f, const std::vector<int>& faces) {
    std::vector<char> in_set(f.face_count(), 0);
    for (int id : faces) in_set[id] = 1;
    std::vector<int> comp;
    for (int id = 0; id < f.face_count(); ++id)
        if (!in_set[id]) comp.push_back(id);
    if (comp.empty()) return std::nullopt;
    std::vector<int> sorted = faces;
    std::sort(sorted.begin(), sorted.end());
    return side_patch(f, sorted, comp.front(), comp);
}

std::vector<int> grow_region(const Fullerene& f, Rng& rng, int target_faces) {
    auto adj = face_adjacency(f);
    std::vector<char> in_set(f.face_count(), 0);
    std::vector<int> region;
    std::vector<int> frontier;

    int seed = static_cast<int>(rng.below(f.face_count()));
    in_set[seed] = 1;
    region.push_back(seed);
    frontier.push_back(seed);

    while (static_cast<int>(region.size()) < target_faces && !frontier.empty()) {
        int pick = static_cast<int>(rng.below(frontier.size()));
        int id = frontier[pick];
        std::vector<int> fresh;
        for (int other : adj[id])
            if (!in_set[other]) fresh.push_back(other);
        if (fresh.empty()) {
            frontier[pick] = frontier.back();
            frontier.pop_back();
            continue;
        }
        int chosen = fresh[rng.below(fresh.size())];
        in_set[chosen] = 1;
        region.push_back(chosen);
        frontier.push_back(chosen);
    }
    std::sort(region.begin(), region.end());
    return region;
}

std::optional<Patch> find_hexagon_flower(const Fullerene& f) {
    for (int id = 0; id < f.face_count(); ++id) {
        if (f.face(id).length() != 6) continue;
        bool all_hex = true;
        std::set<int> petals;
        for (int i = 0; i < 6 && all_hex; ++i) {
            int other = across(f, id, i);
            if (f.face(other).length() != 6) all_hex = false;
            petals.insert(other);
        }
        if (!all_hex || petals.size() != 6) continue;
        std::vector<int> region(petals.begin(), petals.end());
        region.push_back(id);
        if (auto p = region_patch(f, region)) return p;
    }
    return std::nullopt;
}

std::optional<Patch> find_hex_strip(const Fullerene& f, int hexagons) {
    if (hexagons < 1) return std::nullopt;
    for (int id = 0; id < f.face_count(); ++id) {
        if (f.face(id).length() != 6) continue;
        for (int dir = 0; dir < 6; ++dir) {
            std::vector<int> strip{id};
            int cur = id;
            int entry = dir; // edge index of cur shared with the next face
            bool ok = true;
            for (int step = 1; step < hexagons && ok; ++step) {
                int next = across(f, cur, entry);
                if (f.face(next).length() != 6 ||
                    std::find(strip.begin(), strip.end(), next) != strip.end()) {
                    ok = false;
                    break;
                }
                // locate the shared edge inside `next`, continue straight on
                Edge shared = Edge::of(f.face(cur).vertices[entry],
                                       f.face(cur).vertices[(entry + 1) % 6]);
                int at = -1;
                for (int i = 0; i < 6; ++i) {
                    Edge e = Edge::of(f.face(next).vertices[i], f.face(next).vertices[(i + 1) % 6]);
                    if (e == shared) at = i;
                }
                strip.push_back(next);
                cur = next;
                entry = (at + 3) % 6; // opposite edge: straight strip
            }
            if (!ok) continue;
            if (auto p = region_patch(f, strip)) {
                if (classify_patch(*p) == PatchClass::SlimWorm) return p;
            }
        }
    }
    return std::nullopt;
}

std::optional<Patch> find_face_corona_around_path(const Fullerene& f, int path_len) {
    const CubicPlanarGraph& g = f.graph();
    const int n = g.vertex_count();

    std::vector<int> path;
    auto try_path = [&]() -> std::optional<Patch> {
        std::set<int> region;
        for (int v : path)
            for (int slot = 0; slot < 3; ++slot) region.insert(f.face_of_dart(v, slot));
        for (int id : region)
            if (f.face(id).length() != 6) return std::nullopt;
        std::vector<int> faces(region.begin(), region.end());
        auto p = region_patch(f, faces);
        if (!p) return std::nullopt;
        // interior must be exactly the chosen spine
        std::vector<int> interior;
        for (int v : p->vertices())
            if (!p->on_boundary(v)) interior.push_back(v);
        std::vector<int> want = path;
        std::sort(want.begin(), want.end());
        if (interior != want) return std::nullopt;
        if (classify_patch(*p) != PatchClass::FatWorm) return std::nullopt;
        return p;
    };

    std::optional<Patch> found;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (static_cast<int>(path.size()) == path_len + 1) {
            if (auto p = try_path()) {
                found = std::move(p);
                return true;
            }
            return false;
        }
        for (int w : g.rotation(v)) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
        }
        return false;
    };

    for (int v = 0; v < n; ++v) {
        path.assign(1, v);
        if (path_len == 0) {
            if (auto p = try_path()) return p;
        } else if (dfs(dfs, v)) {
            return found;
        }
    }
    return std::nullopt;
}

std::optional<Patch> find_shell(const Fullerene& f) {
    const CubicPlanarGraph& g = f.graph();
    for (int c = 0; c < g.vertex_count(); ++c) {
        std::set<int> region;
        for (int slot = 0; slot < 3; ++slot) region.insert(f.face_of_dart(c, slot));
        for (int m : g.rotation(c))
            for (int slot = 0; slot < 3; ++slot) region.insert(f.face_of_dart(m, slot));
        if (region.size() != 6) continue;
        bool all_hex = true;
        for (int id : region)
            if (f.face(id).length() != 6) all_hex = false;
        if (!all_hex) continue;
        std::vector<int> faces(region.begin(), region.end());
        auto p = region_patch(f, faces);
        if (p && classify_patch(*p) == PatchClass::Shell) return p;
    }
    return std::nullopt;
}

std::optional<Patch> find_double_flower_cut_patch(const Fullerene& f) {
    for (int h1 = 0; h1 < f.face_count(); ++h1) {
        if (f.face(h1).length() != 6) continue;
        for (int ei = 0; ei < 6; ++ei) {
            int h2 = across(f, h1, ei);
            if (h2 <= h1 || f.face(h2).length() != 6) continue;

            const auto& c1 = f.face(h1).vertices;
            int p = c1[ei], q = c1[(ei + 1) % 6];
            // walk h1 from p away from q: v1, v0, w0, w1; and h2: v3, v4, w4, w3
            auto walk = [&](int face, int from, int avoid) {
                const auto& verts = f.face(face).vertices;
                const int fl = static_cast<int>(verts.size());
                int at = -1;
                for (int i = 0; i < fl; ++i)
                    if (verts[i] == from) at = i;
                std::vector<int> seq;
                int step = (verts[(at + 1) % fl] == avoid) ? -1 : 1;
                for (int k = 1; k < fl; ++k) seq.push_back(verts[(at + step * k + fl * 6) % fl]);
                return seq; // 5 vertices, ending next to `avoid`
            };
            // label: v2 = p, w2 = q
            std::vector<int> a = walk(h1, p, q); // v1, v0, w0, w1, (q)
            std::vector<int> b = walk(h2, p, q); // v3, v4, w4, w3, (q)
            std::array<int, 5> v{a[1], a[0], p, b[0], b[1]};
            std::array<int, 5> w{a[2], a[3], q, b[3], b[2]};

            std::set<int> region{h1, h2};
            bool ok = true;
            auto add_other = [&](int x, int y) {
                int fa = f.face_left_of(x, y), fb = f.face_left_of(y, x);
                int other = (fa == h1 || fa == h2) ? fb : fa;
                if (f.face(other).length() != 6) ok = false;
                region.insert(other);
            };
            for (int i = 0; i + 1 < 5 && ok; ++i) {
                add_other(v[i], v[i + 1]);
                add_other(w[i], w[i + 1]);
            }
            if (!ok || region.size() != 8) continue;
            // the two end faces must stay outside
            int endA = f.face_left_of(v[0], w[0]), endA2 = f.face_left_of(w[0], v[0]);
            int endB = f.face_left_of(v[4], w[4]), endB2 = f.face_left_of(w[4], v[4]);
            if (region.count(endA) + region.count(endA2) != 1) continue;
            if (region.count(endB) + region.count(endB2) != 1) continue;

            std::vector<int> faces(region.begin(), region.end());
            if (auto patch = region_patch(f, faces)) return patch;
        }
    }
    return std::nullopt;
}

} // namespace fg
