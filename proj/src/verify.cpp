#include "fg/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fg/bipartizer.hpp"
#include "fg/generators.hpp"
#include "fg/sampling.hpp"

namespace fg {

namespace {

struct Host {
    std::string name;
    Fullerene graph;
};

std::vector<Host> patch_roster() {
    std::vector<Host> hosts;
    hosts.push_back({"hexagonal_barrel", hexagonal_barrel()});
    hosts.push_back({"leapfrog1", leapfrog_iterate(1)});
    hosts.push_back({"leapfrog2", leapfrog_iterate(2)});
    hosts.push_back({"leapfrog3", leapfrog_iterate(3)});
    hosts.push_back({"leapfrog4", leapfrog_iterate(4)});
    hosts.push_back({"nanotube3", nanotube(3)});
    hosts.push_back({"nanotube6", nanotube(6)});
    hosts.push_back({"nanotube12", nanotube(12)});
    return hosts;
}

std::string patch_context(const Host& host, const Patch& p) {
    std::ostringstream os;
    os << "host=" << host.name << " boundary=[";
    for (std::size_t i = 0; i < p.boundary().size(); ++i)
        os << (i ? " " : "") << p.boundary()[i];
    os << "]";
    return os.str();
}

// Streams distinct sampled patches into `cb` until `target` have been
// accepted or the attempt budget runs out.  Returns the number accepted.
// cb returns false to abort (failure is recorded by the caller).
template <class CB>
long long for_sampled_patches(const std::vector<Host>& hosts, Rng& rng, long target,
                              bool need_normal, CB&& cb) {
    std::set<std::string> seen;
    long long accepted = 0;
    long long attempts = 0;
    const long long max_attempts = 400LL * target;

    while (accepted < target && attempts < max_attempts) {
        ++attempts;
        const Host& host = hosts[rng.below(hosts.size())];
        const Fullerene& f = host.graph;

        std::optional<Patch> p;
        switch (rng.below(3)) {
        case 0: { // dual ball
            int center = static_cast<int>(rng.below(f.face_count()));
            int radius = 1 + static_cast<int>(rng.below(3));
            p = region_patch(f, face_ball(f, center, radius));
            break;
        }
        case 1: { // random grown region
            int size = 2 + static_cast<int>(rng.below(24));
            p = region_patch(f, grow_region(f, rng, size));
            break;
        }
        default: { // complement of a small ball
            int center = static_cast<int>(rng.below(f.face_count()));
            int radius = static_cast<int>(rng.below(3));
            p = complement_patch(f, face_ball(f, center, radius));
            break;
        }
        }
        if (!p) continue;
        if (need_normal && !is_normal(*p)) continue;

        std::string key = host.name + ":";
        for (int id : p->interior_faces()) key += std::to_string(id) + ",";
        if (!seen.insert(std::move(key)).second) continue;

        ++accepted;
        if (!cb(host, *p)) break;
    }
    return accepted;
}

SuiteReport fail(const std::string& suite, long long checks, const std::string& detail) {
    return SuiteReport{suite, false, checks, detail};
}

SuiteReport pass(const std::string& suite, long long checks, const std::string& detail) {
    return SuiteReport{suite, true, checks, detail};
}

// --------------------------------------------------------------------------
// n22: s = 6 - p + t on every patch; exhaustive one- and two-face patches
// plus randomized regions

SuiteReport verify_n22(const SuiteOptions& opts) {
    const long target = opts.samples > 0 ? opts.samples : 10000;
    long long checks = 0;

    std::vector<Host> exhaustive_hosts;
    exhaustive_hosts.push_back({"dodecahedron", dodecahedron()});
    exhaustive_hosts.push_back({"hexagonal_barrel", hexagonal_barrel()});
    exhaustive_hosts.push_back({"leapfrog1", leapfrog_iterate(1)});
    exhaustive_hosts.push_back({"leapfrog2", leapfrog_iterate(2)});
    exhaustive_hosts.push_back({"nanotube2", nanotube(2)});
    exhaustive_hosts.push_back({"nanotube5", nanotube(5)});

    try {
        for (const Host& host : exhaustive_hosts) {
            const Fullerene& f = host.graph;
            for (int id = 0; id < f.face_count(); ++id) {
                auto p = region_patch(f, {id});
                if (!p) return fail("n22", checks, "single-face patch failed at " + host.name);
                const auto& st = p->stats();
                if (st.s != 6 - st.p + st.t) return fail("n22", checks, patch_context(host, *p));
                ++checks;
            }
            for (int id = 0; id < f.face_count(); ++id) {
                const int fl = f.face(id).length();
                for (int i = 0; i < fl; ++i) {
                    const auto& verts = f.face(id).vertices;
                    int other = f.face_left_of(verts[(i + 1) % fl], verts[i]);
                    if (other <= id) continue;
                    auto p = region_patch(f, {id, other});
                    if (!p) return fail("n22", checks, "two-face patch failed at " + host.name);
                    const auto& st = p->stats();
                    if (st.s != 6 - st.p + st.t)
                        return fail("n22", checks, patch_context(host, *p));
                    ++checks;
                }
            }
        }

        std::vector<Host> hosts = patch_roster();
        Rng rng(opts.seed);
        std::string bad;
        long long sampled =
            for_sampled_patches(hosts, rng, target, false, [&](const Host& host, const Patch& p) {
                const auto& st = p.stats();
                if (st.s != 6 - st.p + st.t) {
                    bad = patch_context(host, p);
                    return false;
                }
                ++checks;
                return true;
            });
        if (!bad.empty()) return fail("n22", checks, bad);
        if (sampled < target)
            return fail("n22", checks,
                        "only " + std::to_string(sampled) + " of " + std::to_string(target) +
                            " samples materialized");
    } catch (const Error& e) {
        return fail("n22", checks, e.what());
    }
    return pass("n22", checks, "identity s = 6 - p + t");
}

// --------------------------------------------------------------------------
// layer: peel preserves t and s, does not decrease s2, obeys the length
// formula, and the syntactic description rewrite agrees with geometry

SuiteReport verify_layer(const SuiteOptions& opts) {
    const long target = opts.samples > 0 ? opts.samples : 1000;
    long long checks = 0;
    std::vector<Host> hosts = patch_roster();
    Rng rng(opts.seed);
    std::string bad;

    long long sampled =
        for_sampled_patches(hosts, rng, target, true, [&](const Host& host, const Patch& p) {
            try {
                PeelResult res = peel(p);
                const auto& so = p.stats();
                const auto& si = res.inner.stats();
                if (si.t != so.t || si.s != so.s || si.s2 < so.s2 ||
                    si.len != so.len + 2 * so.p - 12 - 2 * so.s2) {
                    bad = "layer counts: " + patch_context(host, p);
                    return false;
                }
                BoundaryDescription rewritten = rewrite_description(describe_boundary(p));
                if (!(rewritten == describe_boundary(res.inner))) {
                    bad = "rewrite mismatch (" + rewritten.str() +
                          " vs " + describe_boundary(res.inner).str() + "): " +
                          patch_context(host, p);
                    return false;
                }
            } catch (const Error& e) {
                bad = std::string(e.what()) + " at " + patch_context(host, p);
                return false;
            }
            ++checks;
            return true;
        });
    if (!bad.empty()) return fail("layer", checks, bad);
    if (sampled < target)
        return fail("layer", checks,
                    "only " + std::to_string(sampled) + " of " + std::to_string(target) +
                        " normal patches materialized");
    return pass("layer", checks, "peel + description rewrite agree");
}

// --------------------------------------------------------------------------
// nochord: on normal patches every chord of length <= 3 has length >= 2,
// splits off a face, and touches at most len-2 boundary 33-edges

SuiteReport verify_nochord(const SuiteOptions& opts) {
    const long target = opts.samples > 0 ? opts.samples : 1000;
    long long checks = 0;
    long long chords_seen = 0;
    std::vector<Host> hosts = patch_roster();
    Rng rng(opts.seed);
    std::string bad;

    long long sampled =
        for_sampled_patches(hosts, rng, target, true, [&](const Host& host, const Patch& p) {
            const auto& bd = p.boundary();
            const auto& cls = p.boundary_classes();
            const int L = static_cast<int>(bd.size());
            for (const Chord& c : find_chords(p, 3)) {
                ++chords_seen;
                int incident33 = 0;
                for (int i = 0; i < L; ++i) {
                    if (cls[i] != BoundaryEdgeClass::E33) continue;
                    int a = bd[i], b = bd[(i + 1) % L];
                    int q0 = c.path.front(), q1 = c.path.back();
                    if (a == q0 || a == q1 || b == q0 || b == q1) ++incident33;
                }
                if (c.length() < 2 || !c.splits_off_face || incident33 > c.length() - 2) {
                    bad = "chord len=" + std::to_string(c.length()) +
                          " splits=" + std::to_string(c.splits_off_face) +
                          " incident33=" + std::to_string(incident33) + " at " +
                          patch_context(host, p);
                    return false;
                }
            }
            ++checks;
            return true;
        });
    if (!bad.empty()) return fail("nochord", checks, bad);
    if (sampled < target)
        return fail("nochord", checks,
                    "only " + std::to_string(sampled) + " of " + std::to_string(target) +
                        " normal patches materialized");
    return pass("nochord", checks,
                "checked " + std::to_string(chords_seen) + " chords on " +
                    std::to_string(checks) + " normal patches");
}

// --------------------------------------------------------------------------
// peeling: vertices outside the last cycle of an uninterrupted peeling with
// p != 6 number at least 4k^2/9

SuiteReport verify_peeling(const SuiteOptions& opts) {
    const long target = opts.samples > 0 ? opts.samples : 1000;
    long long checks = 0;
    long long peelings = 0;
    int deepest = 0;
    std::vector<Host> hosts = patch_roster();
    Rng rng(opts.seed);
    std::string bad;

    long long sampled =
        for_sampled_patches(hosts, rng, target, true, [&](const Host& host, const Patch& p) {
            ++checks;
            if (p.stats().p == 6) return true; // outside the precondition
            try {
                PeelingSequence seq = uninterrupted_peeling(p);
                deepest = std::max(deepest, seq.k());
                if (!check_peeling_volume(p, seq)) {
                    bad = "4k^2/9 volume bound failed, k=" + std::to_string(seq.k()) + " at " +
                          patch_context(host, p);
                    return false;
                }
                ++peelings;
            } catch (const Error& e) {
                bad = std::string(e.what()) + " at " + patch_context(host, p);
                return false;
            }
            return true;
        });
    if (!bad.empty()) return fail("peeling", checks, bad);
    if (sampled < target)
        return fail("peeling", checks,
                    "only " + std::to_string(sampled) + " of " + std::to_string(target) +
                        " normal patches materialized");
    return pass("peeling", checks,
                std::to_string(peelings) + " peelings, deepest k=" + std::to_string(deepest));
}

// --------------------------------------------------------------------------
// dist: every pentagon has at least five others within sqrt(63n/2) + 14

SuiteReport verify_dist(const SuiteOptions& opts) {
    const long max_rings = opts.samples > 0 ? opts.samples : 100;
    long long checks = 0;
    try {
        for (int k = 0; k <= max_rings; ++k) {
            Fullerene f = nanotube(k);
            ProximityReport rep = check_pentagon_proximity(f);
            if (!rep.all_at_least_five)
                return fail("dist", checks, "nanotube k=" + std::to_string(k));
            ++checks;
        }
        for (int m = 0; m <= 4; ++m) {
            Fullerene f = leapfrog_iterate(m);
            ProximityReport rep = check_pentagon_proximity(f);
            if (!rep.all_at_least_five)
                return fail("dist", checks, "leapfrog m=" + std::to_string(m));
            ++checks;
        }
        {
            Fullerene f = hexagonal_barrel();
            if (!check_pentagon_proximity(f).all_at_least_five)
                return fail("dist", checks, "hexagonal_barrel");
            ++checks;
        }
    } catch (const Error& e) {
        return fail("dist", checks, e.what());
    }
    return pass("dist", checks, "min thresholded degree >= 5 on all instances");
}

// --------------------------------------------------------------------------
// match: min-degree-5 graphs on 12 vertices have a perfect matching or
// contain K_{5,7}

namespace {

Graph12 random_min_degree5(Rng& rng) {
    Graph12 g;
    if (rng.chance(1, 10)) {
        // planted K_{5,7}: pick a random 5-set, join it across, sprinkle
        // extra edges inside the 7-side
        int five = 0;
        while (__builtin_popcount(five) < 5) five |= 1 << rng.below(12);
        for (int i = 0; i < 12; ++i) {
            if (!((five >> i) & 1)) continue;
            for (int j = 0; j < 12; ++j)
                if (!((five >> j) & 1)) g.add_edge(i, j);
        }
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (!((five >> i) & 1) && !((five >> j) & 1) && rng.chance(1, 4))
                    g.add_edge(i, j);
        return g;
    }
    int percent = 45 + static_cast<int>(rng.below(51));
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (rng.chance(percent, 100)) g.add_edge(i, j);
    // repair: raise every low-degree vertex deterministically
    for (int i = 0; i < 12; ++i) {
        while (g.degree(i) < 5) {
            int off = static_cast<int>(rng.below(12));
            for (int step = 0; step < 12; ++step) {
                int j = (off + step) % 12;
                if (j != i && !g.has_edge(i, j)) {
                    g.add_edge(i, j);
                    break;
                }
            }
        }
    }
    return g;
}

} // namespace

SuiteReport verify_match(const SuiteOptions& opts) {
    const long target = opts.samples > 0 ? opts.samples : 100000;
    long long checks = 0;

    Graph12 k12, two_k6, k57;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            k12.add_edge(i, j);
            if (i / 6 == j / 6) two_k6.add_edge(i, j);
            if (i < 5 && j >= 5) k57.add_edge(i, j);
        }
    if (!has_perfect_matching_12(k12) || contains_K57(k12) == false)
        return fail("match", checks, "K12 fixture");
    if (!has_perfect_matching_12(two_k6) || contains_K57(two_k6))
        return fail("match", checks, "2K6 fixture");
    if (has_perfect_matching_12(k57) || !contains_K57(k57))
        return fail("match", checks, "K_{5,7} fixture");
    checks += 3;

    Rng rng(opts.seed);
    for (long it = 0; it < target; ++it) {
        Graph12 g = random_min_degree5(rng);
        if (g.min_degree() < 5) return fail("match", checks, "generator broke min degree");
        if (!has_perfect_matching_12(g) && !contains_K57(g)) {
            std::string adj;
            for (int i = 0; i < 12; ++i) adj += std::to_string(g.adj[i]) + " ";
            return fail("match", checks, "counterexample adjacency rows: " + adj);
        }
        ++checks;
    }
    return pass("match", checks, "matching-or-K57 holds");
}

// --------------------------------------------------------------------------
// theorem1: the exhaustive search oracle agrees with the matching-based
// bipartizer on every small fixture

SuiteReport verify_theorem1(const SuiteOptions& opts) {
    (void)opts;
    long long checks = 0;
    struct Fix {
        std::string name;
        Fullerene f;
        int limit;
    };
    std::vector<Fix> fixtures;
    fixtures.push_back({"dodecahedron", dodecahedron(), 6});
    fixtures.push_back({"hexagonal_barrel", hexagonal_barrel(), 8});
    fixtures.push_back({"nanotube1", nanotube(1), 6});

    try {
        for (const Fix& fix : fixtures) {
            BipartizationResult res = bipartize(fix.f);
            std::optional<int> oracle = brute_force_b(fix.f, fix.limit);
            if (!oracle || *oracle != res.b)
                return fail("theorem1", checks,
                            fix.name + ": oracle=" +
                                (oracle ? std::to_string(*oracle) : std::string("exceeded")) +
                                " matching=" + std::to_string(res.b));
            ++checks;
        }
        // the dodecahedron needs all six removals
        if (brute_force_b(fixtures[0].f, 5).has_value())
            return fail("theorem1", checks, "dodecahedron bipartized with 5 edges");
        ++checks;
    } catch (const Error& e) {
        return fail("theorem1", checks, e.what());
    }
    return pass("theorem1", checks, "oracle equals matching weight on all fixtures");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"n22",  "nochord", "layer",   "peeling",
                                                "dist", "match",   "theorem1"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "n22") return verify_n22(opts);
    if (name == "nochord") return verify_nochord(opts);
    if (name == "layer") return verify_layer(opts);
    if (name == "peeling") return verify_peeling(opts);
    if (name == "dist") return verify_dist(opts);
    if (name == "match") return verify_match(opts);
    if (name == "theorem1") return verify_theorem1(opts);
    raise(Err::InvalidArgument, "unknown suite '" + name + "'");
}

} // namespace fg
