// fgraph: generate fullerene families, compute minimum bipartizing edge
// cuts, analyze boundary patches, and run the verification suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fg/bipartizer.hpp"
#include "fg/generators.hpp"
#include "fg/harness.hpp"
#include "fg/patch.hpp"
#include "fg/planar_code.hpp"
#include "fg/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct GraphSourceArgs {
    std::string family;
    int rings = 0;
    int iterations = 0;
    std::vector<std::string> inputs;
};

void add_source_flags(CLI::App* cmd, GraphSourceArgs& args) {
    cmd->add_option("--family", args.family,
                    "dodecahedron | nanotube | leapfrog | hexagonal_barrel");
    cmd->add_option("--rings", args.rings, "nanotube ring count");
    cmd->add_option("--iterations", args.iterations, "leapfrog iteration count");
    cmd->add_option("--in", args.inputs, "planar_code input file (repeatable)");
}

fg::FamilySpec spec_from_args(const GraphSourceArgs& args) {
    auto fam = fg::parse_family(args.family);
    if (!fam) fg::raise(fg::Err::InvalidArgument, "unknown family '" + args.family + "'");
    fg::FamilySpec spec;
    spec.family = *fam;
    spec.param = (*fam == fg::Family::Nanotube) ? args.rings : args.iterations;
    return spec;
}

// Collect inputs: file graphs first (in option order), then the family spec.
std::vector<fg::BatchInput> collect_inputs(const GraphSourceArgs& args) {
    std::vector<fg::BatchInput> inputs;
    for (const std::string& path : args.inputs) {
        std::vector<fg::CubicPlanarGraph> graphs;
        try {
            graphs = fg::read_planar_code_file(path);
        } catch (const fg::Error& e) {
            fg::raise(fg::Err::ValidationError, path + ": " + e.what());
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            try {
                inputs.push_back({fg::validate_fullerene(graphs[i]), "file", static_cast<long>(i)});
            } catch (const fg::Error& e) {
                fg::raise(fg::Err::ValidationError,
                          path + ": graph " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    if (!args.family.empty()) {
        fg::FamilySpec spec = spec_from_args(args);
        inputs.push_back({fg::make_family(spec), fg::family_name(spec.family), spec.param});
    }
    if (inputs.empty())
        fg::raise(fg::Err::InvalidArgument, "no inputs: pass --family and/or --in");
    return inputs;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) fg::raise(fg::Err::IoError, "cannot open " + out_path + " for writing");
    out << payload;
    if (!out) fg::raise(fg::Err::IoError, "short write to " + out_path);
}

int cmd_generate(const GraphSourceArgs& src, const std::string& out_path) {
    if (src.family.empty()) fg::raise(fg::Err::InvalidArgument, "generate requires --family");
    fg::FamilySpec spec = spec_from_args(src);
    fg::Fullerene f = fg::make_family(spec);
    fg::write_planar_code_file(out_path, {f.graph()});
    std::cerr << "wrote " << fg::family_name(spec.family) << " param=" << spec.param
              << " n=" << f.n() << " to " << out_path << "\n";
    return 0;
}

int cmd_bipartize(const GraphSourceArgs& src, const std::string& format,
                  const std::string& out_path, int jobs, bool emit_cut, bool no_timing,
                  bool strict_conjecture) {
    std::vector<fg::BatchInput> inputs = collect_inputs(src);
    fg::BatchOptions opts;
    opts.jobs = jobs > 0 ? jobs : fg::default_jobs();
    opts.with_timing = !no_timing;
    opts.strict_conjecture = strict_conjecture;
    std::vector<fg::RunRecord> records = fg::bipartize_batch(inputs, opts);
    std::string payload = (format == "json") ? fg::records_to_json(records, emit_cut)
                                             : fg::records_to_csv(records, emit_cut);
    write_output(out_path, payload);
    return 0;
}

ordered_json stats_json(const fg::BoundaryStats& st) {
    return ordered_json{{"len", st.len}, {"s", st.s}, {"t", st.t}, {"s2", st.s2}, {"p", st.p}};
}

int cmd_analyze_patch(const GraphSourceArgs& src, const std::string& cycle_arg, int seed_face,
                      const std::string& out_path) {
    std::vector<fg::BatchInput> inputs = collect_inputs(src);
    if (inputs.size() != 1)
        fg::raise(fg::Err::InvalidArgument, "analyze-patch expects exactly one input graph");
    const fg::Fullerene& f = inputs.front().graph;

    std::vector<int> cycle;
    std::stringstream ss(cycle_arg);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) cycle.push_back(std::stoi(tok));

    fg::Patch patch = fg::patch_from_cycle(f, cycle, seed_face);

    ordered_json out;
    out["n"] = f.n();
    out["interior_faces"] = patch.interior_faces().size();
    out["stats"] = stats_json(patch.stats());
    out["description"] = fg::describe_boundary(patch).str();
    out["class"] = fg::to_string(fg::classify_patch(patch));

    ordered_json chords = ordered_json::array();
    for (const fg::Chord& c : fg::find_chords(patch)) {
        chords.push_back(
            ordered_json{{"path", c.path}, {"splits_off_face", c.splits_off_face}});
    }
    out["chords"] = chords;

    if (auto cut = fg::find_simplifying_cut(patch)) {
        if (auto* sc = std::get_if<fg::ShortChordCut>(&*cut)) {
            out["simplifying_cut"] =
                ordered_json{{"kind", "short_chord"},
                             {"path", sc->chord.path},
                             {"t_split", ordered_json::array({sc->t1, sc->t2})}};
        } else {
            auto& pc = std::get<fg::Paired4ChordsCut>(*cut);
            out["simplifying_cut"] = ordered_json{{"kind", "paired_4_chords"},
                                                  {"q1", pc.q1},
                                                  {"q2", pc.q2}};
        }
    } else {
        out["simplifying_cut"] = nullptr;
    }

    const bool normal = fg::is_normal(patch);
    out["normal"] = normal;
    if (normal) {
        fg::PeelingSequence seq = fg::uninterrupted_peeling(patch);
        ordered_json lengths = ordered_json::array();
        for (const auto& cyc : seq.cycles) lengths.push_back(cyc.size());
        out["peeling"] = ordered_json{{"k", seq.k()}, {"cycle_lengths", lengths}};
        if (patch.stats().p != 6)
            out["peeling"]["volume_bound_ok"] = fg::check_peeling_volume(patch, seq);
    }
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, long samples) {
    fg::SuiteOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    std::vector<std::string> selected = suites;
    if (selected.empty() || (selected.size() == 1 && selected[0] == "all"))
        selected = fg::suite_names();

    bool all_ok = true;
    for (const std::string& name : selected) {
        fg::SuiteReport rep = fg::run_suite(name, opts);
        std::cout << (rep.passed ? "PASS" : "FAIL") << " " << rep.suite << " (" << rep.checks
                  << " checks): " << rep.detail << "\n";
        all_ok = all_ok && rep.passed;
    }
    return all_ok ? 0 : 1;
}

int cmd_bench(const std::string& family, const std::vector<long>& params,
              const std::string& out_path) {
    std::string csv = "family,param,n,validate_ms,dual_ms,metric_ms,matching_ms,cut_ms,"
                      "bipartite_check_ms,total_ms\n";
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    char buf[256];

    if (!family.empty()) {
        auto fam = fg::parse_family(family);
        if (!fam) fg::raise(fg::Err::InvalidArgument, "unknown family '" + family + "'");
        for (long p : params) {
            fg::FamilySpec spec{*fam, static_cast<int>(p)};
            auto t0 = clock::now();
            fg::Fullerene f = fg::make_family(spec); // includes validation
            auto t1 = clock::now();
            fg::DualGraph dual = fg::build_dual(f);
            auto t2 = clock::now();
            fg::PentagonMetric metric = fg::pentagon_metric(f, dual);
            auto t3 = clock::now();
            fg::PentagonMatching matching = fg::min_weight_perfect_matching(metric);
            auto t4 = clock::now();
            fg::EdgeSet cut = fg::recover_edge_cut(f, dual, matching);
            auto t5 = clock::now();
            fg::BipartiteCheck check =
                fg::is_bipartite(fg::remove_edges(f.graph().adjacency(), cut));
            auto t6 = clock::now();
            if (!check.bipartite) fg::raise(fg::Err::SuiteFailed, "cut did not bipartize");
            std::snprintf(buf, sizeof(buf), "%s,%ld,%d,%.3f,%.3f,%.3f,%.3f,%.3f,%.3f,%.3f\n",
                          fg::family_name(*fam), p, f.n(), ms(t0, t1), ms(t1, t2), ms(t2, t3),
                          ms(t3, t4), ms(t4, t5), ms(t5, t6), ms(t0, t6));
            csv += buf;
        }
    }
    write_output(out_path, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fullerene bipartization and patch toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a family member as planar_code");
    GraphSourceArgs gen_src;
    std::string gen_out;
    add_source_flags(gen, gen_src);
    gen->add_option("--out", gen_out, "output file")->required();

    // bipartize
    auto* bip = app.add_subcommand("bipartize", "minimum bipartizing edge cuts");
    GraphSourceArgs bip_src;
    std::string bip_format = "csv", bip_out;
    int bip_jobs = 0;
    bool bip_emit_cut = false, bip_no_timing = false, bip_strict = false;
    add_source_flags(bip, bip_src);
    bip->add_option("--format", bip_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    bip->add_option("--out", bip_out, "output file (default stdout)");
    bip->add_option("--jobs", bip_jobs, "worker threads (default: FGRAPH_JOBS or hardware)");
    bip->add_flag("--emit-cut", bip_emit_cut, "append the cut edge list to each record");
    bip->add_flag("--no-timing", bip_no_timing, "report wall_time_ms as 0 (byte-stable output)");
    bip->add_flag("--strict-conjecture", bip_strict,
                  "fail unless b <= sqrt(12n/5) on every input");

    // analyze-patch
    auto* ana = app.add_subcommand("analyze-patch", "boundary calculus on one patch");
    GraphSourceArgs ana_src;
    std::string ana_cycle, ana_out;
    int ana_seed_face = -1;
    add_source_flags(ana, ana_src);
    ana->add_option("--cycle", ana_cycle, "comma-separated boundary vertex ids")->required();
    ana->add_option("--seed-face", ana_seed_face, "face id selecting the interior side")
        ->required();
    ana->add_option("--out", ana_out, "output file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> ver_suites;
    std::uint64_t ver_seed = 7;
    long ver_samples = 0;
    ver->add_option("suite", ver_suites,
                    "n22 | nochord | layer | peeling | dist | match | theorem1 | all");
    ver->add_option("--seed", ver_seed, "RNG seed (default 7)");
    ver->add_option("--samples", ver_samples, "sample budget override");

    // bench
    auto* ben = app.add_subcommand("bench", "phase timings over a family");
    std::string ben_family, ben_out;
    std::vector<long> ben_params;
    ben->add_option("--family", ben_family, "family to generate");
    ben->add_option("--params", ben_params, "family parameters")->delimiter(',');
    ben->add_option("--out", ben_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_src, gen_out);
        if (bip->parsed())
            return cmd_bipartize(bip_src, bip_format, bip_out, bip_jobs, bip_emit_cut,
                                 bip_no_timing, bip_strict);
        if (ana->parsed()) return cmd_analyze_patch(ana_src, ana_cycle, ana_seed_face, ana_out);
        if (ver->parsed()) return cmd_verify(ver_suites, ver_seed, ver_samples);
        if (ben->parsed()) return cmd_bench(ben_family, ben_params, ben_out);
    } catch (const fg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
