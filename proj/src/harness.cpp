#include "fg/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "json.hpp"

namespace fg {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string cut_to_string(const EdgeSet& cut) {
    std::string out;
    for (std::size_t i = 0; i < cut.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(cut[i].u) + "-" + std::to_string(cut[i].v);
    }
    return out;
}

} // namespace

RunRecord run_bipartize_record(const Fullerene& f, const std::string& family, long param,
                               bool with_timing) {
    RunRecord rec;
    rec.family = family;
    rec.param = param;
    rec.n = f.n();

    auto t0 = std::chrono::steady_clock::now();
    BipartizationResult res = bipartize(f);
    ProximityReport prox = check_pentagon_proximity(f);
    auto t1 = std::chrono::steady_clock::now();

    rec.b = res.b;
    rec.matching_weight = res.matching.weight;
    rec.bound_conjecture = res.bound_conjecture;
    rec.bound_matched = res.bound_matched;
    rec.bound_general = res.bound_general;
    rec.proximity_ok = prox.all_at_least_five;
    rec.cut = res.cut;
    if (with_timing)
        rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

std::vector<RunRecord> bipartize_batch(const std::vector<BatchInput>& inputs,
                                       const BatchOptions& opts) {
    const int count = static_cast<int>(inputs.size());
    std::vector<RunRecord> records(count);

    auto work = [&](int i) {
        records[i] =
            run_bipartize_record(inputs[i].graph, inputs[i].family, inputs[i].param,
                                 opts.with_timing);
    };

    const int jobs = std::max(1, std::min(opts.jobs, count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) work(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }

    if (opts.strict_conjecture) {
        for (const RunRecord& r : records)
            if (!conjecture_bound_holds(r.b, r.n))
                raise(Err::SuiteFailed, "conjectured bound sqrt(12n/5) fails: b=" +
                                            std::to_string(r.b) + " n=" + std::to_string(r.n));
    }
    return records;
}

std::string records_to_csv(const std::vector<RunRecord>& records, bool emit_cut) {
    std::string out = kCsvHeader;
    if (emit_cut) out += ",cut";
    out += '\n';
    for (const RunRecord& r : records) {
        out += r.family;
        out += ',' + std::to_string(r.param);
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.b);
        out += ',' + std::to_string(r.matching_weight);
        out += ',' + fmt_double(r.bound_conjecture);
        out += ',' + fmt_double(r.bound_matched);
        out += ',' + fmt_double(r.bound_general);
        out += ',';
        out += r.proximity_ok ? "true" : "false";
        out += ',' + fmt_double(r.wall_time_ms);
        if (emit_cut) out += ',' + cut_to_string(r.cut);
        out += '\n';
    }
    return out;
}

std::string records_to_json(const std::vector<RunRecord>& records, bool emit_cut) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RunRecord& r : records) {
        nlohmann::ordered_json obj;
        obj["family"] = r.family;
        obj["param"] = r.param;
        obj["n"] = r.n;
        obj["b"] = r.b;
        obj["matching_weight"] = r.matching_weight;
        obj["bound_conjecture"] = r.bound_conjecture;
        obj["bound_matched"] = r.bound_matched;
        obj["bound_general"] = r.bound_general;
        obj["proximity_ok"] = r.proximity_ok;
        obj["wall_time_ms"] = r.wall_time_ms;
        if (emit_cut) {
            nlohmann::ordered_json cut = nlohmann::ordered_json::array();
            for (Edge e : r.cut) cut.push_back({e.u, e.v});
            obj["cut"] = cut;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

int default_jobs() {
    if (const char* env = std::getenv("FGRAPH_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace fg
