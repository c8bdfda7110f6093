#pragma once

// Batch bipartization records and their CSV/JSON serialization.  Workers are
// pure per graph; results are merged in input order, so reports for jobs=1
// and jobs=N are identical.

#include <string>
#include <vector>

#include "fg/bipartizer.hpp"
#include "fg/generators.hpp"

namespace fg {

struct RunRecord {
    std::string family;
    long param = 0;
    long n = 0;
    int b = 0;
    int matching_weight = 0;
    double bound_conjecture = 0.0;
    double bound_matched = 0.0;
    double bound_general = 0.0;
    bool proximity_ok = false;
    double wall_time_ms = 0.0;
    EdgeSet cut; // serialized only on request
};

struct BatchInput {
    Fullerene graph;
    std::string family;
    long param = 0;
};

struct BatchOptions {
    int jobs = 1;
    bool with_timing = true;
    bool strict_conjecture = false;
};

RunRecord run_bipartize_record(const Fullerene& f, const std::string& family, long param,
                               bool with_timing);

std::vector<RunRecord> bipartize_batch(const std::vector<BatchInput>& inputs,
                                       const BatchOptions& opts);

inline const char* kCsvHeader =
    "family,param,n,b,matching_weight,bound_conjecture,bound_matched,bound_general,"
    "proximity_ok,wall_time_ms";

std::string records_to_csv(const std::vector<RunRecord>& records, bool emit_cut);
std::string records_to_json(const std::vector<RunRecord>& records, bool emit_cut);

int default_jobs(); // hardware concurrency, overridable via FGRAPH_JOBS

} // namespace fg
