#ifndef ODDCYCLE_EXPERIMENT_HPP
#define ODDCYCLE_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oddcycle/graph.hpp"

namespace oddcycle {

enum class Mode { partition, bipartize, indep_set };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

enum class ReportFormat { json, csv, text };

ReportFormat format_from_string(const std::string& s);

// A generator request, as accepted by the `gen` CLI subcommand and by the
// experiment harness in place of an input file.
struct GenSpec {
    std::string family;  // cycle | path | complete-bipartite | random-bipartite |
                         // cycle-blowup | subdivision
    std::int64_t a = 0;  // len / n / n1
    std::int64_t b = 0;  // class_size / n2
    double p = 0.0;      // random-bipartite edge probability
    int t = 0;           // subdivision parameter
    std::uint64_t seed = 0;
    std::string base_path;  // subdivision base graph file

    std::string describe() const;
};

Graph realize(const GenSpec& spec);

struct ExperimentConfig {
    std::string input_path;          // exactly one of input_path / gen is set
    std::optional<GenSpec> gen;
    Mode mode = Mode::partition;
    int delta = 4;     // partition mode
    int k = 2;         // bipartize / indep-set modes
    double eps = 0.0;  // bipartize mode; used when > 0
    int trials = 1;
    std::uint64_t master_seed = 0;
    int jobs = 1;
    int max_attempts = 64;  // bipartize resampling cap
};

// Everything needed to reproduce and evaluate a run. `rows` is fully
// deterministic given (input, master seed); wall-clock timings live outside
// the rows so reports can be compared bit for bit.
struct ExperimentReport {
    ExperimentConfig config;
    std::string prng;
    std::vector<nlohmann::ordered_json> rows;  // one object per trial, ordered by trial
    std::string metric;                        // the aggregated per-trial quantity
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double bound = 0.0;
    bool bound_is_lower = false;  // indep-set: bound is a guaranteed minimum
    bool bound_flagged = false;   // analytic bound meaningless (reported as max(bound,0))
    double margin = 0.0;          // 3 * stddev / sqrt(trials)
    bool bound_satisfied = false;
    std::vector<double> trial_ms;
    double total_ms = 0.0;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
    std::string render(ReportFormat fmt) const;
};

// Runs config.trials independent trials (trial i uses derive_seed(master, i))
// across up to config.jobs threads and aggregates the per-trial metric.
// Module errors are rethrown annotated with the trial index.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace oddcycle

#endif
