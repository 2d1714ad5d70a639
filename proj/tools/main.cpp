// Command-line front end: graph generation, odd-girth queries, partitions,
// bipartization, independent sets, and the experiment harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "oddcycle/bipartize.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/generators.hpp"
#include "oddcycle/graph_io.hpp"
#include "oddcycle/independent_set.hpp"
#include "oddcycle/odd_cycle.hpp"
#include "oddcycle/partition.hpp"
#include "oddcycle/rng.hpp"

using namespace oddcycle;
using nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot open '" + output_path + "' for writing");
    out << text;
}

ordered_json coloring_json(const std::vector<std::int8_t>& coloring) {
    ordered_json arr = ordered_json::array();
    for (std::int8_t c : coloring) {
        if (c < 0)
            arr.push_back(nullptr);
        else
            arr.push_back(static_cast<int>(c));
    }
    return arr;
}

void add_gen_options(CLI::App* cmd, GenSpec& spec) {
    cmd->add_option("--family", spec.family,
                    "cycle | path | complete-bipartite | random-bipartite | cycle-blowup | "
                    "subdivision")
        ->required();
    cmd->add_option("--len,--n,--n1", spec.a, "length / vertex count / left side size");
    cmd->add_option("--class-size,--n2", spec.b, "blow-up class size / right side size");
    cmd->add_option("--p", spec.p, "edge probability (random-bipartite)");
    cmd->add_option("--t", spec.t, "subdivision parameter: each edge becomes 2t+1 edges");
    cmd->add_option("--base", spec.base_path, "base graph file (subdivision)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph partitions with vertex guards, bipartization, and layered independent "
                 "sets for graphs with no short odd cycles"};
    app.require_subcommand(1);

    std::string input, output;
    std::string format = "json";
    std::uint64_t seed = 0;
    int jobs = 1;

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a graph family and write the text format");
    GenSpec gen_spec;
    add_gen_options(gen, gen_spec);
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--output,-o", output, "output file (default stdout)");
    gen->callback([&] {
        gen_spec.seed = seed;
        Graph g = realize(gen_spec);
        emit(graph_to_string(g), output);
    });

    // --- odd-girth ---
    auto* og_cmd = app.add_subcommand("odd-girth", "shortest odd cycle length, 'inf' if bipartite");
    bool want_witness = false;
    og_cmd->add_option("--input,-i", input, "graph file")->required();
    og_cmd->add_flag("--witness", want_witness, "also print a shortest odd cycle");
    og_cmd->add_option("--format", format, "json | text")->capture_default_str();
    og_cmd->add_option("--output,-o", output, "output file (default stdout)");
    og_cmd->callback([&] {
        Graph g = parse_graph_file(input);
        OddGirth girth = odd_girth(g);
        std::optional<std::vector<Vertex>> witness;
        if (want_witness) witness = shortest_odd_cycle(g);
        if (format == "json") {
            ordered_json j;
            j["odd_girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
            if (want_witness) j["witness"] = witness ? ordered_json(*witness) : ordered_json(nullptr);
            emit(j.dump(2) + "\n", output);
        } else {
            std::string text = girth ? std::to_string(*girth) : "inf";
            text += "\n";
            if (want_witness && witness) {
                std::string line;
                for (Vertex v : *witness) line += (line.empty() ? "" : " ") + std::to_string(v);
                text += line + "\n";
            }
            emit(text, output);
        }
    });

    // --- partition ---
    auto* part = app.add_subcommand("partition", "sample random low-diameter partitions");
    int delta = 4;
    int trials = 1;
    part->add_option("--input,-i", input, "graph file")->required();
    part->add_option("--delta", delta, "diameter budget, divisible by 4")->required();
    part->add_option("--seed", seed, "master seed");
    part->add_option("--trials", trials, "number of samples");
    part->add_option("--format", format, "json (one object per line) | csv")->capture_default_str();
    part->add_option("--output,-o", output, "output file (default stdout)");
    part->callback([&] {
        Graph g = parse_graph_file(input);
        const double raw_bound = guard_expectation_bound(g.vertex_count(), delta);
        const bool flagged = raw_bound < 0.0;
        const double bound = std::max(raw_bound, 0.0);
        std::string text;
        if (format == "csv") text += "trial,seed,R,clusters,guards,cross_edges,bound,bound_flagged\n";
        for (int i = 0; i < trials; ++i) {
            const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
            Partition p = sample_partition(g, {delta, s});
            ordered_json row;
            row["trial"] = i;
            row["seed"] = s;
            row["R"] = p.radius;
            row["clusters"] = p.cluster_count();
            row["guards"] = guards(p).size();
            row["cross_edges"] = cross_edges(g, p).size();
            row["bound"] = bound;
            row["bound_flagged"] = flagged;
            if (format == "csv") {
                std::string line;
                for (const auto& [key, value] : row.items()) {
                    (void)key;
                    line += (line.empty() ? "" : ",") + value.dump();
                }
                text += line + "\n";
            } else {
                text += row.dump() + "\n";
            }
        }
        emit(text, output);
    });

    // --- bipartize ---
    auto* bip = app.add_subcommand("bipartize", "delete guards until the rest is bipartite");
    int k = 2;
    double eps = 0.0;
    bool verify_girth = false;
    int max_attempts = 64;
    bip->add_option("--input,-i", input, "graph file")->required();
    auto* k_opt = bip->add_option("--k", k, "odd cycles are promised longer than 2k+1");
    auto* eps_opt =
        bip->add_option("--eps", eps, "odd cycles are promised longer than eps*n");
    k_opt->excludes(eps_opt);
    bip->add_option("--seed", seed, "master seed");
    bip->add_flag("--verify-girth", verify_girth, "run the odd-girth oracle first");
    bip->add_option("--max-attempts", max_attempts, "resampling cap")->capture_default_str();
    bip->add_option("--output,-o", output, "output file (default stdout)");
    bip->callback([&] {
        Graph g = parse_graph_file(input);
        BipartizeOptions opts{seed, max_attempts, verify_girth};
        BipartizationResult r =
            eps > 0.0 ? bipartize_by_fraction(g, eps, opts) : bipartize(g, k, opts);
        ordered_json j;
        j["removed"] = std::vector<Vertex>(r.removed.members().begin(), r.removed.members().end());
        j["attempts"] = r.attempts;
        j["cap_exceeded"] = r.cap_exceeded;
        j["k"] = r.bounds.k;
        j["bound"] = r.bounds.bound;
        j["target"] = r.target;
        j["coloring"] = coloring_json(r.coloring);
        emit(j.dump(2) + "\n", output);
    });

    // --- indep-set ---
    auto* ind = app.add_subcommand("indep-set", "layered greedy independent set");
    bool want_trace = false;
    ind->add_option("--input,-i", input, "graph file")->required();
    ind->add_option("--k", k, "odd cycles are promised longer than 2k+1")->required();
    ind->add_flag("--verify-girth", verify_girth, "run the odd-girth oracle first");
    ind->add_flag("--trace", want_trace, "include per-round harvest details");
    ind->add_option("--output,-o", output, "output file (default stdout)");
    ind->callback([&] {
        Graph g = parse_graph_file(input);
        if (verify_girth) {
            OddGirth og = odd_girth(g);
            if (og && *og <= 2 * k + 1)
                throw GirthViolation(*shortest_odd_cycle(g),
                                     "odd girth " + std::to_string(*og) + " <= 2k+1 = " +
                                         std::to_string(2 * k + 1));
        }
        HarvestResult r = layered_greedy_independent_set(g, k);
        ordered_json j;
        j["size"] = r.set.size();
        j["guarantee"] = g.vertex_count() > 0
                             ? independent_set_size_guarantee(g.vertex_count(), k)
                             : 0;
        j["K"] = r.trace.K;
        j["set"] = std::vector<Vertex>(r.set.members().begin(), r.set.members().end());
        if (want_trace) {
            ordered_json rounds = ordered_json::array();
            for (const auto& round : r.trace.rounds) {
                ordered_json rj;
                rj["root"] = round.root;
                rj["layer"] = round.harvested_layer;
                rj["d"] = round.layer_sizes;
                rj["harvested"] = round.harvested;
                rj["deleted"] = round.deleted;
                rounds.push_back(std::move(rj));
            }
            j["rounds"] = std::move(rounds);
        }
        emit(j.dump(2) + "\n", output);
    });

    // --- experiment ---
    auto* exp = app.add_subcommand("experiment", "multi-trial harness with analytic bound checks");
    ExperimentConfig cfg;
    std::string mode_str = "partition";
    GenSpec exp_spec;
    exp->add_option("--input,-i", input, "graph file");
    exp->add_option("--family", exp_spec.family,
                    "generate the input instead: cycle | path | complete-bipartite | "
                    "random-bipartite | cycle-blowup | subdivision");
    exp->add_option("--len,--n,--n1", exp_spec.a, "generator size parameter");
    exp->add_option("--class-size,--n2", exp_spec.b, "generator second parameter");
    exp->add_option("--p", exp_spec.p, "generator edge probability");
    exp->add_option("--t", exp_spec.t, "generator subdivision parameter");
    exp->add_option("--base", exp_spec.base_path, "generator base graph file");
    exp->add_option("--gen-seed", exp_spec.seed, "generator seed");
    exp->add_option("--mode", mode_str, "partition | bipartize | indep-set")->required();
    exp->add_option("--delta", cfg.delta, "partition diameter budget");
    exp->add_option("--k", cfg.k, "bipartize / indep-set parameter");
    exp->add_option("--eps", cfg.eps, "bipartize fractional parameter");
    exp->add_option("--trials", cfg.trials, "trial count")->capture_default_str();
    exp->add_option("--seed", cfg.master_seed, "master seed");
    exp->add_option("--jobs", jobs, "concurrent trials")->capture_default_str();
    exp->add_option("--max-attempts", cfg.max_attempts, "bipartize resampling cap")
        ->capture_default_str();
    exp->add_option("--format", format, "json | csv | text")->capture_default_str();
    exp->add_option("--output,-o", output, "report file (default stdout)");
    exp->callback([&] {
        cfg.mode = mode_from_string(mode_str);
        cfg.input_path = input;
        if (!exp_spec.family.empty()) cfg.gen = exp_spec;
        cfg.jobs = jobs;
        ExperimentReport rep = run_experiment(cfg);
        emit(rep.render(format_from_string(format)), output);
        if (!rep.bound_satisfied) std::exit(1);
    });

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "validate a graph file and report its basic facts");
    bool with_girth = false;
    int min_odd_girth = 0;
    ver->add_option("--input,-i", input, "graph file")->required();
    ver->add_flag("--girth", with_girth, "also compute the odd girth");
    ver->add_option("--min-odd-girth", min_odd_girth,
                    "fail unless the odd girth strictly exceeds this");
    ver->add_option("--output,-o", output, "output file (default stdout)");
    ver->callback([&] {
        Graph g = parse_graph_file(input);
        ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["components"] = connected_components(g).size();
        BipartiteResult b = is_bipartite(g);
        j["bipartite"] = b.ok();
        if (with_girth || min_odd_girth > 0) {
            OddGirth girth = odd_girth(g);
            j["odd_girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
            if (min_odd_girth > 0 && girth && *girth <= min_odd_girth) {
                j["ok"] = false;
                emit(j.dump(2) + "\n", output);
                std::exit(1);
            }
        }
        j["ok"] = true;
        emit(j.dump(2) + "\n", output);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const GirthViolation& e) {
        ordered_json j;
        j["error"] = "girth_violation";
        j["message"] = e.what();
        j["witness"] = e.witness();
        std::cerr << j.dump(2) << "\n";
        return 1;
    } catch (const IndependenceViolation& e) {
        ordered_json j;
        j["error"] = "independence_violation";
        j["message"] = e.what();
        j["edge"] = {e.violating_edge().first, e.violating_edge().second};
        j["walk"] = e.implied_walk();
        std::cerr << j.dump(2) << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
