#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ieff/efficiency.hpp"
#include "ieff/enumerate.hpp"
#include "ieff/io.hpp"
#include "ieff/model.hpp"
#include "ieff/verify.hpp"
#include "json.hpp"

// Command-line front end: enumeration, profile analysis, existence sweeps and
// the n=5 counterexample pipeline. Exit codes: 0 = success / property holds,
// 2 = property violated or counterexample unconfirmed (still a successful
// run), 1 = usage or input error.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

int run_enumerate(int n, bool list, const std::string &out_path) {
    std::ofstream out_file;
    std::ostream *list_out = nullptr;
    if (list) {
        if (!out_path.empty()) {
            out_file.open(out_path);
            if (!out_file) throw std::runtime_error("cannot write " + out_path);
            list_out = &out_file;
        } else {
            list_out = &std::cout;
        }
    }
    const std::uint64_t count = ieff::for_each_intensity_relation(
        n, list_out ? std::function<void(const ieff::CanonicalIntensity &)>(
                          [&](const ieff::CanonicalIntensity &s) {
                              *list_out << ieff::ranking_line(s) << '\n';
                          })
                    : nullptr);
    std::cout << count << '\n';
    return kExitOk;
}

std::string cycle_arrows(const std::vector<ieff::Allocation> &cycle) {
    std::string out;
    for (const ieff::Allocation &a : cycle) {
        if (!out.empty()) out += " -> ";
        out += ieff::allocation_name(a);
    }
    if (!cycle.empty()) out += " -> " + ieff::allocation_name(cycle.front());
    return out;
}

int run_analyze(const std::string &input, const std::string &dot_path, bool as_json) {
    const ieff::ProfileDocument doc = ieff::parse_profile_document(ieff::read_file(input));
    const ieff::DominanceDigraph graph = ieff::dominance_digraph(doc.profile);
    const std::vector<ieff::Allocation> efficient = ieff::intensity_efficient_set(graph);

    if (!dot_path.empty()) ieff::write_file(dot_path, ieff::emit_dot(graph));

    if (as_json) {
        nlohmann::ordered_json out;
        out["n"] = doc.profile.n;
        out["pareto"] = nlohmann::ordered_json::array();
        for (const ieff::Allocation &a : graph.nodes) {
            out["pareto"].push_back(ieff::allocation_name(a));
        }
        out["dominance_edges"] = nlohmann::ordered_json::array();
        for (const auto &[from, to] : graph.edges) {
            out["dominance_edges"].push_back({ieff::allocation_name(graph.nodes[from]),
                                              ieff::allocation_name(graph.nodes[to])});
        }
        out["intensity_efficient"] = nlohmann::ordered_json::array();
        for (const ieff::Allocation &a : efficient) {
            out["intensity_efficient"].push_back(ieff::allocation_name(a));
        }
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "n: " << doc.profile.n << '\n';
    std::cout << "pareto set (" << graph.nodes.size() << "):";
    for (const ieff::Allocation &a : graph.nodes) std::cout << ' ' << ieff::allocation_name(a);
    std::cout << '\n';
    std::cout << "dominance edges (" << graph.edges.size() << "):\n";
    for (const auto &[from, to] : graph.edges) {
        std::cout << "  " << ieff::allocation_name(graph.nodes[from]) << " -> "
                  << ieff::allocation_name(graph.nodes[to]) << '\n';
    }
    std::cout << "intensity-efficient set (" << efficient.size() << "):";
    for (const ieff::Allocation &a : efficient) std::cout << ' ' << ieff::allocation_name(a);
    std::cout << '\n';
    return kExitOk;
}

int run_verify(int n, bool exhaustive, std::uint64_t samples, std::uint64_t seed,
               const ieff::SweepOptions &opts, const std::string &json_path) {
    const ieff::ExistenceReport report =
        exhaustive ? ieff::verify_existence_exhaustive(n, opts)
                   : ieff::verify_existence_random(n, samples, seed, opts);
    if (!json_path.empty()) ieff::write_file(json_path, ieff::existence_report_json(report));
    std::cout << ieff::summary_line(report) << '\n';
    for (const ieff::Profile &p : report.failures) {
        std::cout << "failure: " << ieff::profile_line(p) << '\n';
    }
    for (const auto &[profile, cycle] : report.cycles) {
        std::cout << "cycle: " << ieff::profile_line(profile) << " via " << cycle_arrows(cycle)
                  << '\n';
    }
    std::cout << "elapsed_ms=" << report.elapsed_ms << '\n';
    return report.clean() ? kExitOk : kExitViolation;
}

void print_counterexample_report(const ieff::CounterexampleReport &report) {
    std::cout << "agent 4 completion: " << ieff::ranking_line(report.completion4) << '\n';
    std::cout << "agent 5 completion: " << ieff::ranking_line(report.completion5) << '\n';
    std::cout << "pareto-efficient allocations: " << report.pareto_count << '\n';
    std::cout << "six listed allocations pareto-efficient: "
              << (report.six_listed_present ? "yes" : "NO") << '\n';
    std::cout << "cycle edges:\n";
    for (const ieff::CitedInequality &check : report.inequalities) {
        std::cout << "  " << ieff::allocation_name(check.from) << " D "
                  << ieff::allocation_name(check.to) << " via s" << check.agent_hi << "("
                  << ieff::pair_name(check.pair, 5) << ")=" << check.value_hi << " > s"
                  << check.agent_lo << "(" << ieff::pair_name(check.pair, 5)
                  << ")=" << check.value_lo << ": "
                  << (check.inequality_holds && check.edge_holds ? "ok" : "FAILED") << '\n';
    }
    if (!report.detected_cycle.empty()) {
        std::cout << "cycle detected: " << cycle_arrows(report.detected_cycle) << '\n';
    } else {
        std::cout << "cycle detected: none\n";
    }
    std::cout << "intensity-efficient set (" << report.ie_set.size() << "):";
    for (const ieff::Allocation &a : report.ie_set) std::cout << ' ' << ieff::allocation_name(a);
    std::cout << '\n';
    std::cout << "non-existence confirmed: " << (report.nonexistence_confirmed ? "yes" : "NO")
              << '\n';
}

int run_counterexample(bool search, const std::string &dot_path) {
    if (!search) {
        const ieff::CounterexampleReport report =
            ieff::verify_counterexample(ieff::table2_default_profile());
        print_counterexample_report(report);
        if (!dot_path.empty()) {
            ieff::write_file(dot_path,
                             ieff::emit_dot(ieff::dominance_digraph(ieff::table2_default_profile())));
        }
        return report.nonexistence_confirmed ? kExitOk : kExitViolation;
    }

    const ieff::CompletionSearchResult result = ieff::search_completions();
    std::cout << "completion search space: " << result.candidates4 << " x " << result.candidates5
              << " pairs (agent 4 top d, agent 5 top c)\n";
    std::cout << "pairs tried: " << result.pairs_tried << '\n';
    if (!result.found) {
        std::cout << "NO completion pair yields an empty intensity-efficient set; "
                     "the non-existence construction could not be confirmed\n";
        return kExitViolation;
    }
    const ieff::Profile profile =
        ieff::build_table2_profile(result.found->first, result.found->second);
    const ieff::CounterexampleReport report = ieff::verify_counterexample(profile);
    print_counterexample_report(report);
    if (!dot_path.empty()) {
        ieff::write_file(dot_path, ieff::emit_dot(ieff::dominance_digraph(profile)));
    }
    return report.nonexistence_confirmed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"enumeration and efficiency analysis of strict preference-intensity profiles"};
    app.require_subcommand(1);

    int enum_n = 0;
    bool enum_list = false;
    std::string enum_out;
    CLI::App *cmd_enumerate =
        app.add_subcommand("enumerate", "count (or list) canonical strict intensity relations");
    cmd_enumerate->add_option("--n", enum_n, "number of objects (3..6)")->required();
    cmd_enumerate->add_flag("--list", enum_list, "write every relation as a ranking line");
    cmd_enumerate->add_option("--out", enum_out, "write the --list output to this file");

    std::string analyze_input, analyze_dot;
    bool analyze_json = false;
    CLI::App *cmd_analyze = app.add_subcommand(
        "analyze", "Pareto set, dominance digraph and intensity-efficient set of a profile");
    cmd_analyze->add_option("--input", analyze_input, "profile JSON document")->required();
    cmd_analyze->add_option("--dot", analyze_dot, "write the dominance digraph as DOT");
    cmd_analyze->add_flag("--json", analyze_json, "emit the analysis as JSON");

    int verify_n = 0;
    bool verify_exhaustive = false;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    ieff::SweepOptions sweep;
    CLI::App *cmd_verify = app.add_subcommand(
        "verify-existence", "check profiles for empty intensity-efficient sets and cycles");
    cmd_verify->add_option("--n", verify_n, "number of objects")->required();
    CLI::Option *opt_exhaustive =
        cmd_verify->add_flag("--exhaustive", verify_exhaustive, "sweep the whole profile space");
    CLI::Option *opt_samples =
        cmd_verify->add_option("--samples", verify_samples, "number of random profiles");
    CLI::Option *opt_seed = cmd_verify->add_option("--seed", verify_seed, "random seed");
    opt_samples->excludes(opt_exhaustive)->needs(opt_seed);
    opt_seed->needs(opt_samples);
    cmd_verify->add_flag("--symmetry", sweep.symmetry,
                         "exhaustive sweep over orbit representatives only");
    cmd_verify->add_option("--jobs", sweep.jobs, "worker threads")->default_val(1);
    cmd_verify->add_option("--checkpoint", sweep.checkpoint_path,
                           "chunk-level progress file; reruns resume after the last chunk");
    std::string verify_json;
    cmd_verify->add_option("--json", verify_json, "write the report as JSON to this file");

    bool search_completions = false;
    std::string counter_dot;
    CLI::App *cmd_counter = app.add_subcommand(
        "counterexample", "verify the n=5 profile with no intensity-efficient allocation");
    cmd_counter->add_flag("--search-completions", search_completions,
                          "search agent 4/5 completions instead of using the defaults");
    cmd_counter->add_option("--dot", counter_dot, "write the dominance digraph as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_enumerate->parsed()) return run_enumerate(enum_n, enum_list, enum_out);
        if (cmd_analyze->parsed()) return run_analyze(analyze_input, analyze_dot, analyze_json);
        if (cmd_verify->parsed()) {
            if (!verify_exhaustive && opt_samples->count() == 0) {
                std::cerr << "verify-existence requires --exhaustive or --samples/--seed\n";
                return kExitUsage;
            }
            if (sweep.symmetry && !verify_exhaustive) {
                std::cerr << "--symmetry applies to --exhaustive sweeps only\n";
                return kExitUsage;
            }
            return run_verify(verify_n, verify_exhaustive, verify_samples, verify_seed, sweep,
                              verify_json);
        }
        if (cmd_counter->parsed()) return run_counterexample(search_completions, counter_dot);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
