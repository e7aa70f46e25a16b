// Acceptance suite: runs every acceptance criterion end to end, printing one
// PASS/FAIL line per criterion. Usage:
//   ieff_acceptance <path-to-ieff-cli> <data-dir>
// Exits nonzero when any criterion fails.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ieff/efficiency.hpp"
#include "ieff/enumerate.hpp"
#include "ieff/io.hpp"
#include "ieff/model.hpp"
#include "ieff/verify.hpp"
#include "property_checks.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string g_cli;
std::string g_data;
int g_failures = 0;

void report(int id, bool pass, const std::string &detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    if (!pass) ++g_failures;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
    double seconds = 0;
};

CommandResult run_cli(const std::string &args) {
    CommandResult result;
    const std::string command = g_cli + " " + args + " 2>&1";
    const auto start = Clock::now();
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.seconds = seconds_since(start);
    return result;
}

std::string first_line(const std::string &text) {
    return text.substr(0, text.find('\n'));
}

bool contains(const std::string &text, const std::string &needle) {
    return text.find(needle) != std::string::npos;
}

// --- criterion 1: relation counts through the CLI ---------------

void criterion1() {
    const CommandResult n3 = run_cli("enumerate --n 3");
    const CommandResult n4 = run_cli("enumerate --n 4");
    const CommandResult n5 = run_cli("enumerate --n 5");
    const bool pass = n3.exit_code == 0 && n3.output == "12\n" && n3.seconds < 1.0 &&
                      n4.exit_code == 0 && n4.output == "384\n" && n4.seconds < 1.0 &&
                      n5.exit_code == 0 && n5.output == "92160\n" && n5.seconds < 60.0;
    std::ostringstream detail;
    detail << "relation counts 12/384/92160 (got " << first_line(n3.output) << "/"
           << first_line(n4.output) << "/" << first_line(n5.output) << ", n=5 in " << std::fixed
           << n5.seconds << "s)";
    report(1, pass, detail.str());
}

// --- criterion 2: per-order factorization with brute-force oracles --------

bool brute_force_order_matches(const ieff::PreferenceOrder &order,
                               std::uint64_t expected_extensions) {
    std::vector<ieff::OrderedPair> pairs;
    for (int i = 0; i < order.n(); ++i) {
        for (int j = i + 1; j < order.n(); ++j) {
            pairs.push_back({order.ranking[i], order.ranking[j]});
        }
    }
    std::sort(pairs.begin(), pairs.end());
    std::set<ieff::CanonicalIntensity> survivors;
    do {
        ieff::RawIntensityMap raw;
        int rank = static_cast<int>(pairs.size());
        for (const ieff::OrderedPair &p : pairs) {
            raw[p] = rank;
            raw[{p.second, p.first}] = -rank;
            --rank;
        }
        if (!ieff::validate_intensity(raw, order.n()).valid) continue;
        ieff::CanonicalIntensity s;
        s.n = order.n();
        s.values.assign(order.n() * (order.n() - 1), 0);
        for (const auto &[pair, value] : raw) {
            s.values[ieff::pair_index(pair.first, pair.second, order.n())] =
                static_cast<std::int8_t>(value);
        }
        survivors.insert(s);
    } while (std::next_permutation(pairs.begin(), pairs.end()));

    const std::vector<ieff::CanonicalIntensity> enumerated =
        ieff::linear_extensions(ieff::containment_poset(order));
    return survivors.size() == expected_extensions &&
           survivors == std::set<ieff::CanonicalIntensity>(enumerated.begin(), enumerated.end());
}

void criterion2() {
    bool pass = true;
    std::string detail = "per-order extensions 2/16/768 across all orders";
    const std::map<int, std::uint64_t> expected = {{3, 2}, {4, 16}, {5, 768}};
    for (const auto &[n, per_order] : expected) {
        for (const ieff::PreferenceOrder &order : ieff::all_preference_orders(n)) {
            const auto poset = ieff::containment_poset(order);
            if (ieff::linear_extensions(poset).size() != per_order ||
                ieff::count_linear_extensions(poset) != per_order) {
                pass = false;
                detail = "extension count mismatch at n=" + std::to_string(n);
            }
        }
    }
    // Generate-and-filter oracle: all 3! rank assignments per order at n=3
    // (36 candidates overall) and all 6! per order at n=4.
    for (const ieff::PreferenceOrder &order : ieff::all_preference_orders(3)) {
        if (!brute_force_order_matches(order, 2)) {
            pass = false;
            detail = "n=3 brute-force oracle disagrees";
        }
    }
    for (const ieff::PreferenceOrder &order : ieff::all_preference_orders(4)) {
        if (!brute_force_order_matches(order, 16)) {
            pass = false;
            detail = "n=4 brute-force oracle disagrees";
        }
    }
    report(2, pass, detail);
}

// --- criterion 3: the worked identical-preferences example ----------------

void criterion3() {
    ieff::Profile profile;
    profile.n = 3;
    profile.agents = {ieff::parse_ranking_line("ac>ab>bc", 3),
                      ieff::parse_ranking_line("ac>bc>ab", 3),
                      ieff::parse_ranking_line("ac>ab>bc", 3)};

    const auto start = Clock::now();
    const ieff::DominanceDigraph graph = ieff::dominance_digraph(profile);
    const std::vector<ieff::Allocation> efficient = ieff::intensity_efficient_set(graph);
    const double elapsed = seconds_since(start);

    std::set<std::pair<std::string, std::string>> edges;
    for (const auto &[from, to] : graph.edges) {
        edges.insert({ieff::allocation_name(graph.nodes[from]),
                      ieff::allocation_name(graph.nodes[to])});
    }
    const std::set<std::pair<std::string, std::string>> expected_edges = {
        {"abc", "bac"}, {"cba", "cab"}, {"abc", "acb"}, {"cba", "bca"}};
    std::set<std::string> efficient_names;
    for (const ieff::Allocation &a : efficient) efficient_names.insert(allocation_name(a));

    bool pass = graph.nodes.size() == 6 && edges == expected_edges &&
                efficient_names == std::set<std::string>{"abc", "cba"} && elapsed < 0.010;

    const CommandResult cli =
        run_cli("analyze --input " + g_data + "/sec3_example.json");
    pass = pass && cli.exit_code == 0 &&
           contains(cli.output, "intensity-efficient set (2): abc cba");

    std::ostringstream detail;
    detail << "worked example: 6 Pareto, 4 stated edges, IE {abc,cba} in " << std::fixed
           << elapsed * 1000 << "ms";
    report(3, pass, detail.str());
}

// --- criterion 4: exhaustive n=3 machine re-proof --------------------------

void criterion4() {
    const CommandResult result = run_cli("verify-existence --n 3 --exhaustive");
    const bool pass = result.exit_code == 0 &&
                      first_line(result.output) == "1728 profiles checked, 0 failures, 0 cycles" &&
                      result.seconds < 10.0;
    std::ostringstream detail;
    detail << "\"" << first_line(result.output) << "\" exit " << result.exit_code << " in "
           << std::fixed << result.seconds << "s";
    report(4, pass, detail.str());
}

// --- criterion 5: the n=5 counterexample ------------------------------------

void criterion5() {
    const auto start = Clock::now();
    CommandResult result = run_cli("counterexample");
    bool pass = result.exit_code == 0;
    std::string note = "default completions";
    if (!pass) {
        // The defaults are expected to confirm; the search is the mandated
        // fallback if they ever do not.
        result = run_cli("counterexample --search-completions");
        pass = result.exit_code == 0;
        note = "searched completions";
    }
    pass = pass && contains(result.output, "six listed allocations pareto-efficient: yes") &&
           contains(result.output, "s1(bc)=3 > s3(bc)=1: ok") &&
           contains(result.output, "s3(ac)=8 > s2(ac)=7: ok") &&
           contains(result.output, "s1(ab)=4 > s3(ab)=2: ok") &&
           contains(result.output, "s2(bc)=2 > s3(bc)=1: ok") &&
           contains(result.output, "s3(ac)=8 > s1(ac)=6: ok") &&
           contains(result.output, "s2(ab)=3 > s3(ab)=2: ok") &&
           contains(result.output, "cycle detected: ") &&
           contains(result.output, "non-existence confirmed: yes") && seconds_since(start) < 300;
    report(5, pass,
           note + ": six allocations Pareto-efficient, six cycle inequalities, cycle, empty "
                  "intensity-efficient set");
}

// --- criterion 6: randomized property suite ---------------------------------

void criterion6() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    for (int n : {3, 4, 5}) {
        const ieff::tests::PropertyOutcome outcome =
            ieff::tests::check_properties(n, 1000, 20000 + n);
        if (outcome.violations != 0 || outcome.profiles_checked != 1000) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": " + outcome.first_failure;
        }
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 120;
    if (detail.empty()) {
        std::ostringstream out;
        out << "1000 profiles per n in {3,4,5}, zero violations, " << std::fixed << elapsed
            << "s";
        detail = out.str();
    }
    report(6, pass, detail);
}

// --- criterion 7: n=4 sweeps, replayable and resumable ----------------------

int complete_lines(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return static_cast<int>(std::count(content.begin(), content.end(), '\n'));
}

std::vector<std::string> head_lines(const std::string &path, int count) {
    std::ifstream in(path, std::ios::binary);
    std::vector<std::string> lines;
    std::string line;
    while (static_cast<int>(lines.size()) < count && std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

pid_t spawn_cli(const std::vector<std::string> &args) {
    const pid_t pid = fork();
    if (pid != 0) return pid;
    const int fd = open("/dev/null", O_WRONLY);
    dup2(fd, 1);
    dup2(fd, 2);
    std::vector<char *> argv;
    argv.push_back(const_cast<char *>(g_cli.c_str()));
    for (const std::string &a : args) argv.push_back(const_cast<char *>(a.c_str()));
    argv.push_back(nullptr);
    execv(argv[0], argv.data());
    _exit(127);
}

bool wait_for_lines(const std::string &path, int want, double timeout_s) {
    const auto start = Clock::now();
    while (seconds_since(start) < timeout_s) {
        if (complete_lines(path) >= want) return true;
        usleep(50 * 1000);
    }
    return false;
}

// Runs the n=4 symmetry sweep until its checkpoint holds `chunks` complete
// chunk lines, then kills it mid-flight.
bool run_until_chunks(const std::string &checkpoint, int chunks) {
    const pid_t pid = spawn_cli({"verify-existence", "--n", "4", "--exhaustive", "--symmetry",
                                 "--checkpoint", checkpoint});
    const bool ok = wait_for_lines(checkpoint, 1 + chunks, 180.0);
    kill(pid, SIGKILL);
    int status = 0;
    waitpid(pid, &status, 0);
    return ok;
}

void criterion7() {
    // Replayable random sweep: fixed seed, bit-identical output across runs.
    const CommandResult run_a = run_cli("verify-existence --n 4 --samples 1000000 --seed 1");
    bool pass = (run_a.exit_code == 0 || run_a.exit_code == 2) && run_a.seconds < 300 &&
                contains(first_line(run_a.output), "1000000 profiles checked");
    const CommandResult run_b = run_cli("verify-existence --n 4 --samples 1000000 --seed 1");
    const auto strip_elapsed = [](const std::string &text) {
        return text.substr(0, text.rfind("elapsed_ms="));
    };
    pass = pass && strip_elapsed(run_a.output) == strip_elapsed(run_b.output);
    std::ostringstream detail;
    detail << "random sweep: \"" << first_line(run_a.output) << "\" in " << std::fixed
           << run_a.seconds << "s, rerun identical";

    // Resumable exhaustive symmetry-reduced sweep: two independent partial
    // runs agree line for line, and a truncated log resumes to the same
    // bytes.
    const std::string cp_a = "acceptance_n4_a.ckpt";
    const std::string cp_b = "acceptance_n4_b.ckpt";
    std::filesystem::remove(cp_a);
    std::filesystem::remove(cp_b);
    pass = pass && run_until_chunks(cp_a, 5) && run_until_chunks(cp_b, 8);
    const std::vector<std::string> lines_a = head_lines(cp_a, 6);
    pass = pass && lines_a == head_lines(cp_b, 6) &&
           contains(lines_a.empty() ? "" : lines_a[0], "mode=symmetry-reduced");

    // Truncate run B's log to 3 chunks and resume it past 8.
    {
        const std::vector<std::string> keep = head_lines(cp_b, 4);
        const std::vector<std::string> reference = head_lines(cp_b, 9);
        std::ofstream out(cp_b, std::ios::trunc | std::ios::binary);
        for (const std::string &line : keep) out << line << '\n';
        out.close();
        pass = pass && run_until_chunks(cp_b, 8);
        pass = pass && head_lines(cp_b, 9) == reference;
    }
    std::filesystem::remove(cp_a);
    std::filesystem::remove(cp_b);
    detail << "; symmetry-reduced checkpoint resumes byte-identically";
    report(7, pass, detail.str());
}

}  // namespace

int main(int argc, char **argv) {
    if (argc < 3) {
        std::cerr << "usage: ieff_acceptance <ieff-cli> <data-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
