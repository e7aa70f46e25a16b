#include "ieff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "ieff/io.hpp"
#include "json.hpp"

namespace ieff {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t bounded_uniform(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fast existence check

ExistenceChecker::ExistenceChecker(int n) : n_(n) {
    if (n < kMinObjects || n > 6) {
        throw std::invalid_argument("existence checker supports 3 <= n <= 6, got n=" +
                                    std::to_string(n));
    }
    const std::vector<Allocation> all = all_allocations(n);
    fact_ = static_cast<int>(all.size());
    allocs_.resize(fact_);
    inv_allocs_.resize(fact_);
    for (int a = 0; a < fact_; ++a) {
        for (int i = 0; i < n; ++i) {
            allocs_[a][i] = static_cast<std::int8_t>(all[a].objects[i]);
            inv_allocs_[a][all[a].objects[i]] = static_cast<std::int8_t>(i);
        }
    }
    rank_rows_.resize(fact_);
}

ExistenceChecker::Outcome ExistenceChecker::check_indices(
    std::span<const std::uint32_t> rel_indices) {
    const RelationTable &table = RelationTable::get(n_);
    for (int i = 0; i < n_; ++i) values_[i] = table.relation(rel_indices[i]).values.data();
    return run();
}

ExistenceChecker::Outcome ExistenceChecker::check(const Profile &profile) {
    if (profile.n != n_ || static_cast<int>(profile.agents.size()) != n_) {
        throw std::invalid_argument("profile size does not match checker");
    }
    for (int i = 0; i < n_; ++i) values_[i] = profile.agents[i].values.data();
    return run();
}

ExistenceChecker::Outcome ExistenceChecker::run() {
    const int n = n_;

    // Induced ranks per agent: position = n-1 - number of wins.
    std::array<std::array<std::int8_t, 8>, 8> rank{};
    for (int i = 0; i < n; ++i) {
        for (int x = 0; x < n; ++x) {
            int wins = 0;
            for (int y = 0; y < n; ++y) {
                if (x != y && values_[i][pair_index(x, y, n)] > 0) ++wins;
            }
            rank[i][x] = static_cast<std::int8_t>(n - 1 - wins);
        }
    }
    for (int a = 0; a < fact_; ++a) {
        for (int i = 0; i < n; ++i) rank_rows_[a][i] = rank[i][allocs_[a][i]];
    }

    pe_.clear();
    for (int a = 0; a < fact_; ++a) {
        bool dominated = false;
        for (int b = 0; b < fact_ && !dominated; ++b) {
            if (b == a) continue;
            bool weak = true, strict = false;
            for (int i = 0; i < n; ++i) {
                const int rb = rank_rows_[b][i], ra = rank_rows_[a][i];
                if (rb > ra) {
                    weak = false;
                    break;
                }
                if (rb < ra) strict = true;
            }
            dominated = weak && strict;
        }
        if (!dominated) pe_.push_back(a);
    }

    const int pe_count = static_cast<int>(pe_.size());
    edges_.clear();
    indeg_.assign(pe_count, 0);
    for (int pi = 0; pi < pe_count; ++pi) {
        const auto &xa = allocs_[pe_[pi]];
        for (int qi = pi + 1; qi < pe_count; ++qi) {
            const auto &ya = allocs_[pe_[qi]];
            const auto &yinv = inv_allocs_[pe_[qi]];
            bool any_flip = false, x_weak = true, y_weak = true, strict = false;
            for (int i = 0; i < n; ++i) {
                const int a = xa[i];
                const int j = yinv[a];
                if (j <= i || xa[j] != ya[i]) continue;
                any_flip = true;
                const int b = xa[j];
                const int vi = values_[i][pair_index(a, b, n)];
                const int vj = values_[j][pair_index(a, b, n)];
                if (vi < vj) x_weak = false;
                if (vi > vj) y_weak = false;
                if (vi != vj) strict = true;
            }
            if (!any_flip || !strict) continue;
            if (x_weak) {
                edges_.emplace_back(pi, qi);
                ++indeg_[qi];
            } else if (y_weak) {
                edges_.emplace_back(qi, pi);
                ++indeg_[pi];
            }
        }
    }

    Outcome outcome;
    outcome.ie_empty =
        std::all_of(indeg_.begin(), indeg_.end(), [](int d) { return d > 0; });

    // Kahn peeling: a remainder means a cycle.
    adj_start_.assign(pe_count + 1, 0);
    for (const auto &[from, to] : edges_) ++adj_start_[from + 1];
    for (int v = 0; v < pe_count; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_flat_.assign(edges_.size(), 0);
    {
        std::vector<int> cursor(adj_start_.begin(), adj_start_.end() - 1);
        for (const auto &[from, to] : edges_) adj_flat_[cursor[from]++] = to;
    }
    kahn_indeg_ = indeg_;
    queue_.clear();
    for (int v = 0; v < pe_count; ++v) {
        if (kahn_indeg_[v] == 0) queue_.push_back(v);
    }
    std::size_t head = 0;
    while (head < queue_.size()) {
        const int v = queue_[head++];
        for (int e = adj_start_[v]; e < adj_start_[v + 1]; ++e) {
            if (--kahn_indeg_[adj_flat_[e]] == 0) queue_.push_back(adj_flat_[e]);
        }
    }
    outcome.cyclic = static_cast<int>(queue_.size()) < pe_count;
    return outcome;
}

// ---------------------------------------------------------------------------
// Sweep engine

namespace {

struct ChunkResult {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;                        // profile lines
    std::vector<std::pair<std::string, std::string>> cycles;  // profile line, cycle csv
};

std::string mode_name(IterationMode mode) {
    switch (mode) {
        case IterationMode::kFull:
            return "full";
        case IterationMode::kSymmetryReduced:
            return "symmetry-reduced";
        case IterationMode::kRandom:
            return "random";
    }
    return "?";
}

std::string sweep_header(const ProfileSpace &space, std::uint64_t chunk_count) {
    std::ostringstream out;
    out << "ieff-sweep v1 n=" << space.n << " mode=" << mode_name(space.mode)
        << " relations=" << RelationTable::get(space.n).count();
    if (space.mode == IterationMode::kRandom) {
        out << " samples=" << space.samples << " seed=" << space.seed;
    }
    out << " chunks=" << chunk_count;
    return out.str();
}

std::string chunk_line(std::uint64_t id, const ChunkResult &r) {
    std::ostringstream out;
    out << "chunk " << id << " checked=" << r.checked << " failures=" << r.failures.size()
        << " cycles=" << r.cycles.size();
    for (const std::string &f : r.failures) out << " F=" << f;
    for (const auto &[profile, cycle] : r.cycles) out << " C=" << profile << "@" << cycle;
    return out.str();
}

std::uint64_t parse_field(const std::string &token, const std::string &key) {
    if (token.rfind(key + "=", 0) != 0) {
        throw std::invalid_argument("checkpoint: expected '" + key + "=...', got '" + token + "'");
    }
    return std::stoull(token.substr(key.size() + 1));
}

ChunkResult parse_chunk_line(const std::string &line, std::uint64_t expect_id) {
    std::istringstream in(line);
    std::string word;
    in >> word;
    if (word != "chunk") throw std::invalid_argument("checkpoint: bad chunk line '" + line + "'");
    std::uint64_t id;
    in >> id;
    if (id != expect_id) {
        throw std::invalid_argument("checkpoint: expected chunk " + std::to_string(expect_id) +
                                    ", found chunk " + std::to_string(id));
    }
    ChunkResult r;
    in >> word;
    r.checked = parse_field(word, "checked");
    in >> word;
    const std::uint64_t failures = parse_field(word, "failures");
    in >> word;
    const std::uint64_t cycles = parse_field(word, "cycles");
    while (in >> word) {
        if (word.rfind("F=", 0) == 0) {
            r.failures.push_back(word.substr(2));
        } else if (word.rfind("C=", 0) == 0) {
            const std::string rest = word.substr(2);
            const auto at = rest.find('@');
            if (at == std::string::npos) {
                throw std::invalid_argument("checkpoint: bad cycle witness '" + word + "'");
            }
            r.cycles.emplace_back(rest.substr(0, at), rest.substr(at + 1));
        } else {
            throw std::invalid_argument("checkpoint: bad witness token '" + word + "'");
        }
    }
    if (r.failures.size() != failures || r.cycles.size() != cycles) {
        throw std::invalid_argument("checkpoint: witness counts disagree in '" + line + "'");
    }
    return r;
}

struct CheckpointState {
    std::vector<ChunkResult> loaded;
    bool done = false;
};

// Reads a checkpoint, validates it against the expected header, drops an
// interrupted trailing fragment, and reports how many leading chunks are
// already complete.
CheckpointState load_checkpoint(const std::string &path, const std::string &header) {
    CheckpointState state;
    if (!std::filesystem::exists(path)) return state;

    std::string content = read_file(path);
    if (!content.empty() && content.back() != '\n') {
        const auto cut = content.find_last_of('\n');
        content = cut == std::string::npos ? std::string() : content.substr(0, cut + 1);
        std::filesystem::resize_file(path, content.size());
    }
    if (content.empty()) return state;

    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw std::invalid_argument("checkpoint " + path + " does not match this sweep (header '" +
                                    line + "' vs '" + header + "')");
    }
    while (std::getline(in, line)) {
        if (line.rfind("done", 0) == 0) {
            state.done = true;
            break;
        }
        state.loaded.push_back(parse_chunk_line(line, state.loaded.size()));
    }
    return state;
}

class CheckpointWriter {
public:
    CheckpointWriter(const std::string &path, const std::string &header, bool fresh) {
        if (path.empty()) return;
        out_.open(path, fresh ? std::ios::trunc : std::ios::app);
        if (!out_) throw std::runtime_error("cannot open checkpoint " + path);
        if (fresh) write_line(header);
    }

    void write_line(const std::string &line) {
        if (!out_.is_open()) return;
        out_ << line << '\n';
        out_.flush();
    }

private:
    std::ofstream out_;
};

ExistenceReport aggregate(const ProfileSpace &space, const std::vector<ChunkResult> &results) {
    ExistenceReport report;
    report.n = space.n;
    report.mode = space.mode;
    for (const ChunkResult &r : results) {
        report.profiles_checked += r.checked;
        for (const std::string &f : r.failures) {
            report.failures.push_back(parse_profile_line(f, space.n));
        }
        for (const auto &[profile, cycle] : r.cycles) {
            std::vector<Allocation> allocs;
            std::istringstream in(cycle);
            std::string name;
            while (std::getline(in, name, ',')) {
                allocs.push_back(allocation_from_name(name, space.n));
            }
            report.cycles.emplace_back(parse_profile_line(profile, space.n), std::move(allocs));
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    std::sort(report.cycles.begin(), report.cycles.end());
    return report;
}

ChunkResult process_chunk(const ProfileSpace &space, std::uint64_t chunk,
                          ExistenceChecker &checker) {
    ChunkResult result;
    for_each_profile_in_chunk(space, chunk, [&](std::span<const std::uint32_t> idx) {
        ++result.checked;
        const ExistenceChecker::Outcome outcome = checker.check_indices(idx);
        if (!outcome.ie_empty && !outcome.cyclic) return;
        const Profile profile = profile_from_indices(space.n, idx);
        const std::string line = profile_line(profile);
        if (outcome.ie_empty) result.failures.push_back(line);
        if (outcome.cyclic) {
            // Rare path: extract a witness cycle through the definitional
            // digraph rather than the fast checker.
            const auto cycle = find_cycle(dominance_digraph(profile));
            std::string csv;
            for (const Allocation &a : cycle.value()) {
                if (!csv.empty()) csv += ',';
                csv += allocation_name(a);
            }
            result.cycles.emplace_back(line, csv);
        }
    });
    return result;
}

ExistenceReport run_sweep(const ProfileSpace &space, const SweepOptions &opts) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t chunk_count = profile_chunk_count(space);
    const std::string header = sweep_header(space, chunk_count);

    CheckpointState state;
    if (!opts.checkpoint_path.empty()) {
        state = load_checkpoint(opts.checkpoint_path, header);
        if (state.done && state.loaded.size() != chunk_count) {
            throw std::invalid_argument("checkpoint " + opts.checkpoint_path +
                                        " is marked done but holds " +
                                        std::to_string(state.loaded.size()) + " of " +
                                        std::to_string(chunk_count) + " chunks");
        }
    }
    std::vector<ChunkResult> results = std::move(state.loaded);
    const std::uint64_t first_pending = results.size();
    CheckpointWriter writer(opts.checkpoint_path, header,
                            !std::filesystem::exists(opts.checkpoint_path) ||
                                (first_pending == 0 && !state.done));

    if (!state.done && first_pending < chunk_count) {
        const int jobs = std::max(1, opts.jobs);
        std::atomic<std::uint64_t> next_claim{first_pending};
        std::mutex mu;
        std::condition_variable cv;
        std::map<std::uint64_t, ChunkResult> finished;
        std::exception_ptr worker_error;

        auto work = [&]() {
            try {
                ExistenceChecker checker(space.n);
                for (;;) {
                    const std::uint64_t chunk = next_claim.fetch_add(1);
                    if (chunk >= chunk_count) return;
                    ChunkResult r = process_chunk(space, chunk, checker);
                    std::lock_guard<std::mutex> lock(mu);
                    finished.emplace(chunk, std::move(r));
                    cv.notify_all();
                }
            } catch (...) {
                next_claim.store(chunk_count);  // drain remaining workers
                std::lock_guard<std::mutex> lock(mu);
                if (!worker_error) worker_error = std::current_exception();
                cv.notify_all();
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);

        // Commit chunk results in ascending order so the checkpoint is
        // byte-identical regardless of worker count or interruptions.
        for (std::uint64_t chunk = first_pending; chunk < chunk_count; ++chunk) {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return finished.count(chunk) || worker_error; });
            if (worker_error) break;
            ChunkResult r = std::move(finished[chunk]);
            finished.erase(chunk);
            lock.unlock();
            writer.write_line(chunk_line(chunk, r));
            results.push_back(std::move(r));
        }
        for (std::thread &t : pool) t.join();
        if (worker_error) std::rethrow_exception(worker_error);
    }

    ExistenceReport report = aggregate(space, results);
    if (!state.done && results.size() == chunk_count) {
        writer.write_line("done checked=" + std::to_string(report.profiles_checked) +
                          " failures=" + std::to_string(report.failures.size()) +
                          " cycles=" + std::to_string(report.cycles.size()));
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

// Uniform n=6 sampling without a relation table: draw a preference order,
// then unrank a uniform linear extension of its containment poset.
ExistenceReport random_sweep_unranked(int n, std::uint64_t samples, std::uint64_t seed,
                                      const SweepOptions &opts) {
    if (!opts.checkpoint_path.empty()) {
        throw std::invalid_argument("checkpointing is not supported for n=6 random sweeps");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<PreferenceOrder> orders = all_preference_orders(n);
    std::vector<ContainmentPoset> posets;
    posets.reserve(orders.size());
    for (const PreferenceOrder &order : orders) posets.push_back(containment_poset(order));
    const std::uint64_t extensions = count_linear_extensions(posets[0]);

    ExistenceReport report;
    report.n = n;
    report.mode = IterationMode::kRandom;
    ExistenceChecker checker(n);
    std::mt19937_64 rng(mix64(seed));
    for (std::uint64_t s = 0; s < samples; ++s) {
        Profile profile;
        profile.n = n;
        for (int i = 0; i < n; ++i) {
            const auto order = bounded_uniform(rng, orders.size());
            const auto index = bounded_uniform(rng, extensions);
            profile.agents.push_back(linear_extension_at(posets[order], index));
        }
        ++report.profiles_checked;
        const ExistenceChecker::Outcome outcome = checker.check(profile);
        if (outcome.ie_empty) report.failures.push_back(profile);
        if (outcome.cyclic) {
            const auto cycle = find_cycle(dominance_digraph(profile));
            report.cycles.emplace_back(profile, cycle.value());
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    std::sort(report.cycles.begin(), report.cycles.end());
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace

std::string summary_line(const ExistenceReport &report) {
    std::ostringstream out;
    out << report.profiles_checked
        << (report.mode == IterationMode::kSymmetryReduced ? " orbit representatives checked, "
                                                           : " profiles checked, ")
        << report.failures.size() << " failures, " << report.cycles.size() << " cycles";
    return out.str();
}

std::string existence_report_json(const ExistenceReport &report) {
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["mode"] = mode_name(report.mode);
    doc["profiles_checked"] = report.profiles_checked;
    doc["failures"] = nlohmann::ordered_json::array();
    for (const Profile &p : report.failures) {
        doc["failures"].push_back(nlohmann::ordered_json::parse(serialize_profile(p)));
    }
    doc["cycles"] = nlohmann::ordered_json::array();
    for (const auto &[profile, cycle] : report.cycles) {
        nlohmann::ordered_json entry;
        entry["profile"] = nlohmann::ordered_json::parse(serialize_profile(profile));
        entry["cycle"] = nlohmann::ordered_json::array();
        for (const Allocation &a : cycle) entry["cycle"].push_back(allocation_name(a));
        doc["cycles"].push_back(entry);
    }
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump(2) + "\n";
}

ExistenceReport verify_existence_exhaustive(int n, const SweepOptions &opts) {
    ProfileSpace space;
    space.n = n;
    space.mode = opts.symmetry ? IterationMode::kSymmetryReduced : IterationMode::kFull;
    space.budget = opts.budget;
    return run_sweep(space, opts);
}

ExistenceReport verify_existence_random(int n, std::uint64_t samples, std::uint64_t seed,
                                        const SweepOptions &opts) {
    if (n < kMinObjects || n > 6) {
        throw std::invalid_argument("random existence sweeps support 3 <= n <= 6, got n=" +
                                    std::to_string(n));
    }
    if (n == 6) return random_sweep_unranked(n, samples, seed, opts);
    ProfileSpace space;
    space.n = n;
    space.mode = IterationMode::kRandom;
    space.samples = samples;
    space.seed = seed;
    return run_sweep(space, opts);
}

// ---------------------------------------------------------------------------
// The n=5 counterexample

const CanonicalIntensity &table2_agent(int index) {
    static const std::array<CanonicalIntensity, 3> agents = {
        parse_ranking_line("ae>ad>be>bd>ac>ce>ab>bc>cd>de", 5),
        parse_ranking_line("ae>ad>be>ac>bd>ce>cd>ab>bc>de", 5),
        parse_ranking_line("ae>ad>ac>be>bd>ce>cd>de>ab>bc", 5),
    };
    return agents.at(index);
}

const CanonicalIntensity &default_completion4() {
    static const CanonicalIntensity s =
        linear_extension_at(containment_poset(PreferenceOrder{{3, 0, 1, 2, 4}}), 0);
    return s;
}

const CanonicalIntensity &default_completion5() {
    static const CanonicalIntensity s = parse_ranking_line("cd>cb>ed>ca>eb>ad>ea>bd>ab>ce", 5);
    return s;
}

Profile build_table2_profile(const CanonicalIntensity &completion4,
                             const CanonicalIntensity &completion5) {
    if (completion4.n != 5 || completion5.n != 5) {
        throw std::invalid_argument("completions must be n=5 relations");
    }
    const ObjectId top4 = induced_preference(completion4).ranking[0];
    if (top4 != 3) {
        throw std::invalid_argument("agent 4 completion must top-rank d, got top " +
                                    object_name(top4, 5));
    }
    const ObjectId top5 = induced_preference(completion5).ranking[0];
    if (top5 != 2) {
        throw std::invalid_argument("agent 5 completion must top-rank c, got top " +
                                    object_name(top5, 5));
    }
    Profile profile;
    profile.n = 5;
    profile.agents = {table2_agent(0), table2_agent(1), table2_agent(2), completion4, completion5};
    return profile;
}

Profile table2_default_profile() {
    return build_table2_profile(default_completion4(), default_completion5());
}

CounterexampleReport verify_counterexample(const Profile &profile) {
    CounterexampleReport report;
    report.completion4 = profile.agents[3];
    report.completion5 = profile.agents[4];

    const DominanceDigraph graph = dominance_digraph(profile);
    report.pareto_count = graph.nodes.size();

    auto node_index = [&](const Allocation &a) -> int {
        const auto it = std::lower_bound(graph.nodes.begin(), graph.nodes.end(), a);
        return (it != graph.nodes.end() && *it == a)
                   ? static_cast<int>(it - graph.nodes.begin())
                   : -1;
    };
    auto has_edge = [&](const Allocation &from, const Allocation &to) {
        const int f = node_index(from), t = node_index(to);
        if (f < 0 || t < 0) return false;
        return std::binary_search(graph.edges.begin(), graph.edges.end(), std::make_pair(f, t));
    };

    const Allocation s = allocation_from_name("cabde", 5);
    const Allocation t = allocation_from_name("cbade", 5);
    const Allocation x = allocation_from_name("abcde", 5);
    const Allocation y = allocation_from_name("acbde", 5);
    const Allocation w = allocation_from_name("bcade", 5);
    const Allocation z = allocation_from_name("bacde", 5);

    report.six_listed_present = true;
    for (const Allocation &a : {s, t, x, y, w, z}) {
        if (node_index(a) < 0) report.six_listed_present = false;
    }

    // The cycle chain z D s, w D z, y D w, x D y, t D x, s D t with the
    // inequality cited for each step.
    const ObjectId oa = 0, ob = 1, oc = 2;
    report.inequalities = {{
        {z, s, 1, 3, {ob, oc}},
        {w, z, 3, 2, {oa, oc}},
        {y, w, 1, 3, {oa, ob}},
        {x, y, 2, 3, {ob, oc}},
        {t, x, 3, 1, {oa, oc}},
        {s, t, 2, 3, {oa, ob}},
    }};
    report.cycle_verified = true;
    for (CitedInequality &check : report.inequalities) {
        check.value_hi = profile.agents[check.agent_hi - 1].value(check.pair.first,
                                                                  check.pair.second);
        check.value_lo = profile.agents[check.agent_lo - 1].value(check.pair.first,
                                                                  check.pair.second);
        check.inequality_holds = check.value_hi > check.value_lo;
        check.edge_holds = has_edge(check.from, check.to);
        if (!check.inequality_holds || !check.edge_holds) report.cycle_verified = false;
    }

    if (const auto cycle = find_cycle(graph)) report.detected_cycle = *cycle;
    report.ie_set = intensity_efficient_set(graph);
    report.nonexistence_confirmed = report.ie_set.empty();
    return report;
}

CompletionSearchResult search_completions(std::uint64_t max_pairs) {
    CompletionSearchResult result;
    std::vector<CanonicalIntensity> top_d, top_c;
    for_each_intensity_relation(5, [&](const CanonicalIntensity &s) {
        const ObjectId top = induced_preference(s).ranking[0];
        if (top == 3) top_d.push_back(s);
        if (top == 2) top_c.push_back(s);
    });
    result.candidates4 = top_d.size();
    result.candidates5 = top_c.size();

    ExistenceChecker checker(5);
    for (const CanonicalIntensity &c4 : top_d) {
        for (const CanonicalIntensity &c5 : top_c) {
            if (max_pairs && result.pairs_tried >= max_pairs) return result;
            ++result.pairs_tried;
            const Profile profile = build_table2_profile(c4, c5);
            if (checker.check(profile).ie_empty) {
                result.found = {c4, c5};
                return result;
            }
        }
    }
    return result;
}

}  // namespace ieff
