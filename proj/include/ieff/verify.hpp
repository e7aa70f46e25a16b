#ifndef IEFF_VERIFY_HPP
#define IEFF_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ieff/efficiency.hpp"
#include "ieff/enumerate.hpp"
#include "ieff/model.hpp"

// Mechanical verification of the existence claims: the exhaustive n=3 sweep,
// random and symmetry-reduced sweeps for larger n, and the n=5 counterexample
// with explicit completions for the two under-specified agents.
namespace ieff {

struct SweepOptions {
    bool symmetry = false;
    int jobs = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    std::uint64_t budget = kDefaultProfileBudget;
};

struct ExistenceReport {
    int n = 0;
    IterationMode mode = IterationMode::kFull;
    std::uint64_t profiles_checked = 0;
    // Profiles whose intensity-efficient set is empty.
    std::vector<Profile> failures;
    // Profiles whose dominance digraph is cyclic, with one witness cycle.
    std::vector<std::pair<Profile, std::vector<Allocation>>> cycles;
    std::int64_t elapsed_ms = 0;

    bool clean() const { return failures.empty() && cycles.empty(); }
};

// "1728 profiles checked, 0 failures, 0 cycles"
std::string summary_line(const ExistenceReport &report);
// {"n":..., "mode":..., "profiles_checked":..., "failures":[...], "cycles":[...], "elapsed_ms":...}
std::string existence_report_json(const ExistenceReport &report);

// Checks every profile of the space (or every orbit representative with
// opts.symmetry) for an empty intensity-efficient set and for dominance
// cycles. Full mode is refused when the space exceeds opts.budget; symmetry
// mode supports n=3 and n=4. Progress is checkpointed per chunk when a path
// is given; a rerun resumes after the last complete chunk and the final
// checkpoint file is byte-identical to an uninterrupted run's, independent of
// worker count.
ExistenceReport verify_existence_exhaustive(int n, const SweepOptions &opts = {});

// Same checks over `samples` uniform profiles, reproducible from the seed and
// independent of worker count. n in {3,...,6}.
ExistenceReport verify_existence_random(int n, std::uint64_t samples, std::uint64_t seed,
                                        const SweepOptions &opts = {});

// The three fully specified agents of the n=5 counterexample table,
// index 0..2.
const CanonicalIntensity &table2_agent(int index);

// Default completions for agents 4 and 5. Agent 4: the first enumerated
// extension of d > a > b > c > e, which pins s4(d,e) = 10 so d-e flips
// resolve toward agent 4. Agent 5: c > e > a > b > d with s5(c,e) = 1 so c-e
// flips resolve away from agent 5.
const CanonicalIntensity &default_completion4();
const CanonicalIntensity &default_completion5();

// Agents 1-3 fixed from the counterexample table plus the given completions.
// completion4 must top-rank d and completion5 must top-rank c.
Profile build_table2_profile(const CanonicalIntensity &completion4,
                             const CanonicalIntensity &completion5);
Profile table2_default_profile();

// One of the six pairwise intensity comparisons driving the six-step cycle;
// all six reference only agents 1-3, so they hold for every completion.
struct CitedInequality {
    Allocation from, to;   // from intensity-dominates to
    int agent_hi = 0;      // 1-based, the agent with the higher rank
    int agent_lo = 0;
    OrderedPair pair;
    int value_hi = 0;
    int value_lo = 0;
    bool inequality_holds = false;
    bool edge_holds = false;  // dominance verified over all flipped pairs
};

struct CounterexampleReport {
    CanonicalIntensity completion4, completion5;
    std::uint64_t pareto_count = 0;
    bool six_listed_present = false;
    std::array<CitedInequality, 6> inequalities;
    bool cycle_verified = false;              // all six cycle edges hold
    std::vector<Allocation> detected_cycle;   // from SCC-based detection
    std::vector<Allocation> ie_set;           // over the full Pareto set
    bool nonexistence_confirmed = false;      // ie_set empty
};

// Checks, against the full computed Pareto set, that the six listed
// allocations are Pareto efficient, that each of the six cycle edges holds
// via its cited inequality, that cycle detection finds a cycle, and reports
// the intensity-efficient set. Discrepancies are reported, never thrown.
CounterexampleReport verify_counterexample(const Profile &profile);

struct CompletionSearchResult {
    std::optional<std::pair<CanonicalIntensity, CanonicalIntensity>> found;
    std::uint64_t pairs_tried = 0;
    std::uint64_t candidates4 = 0;  // valid n=5 relations top-ranking d
    std::uint64_t candidates5 = 0;  // valid n=5 relations top-ranking c
};

// Scans completion pairs in enumeration order for one whose profile has an
// empty intensity-efficient set. max_pairs = 0 removes the cap.
CompletionSearchResult search_completions(std::uint64_t max_pairs = 0);

// Allocation-free existence check used by the sweeps; equivalent to
// intensity_efficient_set(...).empty() and find_cycle(...).has_value()
// through the definitional path (the unit suite compares the two routes).
class ExistenceChecker {
public:
    explicit ExistenceChecker(int n);

    struct Outcome {
        bool ie_empty = false;
        bool cyclic = false;
    };

    // Relations given as indices into RelationTable::get(n).
    Outcome check_indices(std::span<const std::uint32_t> rel_indices);
    Outcome check(const Profile &profile);

private:
    Outcome run();

    int n_;
    int fact_;
    std::vector<std::array<std::int8_t, 8>> allocs_;      // all n! allocations
    std::vector<std::array<std::int8_t, 8>> inv_allocs_;  // object -> agent
    std::array<const std::int8_t *, 8> values_{};         // agent -> pair values
    std::vector<std::array<std::int8_t, 8>> rank_rows_;   // allocation -> agent ranks
    std::vector<int> pe_;
    std::vector<std::pair<int, int>> edges_;  // pe-local indices
    std::vector<int> indeg_, kahn_indeg_, adj_start_, adj_flat_, queue_;
};

}  // namespace ieff

#endif
