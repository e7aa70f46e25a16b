#ifndef IEFF_MODEL_HPP
#define IEFF_MODEL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain types for strict preference-intensity relations in their
// canonical rank-based form: each agent ranks all ordered pairs of distinct
// objects, skew-symmetrically, with positive values forming a bijection onto
// {1,...,k} where k = n*(n-1)/2.
namespace ieff {

using ObjectId = int;

constexpr int kMinObjects = 3;
constexpr int kMaxObjects = 8;

// Number of unordered object pairs, n choose 2.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Index of the ordered pair (first, second), first != second, in the
// lexicographic sequence over (first, second) with the diagonal skipped.
// This indexing is shared by every module that stores per-pair values.
constexpr int pair_index(int first, int second, int n) {
    return first * (n - 1) + (second < first ? second : second - 1);
}

struct OrderedPair {
    ObjectId first = 0;
    ObjectId second = 0;

    friend bool operator==(const OrderedPair &, const OrderedPair &) = default;
    friend auto operator<=>(const OrderedPair &, const OrderedPair &) = default;
};

// Display name for object i: "a","b",... for n <= 26, else "o0","o1",...
std::string object_name(ObjectId id, int n);

// Inverse of object_name; returns -1 if the name is unknown.
ObjectId object_from_name(const std::string &name, int n);

std::string pair_name(const OrderedPair &p, int n);

// One agent's canonical strict intensity relation. values is indexed by
// pair_index and holds s(a,b) in {-k,...,-1,1,...,k}; the diagonal s(a,a)=0
// is implied and never stored. Instances obtained from intensity_from_ranking
// or the enumerate module always satisfy the axioms.
struct CanonicalIntensity {
    int n = 0;
    std::vector<std::int8_t> values;

    int k() const { return pair_count(n); }
    int value(ObjectId a, ObjectId b) const {
        return a == b ? 0 : values[pair_index(a, b, n)];
    }

    friend bool operator==(const CanonicalIntensity &, const CanonicalIntensity &) = default;
    friend auto operator<=>(const CanonicalIntensity &, const CanonicalIntensity &) = default;
};

// A strict total order over objects, best first.
struct PreferenceOrder {
    std::vector<ObjectId> ranking;

    int n() const { return static_cast<int>(ranking.size()); }
    // Position of object x, 0 = best.
    int position(ObjectId x) const;
    bool prefers(ObjectId a, ObjectId b) const { return position(a) < position(b); }

    friend bool operator==(const PreferenceOrder &, const PreferenceOrder &) = default;
    friend auto operator<=>(const PreferenceOrder &, const PreferenceOrder &) = default;
};

// An n-agent intensity profile over n objects.
struct Profile {
    int n = 0;
    std::vector<CanonicalIntensity> agents;

    friend bool operator==(const Profile &, const Profile &) = default;
    friend auto operator<=>(const Profile &, const Profile &) = default;
};

struct Violation {
    // One of: "skew-symmetry", "canonical-range", "strictness", "chain-condition".
    std::string axiom;
    std::vector<OrderedPair> witnesses;
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    bool has(const std::string &axiom) const;
    std::string summary() const;
};

// Thrown when a construction produces a map that fails the axioms; carries
// the full report so callers can surface concrete witnesses.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}

    ValidationReport report;
};

using RawIntensityMap = std::map<OrderedPair, int>;

// Checks a complete map over ordered pairs against the intensity axioms and
// reports every violation, not just the first. A map with missing or
// diagonal entries is an input error (std::invalid_argument), distinct from
// an axiom violation.
ValidationReport validate_intensity(const RawIntensityMap &raw, int n);

// The strict preference order induced by s: a before b iff s(a,b) > 0.
// Totality and transitivity follow from the axioms.
PreferenceOrder induced_preference(const CanonicalIntensity &s);

// Builds the canonical relation that ranks pairs[0] highest (value k) down to
// pairs[k-1] (value 1), negatives filled by skew-symmetry. pairs must list
// each unordered pair exactly once, oriented (preferred, dispreferred).
// Throws std::invalid_argument on duplicate/missing pairs and ValidationError
// when the resulting map violates the axioms.
CanonicalIntensity intensity_from_ranking(const std::vector<OrderedPair> &pairs, int n);

// Positive pairs of s in descending value order; inverse of intensity_from_ranking.
std::vector<OrderedPair> ranking_of(const CanonicalIntensity &s);

// Compact text form "ac>ab>bc": positive pairs, descending intensity.
std::string ranking_line(const CanonicalIntensity &s);
CanonicalIntensity parse_ranking_line(const std::string &line, int n);

// Profile as ranking lines joined by '|'; used for sweep witnesses.
std::string profile_line(const Profile &profile);
Profile parse_profile_line(const std::string &line, int n);

// Object relabeling: s'(perm[a], perm[b]) = s(a, b). perm must be a
// permutation of [0, n).
CanonicalIntensity relabel_objects(const CanonicalIntensity &s, const std::vector<int> &perm);

// Simultaneous relabeling of a profile: objects by object_perm inside every
// agent's relation, agents by agent_perm (agent i moves to slot agent_perm[i]).
Profile relabel_profile(const Profile &profile, const std::vector<int> &object_perm,
                        const std::vector<int> &agent_perm);

}  // namespace ieff

#endif
