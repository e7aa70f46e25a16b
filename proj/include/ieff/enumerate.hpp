#ifndef IEFF_ENUMERATE_HPP
#define IEFF_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ieff/model.hpp"

// Enumeration of preference orders, canonical strict intensity relations
// (linear extensions of the pair-containment poset of an order), and profile
// spaces with full, symmetry-reduced and seeded-random iteration.
namespace ieff {

// Full iteration of a profile space is refused above this many profiles.
constexpr std::uint64_t kDefaultProfileBudget = 20'000'000;

// All n! strict total orders, lexicographic by object index. 3 <= n <= 8.
std::vector<PreferenceOrder> all_preference_orders(int n);

// Partial order on the k object pairs of a preference order: P sits above Q
// when Q's position interval lies strictly inside P's. Its linear extensions
// (top element gets rank k) are exactly the canonical intensity relations
// inducing that order.
struct ContainmentPoset {
    PreferenceOrder order;
    // Oriented pairs (preferred, dispreferred), sorted by position interval.
    std::vector<OrderedPair> elements;
    // contains[p][q]: element p strictly contains element q.
    std::vector<std::vector<bool>> contains;

    int size() const { return static_cast<int>(elements.size()); }
};

ContainmentPoset containment_poset(const PreferenceOrder &order);

// Every linear extension of the poset, converted and validated as a
// CanonicalIntensity, in a deterministic backtracking order.
std::vector<CanonicalIntensity> linear_extensions(const ContainmentPoset &poset);

// Streaming variant; keeps memory flat for large n.
void for_each_linear_extension(const ContainmentPoset &poset,
                               const std::function<void(const CanonicalIntensity &)> &fn);

// Extension count via a downset DP; an independent route to the same number
// the backtracking enumerator produces.
std::uint64_t count_linear_extensions(const ContainmentPoset &poset);

// The index-th extension in the enumerator's order, computed by unranking
// against the DP counts instead of walking its predecessors.
CanonicalIntensity linear_extension_at(const ContainmentPoset &poset, std::uint64_t index);

// All canonical strict intensity relations for n objects: concatenation of
// linear_extensions over all_preference_orders. 3 <= n <= 6.
std::vector<CanonicalIntensity> all_intensity_relations(int n);

// Streaming count/visit across all orders; the only sane route at n = 6.
std::uint64_t for_each_intensity_relation(
    int n, const std::function<void(const CanonicalIntensity &)> &fn);

// The relations of a given n, sorted by their flat value encoding, with
// index lookups and object-relabeling tables. Shared by profile iteration
// and the sweeps; built once per n and cached. 3 <= n <= 5.
class RelationTable {
public:
    static const RelationTable &get(int n);

    int n() const { return n_; }
    std::uint32_t count() const { return static_cast<std::uint32_t>(relations_.size()); }
    const CanonicalIntensity &relation(std::uint32_t idx) const { return relations_[idx]; }
    std::uint32_t index_of(const CanonicalIntensity &s) const;

    // Object permutations of [0,n), lexicographic; perm 0 is the identity.
    const std::vector<std::vector<int>> &perms() const { return perms_; }
    // Index of relabel_objects(relation(rel), perms()[perm]).
    std::uint32_t relabel(std::uint32_t rel, int perm) const {
        return relabel_[static_cast<std::size_t>(rel) * perms_.size() + perm];
    }
    // Relations that are lexicographically minimal within their own
    // object-relabeling orbit; candidates for the first slot of a canonical
    // profile.
    const std::vector<std::uint32_t> &orbit_minimal() const { return orbit_minimal_; }

private:
    explicit RelationTable(int n);

    int n_;
    std::vector<CanonicalIntensity> relations_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::uint32_t> relabel_;
    std::vector<std::uint32_t> orbit_minimal_;
};

enum class IterationMode { kFull, kSymmetryReduced, kRandom };

struct ProfileSpace {
    int n = 0;
    IterationMode mode = IterationMode::kFull;
    std::uint64_t budget = kDefaultProfileBudget;  // full mode only
    std::uint64_t samples = 0;                     // random mode only
    std::uint64_t seed = 0;                        // random mode only
};

// Chunked access to a profile space. Chunks partition the space
// deterministically, so sweeps can checkpoint and parallelize by chunk while
// producing identical aggregates. Visits pass relation indices into
// RelationTable::get(n), one per agent.
//   full:             all R^n index tuples, ascending flat index.
//   symmetry-reduced: one lexicographically-minimal representative per orbit
//                     under simultaneous object and agent relabeling
//                     (n = 3 or 4).
//   random:           `samples` independent uniform draws, reproducible from
//                     seed and independent of the chunk consumer.
// Throws std::invalid_argument (naming the exact count) when a full space
// exceeds the budget.
std::uint64_t profile_chunk_count(const ProfileSpace &space);
void for_each_profile_in_chunk(const ProfileSpace &space, std::uint64_t chunk,
                               const std::function<void(std::span<const std::uint32_t>)> &visit);

// Cursor over a profile space, yielding materialized profiles chunk by chunk.
class ProfileIterator {
public:
    explicit ProfileIterator(ProfileSpace space);

    std::optional<Profile> next();
    const ProfileSpace &space() const { return space_; }

private:
    void refill();

    ProfileSpace space_;
    std::uint64_t next_chunk_ = 0;
    std::uint64_t chunk_count_ = 0;
    std::vector<std::vector<std::uint32_t>> buffer_;
    std::size_t buffer_pos_ = 0;
};

ProfileIterator profile_iterator(const ProfileSpace &space);

Profile profile_from_indices(int n, std::span<const std::uint32_t> rel_indices);

// The orbit of a profile under simultaneous object and agent relabeling,
// deduplicated. Orbit size divides n! * n!.
std::vector<Profile> expand_orbit(const Profile &profile);

// Lexicographically smallest profile in the orbit, by explicit minimization
// over all n! * n! group elements.
Profile canonical_profile(const Profile &profile);

}  // namespace ieff

#endif
