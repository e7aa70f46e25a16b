#include "ieff/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ieff {

namespace {

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Only the chain condition can fail for a rank assignment that is skew
// symmetric and bijective onto {1,...,k} by construction.
bool chain_condition_ok(const CanonicalIntensity &s) {
    const int n = s.n;
    for (ObjectId a = 0; a < n; ++a) {
        for (ObjectId b = 0; b < n; ++b) {
            if (a == b) continue;
            const int ab = s.value(a, b);
            if (ab <= 0) continue;
            for (ObjectId c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                const int bc = s.value(b, c);
                if (bc > 0 && s.value(a, c) <= std::max(ab, bc)) return false;
            }
        }
    }
    return true;
}

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
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

constexpr std::uint64_t kFullChunk = 256;
constexpr std::uint64_t kRandomChunk = 4096;

unsigned __int128 full_space_size(int n) {
    const unsigned __int128 r = RelationTable::get(n).count();
    unsigned __int128 total = 1;
    for (int i = 0; i < n; ++i) total *= r;
    return total;
}

void check_full_budget(const ProfileSpace &space) {
    const unsigned __int128 total = full_space_size(space.n);
    if (total > space.budget) {
        throw std::invalid_argument(
            "full iteration over " + std::to_string(RelationTable::get(space.n).count()) + "^" +
            std::to_string(space.n) + " = " + u128_to_string(total) +
            " profiles exceeds budget " + std::to_string(space.budget));
    }
}

struct SymmetryChunks {
    // Chunk c fixes the two smallest relation indices of the sorted tuple.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> first_two;
};

SymmetryChunks symmetry_chunks(int n) {
    if (n != 3 && n != 4) {
        throw std::invalid_argument("symmetry-reduced iteration supports n=3 and n=4, got n=" +
                                    std::to_string(n));
    }
    const RelationTable &table = RelationTable::get(n);
    SymmetryChunks chunks;
    for (std::uint32_t rep : table.orbit_minimal()) {
        for (std::uint32_t r2 = rep; r2 < table.count(); ++r2) {
            chunks.first_two.emplace_back(rep, r2);
        }
    }
    return chunks;
}

// True when tuple is the lexicographically smallest encoding in its orbit:
// no object relabeling yields a sorted index tuple below it.
bool is_canonical_tuple(const RelationTable &table, const std::uint32_t *tuple, int n) {
    const int nperms = static_cast<int>(table.perms().size());
    std::uint32_t image[kMaxObjects];
    for (int perm = 1; perm < nperms; ++perm) {
        for (int i = 0; i < n; ++i) image[i] = table.relabel(tuple[i], perm);
        std::sort(image, image + n);
        for (int i = 0; i < n; ++i) {
            if (image[i] != tuple[i]) {
                if (image[i] < tuple[i]) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<PreferenceOrder> all_preference_orders(int n) {
    if (n < kMinObjects || n > kMaxObjects) {
        throw std::invalid_argument("preference order enumeration supports 3 <= n <= 8, got n=" +
                                    std::to_string(n));
    }
    std::vector<ObjectId> ranking(n);
    for (int i = 0; i < n; ++i) ranking[i] = i;
    std::vector<PreferenceOrder> orders;
    do {
        orders.push_back(PreferenceOrder{ranking});
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return orders;
}

ContainmentPoset containment_poset(const PreferenceOrder &order) {
    const int n = order.n();
    ContainmentPoset poset;
    poset.order = order;
    // Elements by position interval (lo, hi), lo < hi; oriented best-first.
    for (int lo = 0; lo < n; ++lo) {
        for (int hi = lo + 1; hi < n; ++hi) {
            poset.elements.push_back({order.ranking[lo], order.ranking[hi]});
        }
    }
    const int k = poset.size();
    poset.contains.assign(k, std::vector<bool>(k, false));
    auto interval = [&](int e) {
        return std::pair<int, int>{order.position(poset.elements[e].first),
                                   order.position(poset.elements[e].second)};
    };
    for (int p = 0; p < k; ++p) {
        auto [plo, phi] = interval(p);
        for (int q = 0; q < k; ++q) {
            if (p == q) continue;
            auto [qlo, qhi] = interval(q);
            poset.contains[p][q] = plo <= qlo && qhi <= phi;
        }
    }
    return poset;
}

namespace {

std::vector<std::uint32_t> container_masks(const ContainmentPoset &poset) {
    const int k = poset.size();
    if (k > 21) throw std::invalid_argument("containment poset too large to enumerate");
    std::vector<std::uint32_t> mask(k, 0);
    for (int q = 0; q < k; ++q) {
        for (int p = 0; p < k; ++p) {
            if (poset.contains[p][q]) mask[q] |= 1u << p;
        }
    }
    return mask;
}

// chosen[j] is the element holding rank k - j.
CanonicalIntensity relation_from_chosen(const ContainmentPoset &poset,
                                        const std::vector<int> &chosen) {
    const int k = poset.size();
    const int n = poset.order.n();
    CanonicalIntensity s;
    s.n = n;
    s.values.assign(n * (n - 1), 0);
    for (int j = 0; j < k; ++j) {
        const OrderedPair &p = poset.elements[chosen[j]];
        const auto rank = static_cast<std::int8_t>(k - j);
        s.values[pair_index(p.first, p.second, n)] = rank;
        s.values[pair_index(p.second, p.first, n)] = static_cast<std::int8_t>(-rank);
    }
    if (!chain_condition_ok(s)) {
        throw std::logic_error("linear extension violates the chain condition: " +
                               ranking_line(s));
    }
    return s;
}

}  // namespace

void for_each_linear_extension(const ContainmentPoset &poset,
                               const std::function<void(const CanonicalIntensity &)> &fn) {
    const int k = poset.size();
    const std::vector<std::uint32_t> container_mask = container_masks(poset);

    std::vector<int> chosen;  // element ids, descending rank
    chosen.reserve(k);

    auto emit = [&]() { fn(relation_from_chosen(poset, chosen)); };

    // Assign ranks k down to 1; an element is eligible once every element
    // containing it has already been assigned a higher rank.
    auto backtrack = [&](auto &&self, std::uint32_t assigned) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            emit();
            return;
        }
        for (int e = 0; e < k; ++e) {
            if (assigned & (1u << e)) continue;
            if ((container_mask[e] & ~assigned) != 0) continue;
            chosen.push_back(e);
            self(self, assigned | (1u << e));
            chosen.pop_back();
        }
    };
    backtrack(backtrack, 0);
}

std::vector<CanonicalIntensity> linear_extensions(const ContainmentPoset &poset) {
    std::vector<CanonicalIntensity> out;
    for_each_linear_extension(poset, [&](const CanonicalIntensity &s) { out.push_back(s); });
    return out;
}

namespace {

// completions[S] = number of ways to place the remaining ranks when the
// elements in S already hold the top |S| ranks.
std::vector<std::uint64_t> completion_counts(const ContainmentPoset &poset) {
    const int k = poset.size();
    const std::vector<std::uint32_t> container_mask = container_masks(poset);
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    std::vector<std::uint64_t> memo(std::size_t{1} << k, 0);
    memo[full] = 1;
    // Masks in descending order always precede their submasks' dependencies.
    for (std::uint32_t mask = full; mask-- > 0;) {
        std::uint64_t total = 0;
        for (int e = 0; e < k; ++e) {
            if (mask & (1u << e)) continue;
            if ((container_mask[e] & ~mask) != 0) continue;
            total += memo[mask | (1u << e)];
        }
        memo[mask] = total;
    }
    return memo;
}

}  // namespace

std::uint64_t count_linear_extensions(const ContainmentPoset &poset) {
    return completion_counts(poset)[0];
}

CanonicalIntensity linear_extension_at(const ContainmentPoset &poset, std::uint64_t index) {
    const int k = poset.size();
    const std::vector<std::uint32_t> container_mask = container_masks(poset);
    const std::vector<std::uint64_t> memo = completion_counts(poset);
    if (index >= memo[0]) {
        throw std::out_of_range("extension index " + std::to_string(index) + " >= count " +
                                std::to_string(memo[0]));
    }
    std::vector<int> chosen;
    chosen.reserve(k);
    std::uint32_t assigned = 0;
    while (static_cast<int>(chosen.size()) < k) {
        for (int e = 0; e < k; ++e) {
            if (assigned & (1u << e)) continue;
            if ((container_mask[e] & ~assigned) != 0) continue;
            const std::uint64_t below = memo[assigned | (1u << e)];
            if (index < below) {
                chosen.push_back(e);
                assigned |= 1u << e;
                break;
            }
            index -= below;
        }
    }
    return relation_from_chosen(poset, chosen);
}

std::uint64_t for_each_intensity_relation(
    int n, const std::function<void(const CanonicalIntensity &)> &fn) {
    if (n < kMinObjects || n > 6) {
        throw std::invalid_argument("intensity relation enumeration supports 3 <= n <= 6, got n=" +
                                    std::to_string(n));
    }
    std::uint64_t count = 0;
    for (const PreferenceOrder &order : all_preference_orders(n)) {
        for_each_linear_extension(containment_poset(order), [&](const CanonicalIntensity &s) {
            ++count;
            if (fn) fn(s);
        });
    }
    return count;
}

std::vector<CanonicalIntensity> all_intensity_relations(int n) {
    std::vector<CanonicalIntensity> out;
    for_each_intensity_relation(n, [&](const CanonicalIntensity &s) { out.push_back(s); });
    return out;
}

RelationTable::RelationTable(int n) : n_(n) {
    relations_ = all_intensity_relations(n);
    std::sort(relations_.begin(), relations_.end());

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    relabel_.assign(relations_.size() * perms_.size(), 0);
    for (std::uint32_t rel = 0; rel < count(); ++rel) {
        for (std::size_t p = 0; p < perms_.size(); ++p) {
            relabel_[rel * perms_.size() + p] = index_of(relabel_objects(relations_[rel], perms_[p]));
        }
    }

    for (std::uint32_t rel = 0; rel < count(); ++rel) {
        bool minimal = true;
        for (std::size_t p = 1; p < perms_.size() && minimal; ++p) {
            minimal = relabel(rel, static_cast<int>(p)) >= rel;
        }
        if (minimal) orbit_minimal_.push_back(rel);
    }
}

const RelationTable &RelationTable::get(int n) {
    switch (n) {
        case 3: {
            static const RelationTable table(3);
            return table;
        }
        case 4: {
            static const RelationTable table(4);
            return table;
        }
        case 5: {
            static const RelationTable table(5);
            return table;
        }
        default:
            throw std::invalid_argument("relation table supports 3 <= n <= 5, got n=" +
                                        std::to_string(n));
    }
}

std::uint32_t RelationTable::index_of(const CanonicalIntensity &s) const {
    auto it = std::lower_bound(relations_.begin(), relations_.end(), s);
    if (it == relations_.end() || !(*it == s)) {
        throw std::invalid_argument("relation not found in table: " + ranking_line(s));
    }
    return static_cast<std::uint32_t>(it - relations_.begin());
}

std::uint64_t profile_chunk_count(const ProfileSpace &space) {
    switch (space.mode) {
        case IterationMode::kFull: {
            check_full_budget(space);
            const auto total = static_cast<std::uint64_t>(full_space_size(space.n));
            return (total + kFullChunk - 1) / kFullChunk;
        }
        case IterationMode::kSymmetryReduced:
            return symmetry_chunks(space.n).first_two.size();
        case IterationMode::kRandom:
            return (space.samples + kRandomChunk - 1) / kRandomChunk;
    }
    throw std::logic_error("bad iteration mode");
}

void for_each_profile_in_chunk(const ProfileSpace &space, std::uint64_t chunk,
                               const std::function<void(std::span<const std::uint32_t>)> &visit) {
    const RelationTable &table = RelationTable::get(space.n);
    const int n = space.n;
    std::uint32_t tuple[kMaxObjects];

    switch (space.mode) {
        case IterationMode::kFull: {
            check_full_budget(space);
            const auto total = static_cast<std::uint64_t>(full_space_size(space.n));
            const std::uint64_t begin = chunk * kFullChunk;
            const std::uint64_t end = std::min(total, begin + kFullChunk);
            for (std::uint64_t flat = begin; flat < end; ++flat) {
                std::uint64_t rest = flat;
                for (int i = n - 1; i >= 0; --i) {
                    tuple[i] = static_cast<std::uint32_t>(rest % table.count());
                    rest /= table.count();
                }
                visit(std::span<const std::uint32_t>(tuple, n));
            }
            return;
        }
        case IterationMode::kSymmetryReduced: {
            const SymmetryChunks chunks = symmetry_chunks(space.n);
            const auto [r1, r2] = chunks.first_two.at(chunk);
            tuple[0] = r1;
            tuple[1] = r2;
            // Remaining slots run nondecreasing; the canonical representative
            // of each orbit is visited exactly once.
            auto extend = [&](auto &&self, int slot) -> void {
                if (slot == n) {
                    if (is_canonical_tuple(table, tuple, n)) {
                        visit(std::span<const std::uint32_t>(tuple, n));
                    }
                    return;
                }
                for (std::uint32_t r = tuple[slot - 1]; r < table.count(); ++r) {
                    tuple[slot] = r;
                    self(self, slot + 1);
                }
            };
            extend(extend, 2);
            return;
        }
        case IterationMode::kRandom: {
            const std::uint64_t begin = chunk * kRandomChunk;
            const std::uint64_t end = std::min(space.samples, begin + kRandomChunk);
            // Per-chunk generator: the sample sequence is a pure function of
            // (seed, chunk), so worker count and scheduling cannot affect it.
            std::mt19937_64 rng(mix64(space.seed ^ mix64(chunk + 1)));
            for (std::uint64_t s = begin; s < end; ++s) {
                for (int i = 0; i < n; ++i) {
                    tuple[i] = static_cast<std::uint32_t>(bounded_uniform(rng, table.count()));
                }
                visit(std::span<const std::uint32_t>(tuple, n));
            }
            return;
        }
    }
    throw std::logic_error("bad iteration mode");
}

ProfileIterator::ProfileIterator(ProfileSpace space)
    : space_(space), chunk_count_(profile_chunk_count(space)) {}

void ProfileIterator::refill() {
    buffer_.clear();
    buffer_pos_ = 0;
    while (buffer_.empty() && next_chunk_ < chunk_count_) {
        for_each_profile_in_chunk(space_, next_chunk_, [&](std::span<const std::uint32_t> idx) {
            buffer_.emplace_back(idx.begin(), idx.end());
        });
        ++next_chunk_;
    }
}

std::optional<Profile> ProfileIterator::next() {
    if (buffer_pos_ >= buffer_.size()) {
        refill();
        if (buffer_.empty()) return std::nullopt;
    }
    const std::vector<std::uint32_t> &idx = buffer_[buffer_pos_++];
    return profile_from_indices(space_.n, std::span<const std::uint32_t>(idx.data(), idx.size()));
}

ProfileIterator profile_iterator(const ProfileSpace &space) { return ProfileIterator(space); }

Profile profile_from_indices(int n, std::span<const std::uint32_t> rel_indices) {
    const RelationTable &table = RelationTable::get(n);
    Profile profile;
    profile.n = n;
    profile.agents.reserve(rel_indices.size());
    for (std::uint32_t idx : rel_indices) profile.agents.push_back(table.relation(idx));
    return profile;
}

std::vector<Profile> expand_orbit(const Profile &profile) {
    const int n = profile.n;
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;

    std::set<Profile> orbit;
    std::vector<int> operm = identity;
    do {
        std::vector<int> aperm = identity;
        do {
            orbit.insert(relabel_profile(profile, operm, aperm));
        } while (std::next_permutation(aperm.begin(), aperm.end()));
    } while (std::next_permutation(operm.begin(), operm.end()));
    return {orbit.begin(), orbit.end()};
}

Profile canonical_profile(const Profile &profile) {
    const int n = profile.n;
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;

    // Agent relabeling alone can realize any reordering of the tuple, so the
    // minimum over it is the sorted tuple; minimize that over object perms.
    std::optional<Profile> best;
    std::vector<int> operm = identity;
    do {
        Profile image;
        image.n = n;
        for (const CanonicalIntensity &s : profile.agents) {
            image.agents.push_back(relabel_objects(s, operm));
        }
        std::sort(image.agents.begin(), image.agents.end());
        if (!best || image < *best) best = std::move(image);
    } while (std::next_permutation(operm.begin(), operm.end()));
    return *best;
}

}  // namespace ieff
