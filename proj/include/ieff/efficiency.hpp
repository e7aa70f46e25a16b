#ifndef IEFF_EFFICIENCY_HPP
#define IEFF_EFFICIENCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ieff/model.hpp"

// Allocations, Pareto efficiency, intensity dominance and the dominance
// digraph whose in-degree-zero nodes are the intensity-efficient allocations.
namespace ieff {

// A bijection agents -> objects; objects[i] is agent i's object.
struct Allocation {
    std::vector<ObjectId> objects;

    int n() const { return static_cast<int>(objects.size()); }

    friend bool operator==(const Allocation &, const Allocation &) = default;
    friend auto operator<=>(const Allocation &, const Allocation &) = default;
};

// Compact display string, object names concatenated in agent order
// ("abc" = agent 1 gets a, agent 2 gets b, agent 3 gets c).
std::string allocation_name(const Allocation &alloc);
Allocation allocation_from_name(const std::string &name, int n);

// Agents i and j receive the objects {a, b} under both allocations but in
// opposite ways: (x_i, x_j) = (y_j, y_i) = (a, b).
struct FlippedPair {
    int i = 0;
    int j = 0;
    ObjectId a = 0;  // i's object under x
    ObjectId b = 0;  // j's object under x

    friend bool operator==(const FlippedPair &, const FlippedPair &) = default;
};

// Dominance relation over the Pareto-efficient allocations of a profile:
// edge (x, y) means x intensity-dominates y. Irreflexive and asymmetric.
struct DominanceDigraph {
    std::vector<Allocation> nodes;              // sorted lexicographically
    std::vector<std::pair<int, int>> edges;     // node indices, sorted

    std::vector<int> in_degree() const;
};

// All n! allocations in lexicographic order. n <= 8.
std::vector<Allocation> all_allocations(int n);

// True iff y makes every agent weakly better off than x and at least one
// strictly, under the preferences induced by the profile.
bool pareto_dominates(const Allocation &y, const Allocation &x, const Profile &profile);

// The allocations no other allocation Pareto-dominates, by brute force over
// all n! candidates; sorted lexicographically.
std::vector<Allocation> pareto_set(const Profile &profile);

// Every flipped agent pair of x vs y, reported once per unordered pair with
// i < j and (a, b) = (x_i, x_j). Empty when the agent-wise disagreement has
// no 2-cycle.
std::vector<FlippedPair> flipped_pairs(const Allocation &x, const Allocation &y);

// Definition of intensity dominance: x and y must both be Pareto efficient
// (contract; std::invalid_argument otherwise). True iff they flip at least
// one agent pair, every flipped pair satisfies s_i(a,b) >= s_j(a,b), and at
// least one inequality is strict. Skew-symmetry makes the two orientations
// of each flipped pair a single comparison.
bool intensity_dominates(const Allocation &x, const Allocation &y, const Profile &profile);

DominanceDigraph dominance_digraph(const Profile &profile);

// Pareto-efficient allocations with no intensity dominator: the in-degree
// zero nodes of the dominance digraph.
std::vector<Allocation> intensity_efficient_set(const Profile &profile);
std::vector<Allocation> intensity_efficient_set(const DominanceDigraph &graph);

// A directed cycle if one exists, found through strongly connected
// components: any component with two or more nodes yields a cycle
// (self-loops cannot occur). The result lists the cycle's nodes in edge
// order; the last node has an edge back to the first.
std::optional<std::vector<Allocation>> find_cycle(const DominanceDigraph &graph);

}  // namespace ieff

#endif
