#include "ieff/efficiency.hpp"

#include <algorithm>

namespace ieff {

namespace {

// rank[i][x] = position of object x in agent i's induced order, 0 = best.
std::vector<std::vector<int>> preference_ranks(const Profile &profile) {
    std::vector<std::vector<int>> ranks(profile.agents.size(), std::vector<int>(profile.n, 0));
    for (size_t i = 0; i < profile.agents.size(); ++i) {
        const PreferenceOrder order = induced_preference(profile.agents[i]);
        for (int pos = 0; pos < profile.n; ++pos) ranks[i][order.ranking[pos]] = pos;
    }
    return ranks;
}

bool pareto_dominates_ranked(const Allocation &y, const Allocation &x,
                             const std::vector<std::vector<int>> &ranks) {
    bool strict = false;
    for (int i = 0; i < y.n(); ++i) {
        const int ry = ranks[i][y.objects[i]];
        const int rx = ranks[i][x.objects[i]];
        if (ry > rx) return false;
        if (ry < rx) strict = true;
    }
    return strict;
}

void check_allocation(const Allocation &alloc, int n) {
    if (alloc.n() != n) {
        throw std::invalid_argument("allocation has " + std::to_string(alloc.n()) +
                                    " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (ObjectId x : alloc.objects) {
        if (x < 0 || x >= n || seen[x]) {
            throw std::invalid_argument("allocation " + allocation_name(alloc) +
                                        " is not a bijection");
        }
        seen[x] = true;
    }
}

// Dominance comparison of two Pareto-efficient allocations in both
// directions: one pass over the flipped pairs.
struct FlipComparison {
    bool any_flip = false;
    bool x_weakly_higher = true;  // s_i(a,b) >= s_j(a,b) on every flip
    bool y_weakly_higher = true;
    bool strict = false;          // some flip compares unequal

    bool x_dominates_y() const { return any_flip && x_weakly_higher && strict; }
    bool y_dominates_x() const { return any_flip && y_weakly_higher && strict; }
};

FlipComparison compare_flips(const Allocation &x, const Allocation &y, const Profile &profile) {
    FlipComparison cmp;
    for (const FlippedPair &flip : flipped_pairs(x, y)) {
        cmp.any_flip = true;
        const int vi = profile.agents[flip.i].value(flip.a, flip.b);
        const int vj = profile.agents[flip.j].value(flip.a, flip.b);
        if (vi < vj) cmp.x_weakly_higher = false;
        if (vi > vj) cmp.y_weakly_higher = false;
        if (vi != vj) cmp.strict = true;
    }
    return cmp;
}

}  // namespace

std::string allocation_name(const Allocation &alloc) {
    std::string out;
    for (ObjectId x : alloc.objects) out += object_name(x, alloc.n());
    return out;
}

Allocation allocation_from_name(const std::string &name, int n) {
    Allocation alloc;
    for (char c : name) {
        ObjectId x = object_from_name(std::string(1, c), n);
        if (x < 0) throw std::invalid_argument("unknown object '" + std::string(1, c) + "'");
        alloc.objects.push_back(x);
    }
    check_allocation(alloc, n);
    return alloc;
}

std::vector<int> DominanceDigraph::in_degree() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const auto &[from, to] : edges) ++deg[to];
    return deg;
}

std::vector<Allocation> all_allocations(int n) {
    if (n < 1 || n > kMaxObjects) {
        throw std::invalid_argument("allocation enumeration supports n <= 8, got n=" +
                                    std::to_string(n));
    }
    Allocation alloc;
    alloc.objects.resize(n);
    for (int i = 0; i < n; ++i) alloc.objects[i] = i;
    std::vector<Allocation> out;
    do {
        out.push_back(alloc);
    } while (std::next_permutation(alloc.objects.begin(), alloc.objects.end()));
    return out;
}

bool pareto_dominates(const Allocation &y, const Allocation &x, const Profile &profile) {
    check_allocation(y, profile.n);
    check_allocation(x, profile.n);
    return pareto_dominates_ranked(y, x, preference_ranks(profile));
}

std::vector<Allocation> pareto_set(const Profile &profile) {
    const std::vector<std::vector<int>> ranks = preference_ranks(profile);
    const std::vector<Allocation> all = all_allocations(profile.n);
    std::vector<Allocation> efficient;
    for (const Allocation &x : all) {
        bool dominated = false;
        for (const Allocation &y : all) {
            if (pareto_dominates_ranked(y, x, ranks)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) efficient.push_back(x);
    }
    return efficient;  // all_allocations is lexicographic already
}

std::vector<FlippedPair> flipped_pairs(const Allocation &x, const Allocation &y) {
    if (x.n() != y.n()) throw std::invalid_argument("allocations differ in size");
    std::vector<FlippedPair> flips;
    for (int i = 0; i < x.n(); ++i) {
        for (int j = i + 1; j < x.n(); ++j) {
            if (x.objects[i] == y.objects[j] && x.objects[j] == y.objects[i] &&
                x.objects[i] != y.objects[i]) {
                flips.push_back({i, j, x.objects[i], x.objects[j]});
            }
        }
    }
    return flips;
}

bool intensity_dominates(const Allocation &x, const Allocation &y, const Profile &profile) {
    const std::vector<Allocation> efficient = pareto_set(profile);
    auto is_efficient = [&](const Allocation &a) {
        return std::binary_search(efficient.begin(), efficient.end(), a);
    };
    if (!is_efficient(x) || !is_efficient(y)) {
        throw std::invalid_argument("intensity dominance is defined only between Pareto-efficient "
                                    "allocations; got " + allocation_name(x) + " vs " +
                                    allocation_name(y));
    }
    return compare_flips(x, y, profile).x_dominates_y();
}

DominanceDigraph dominance_digraph(const Profile &profile) {
    DominanceDigraph graph;
    graph.nodes = pareto_set(profile);
    const int count = static_cast<int>(graph.nodes.size());
    for (int p = 0; p < count; ++p) {
        for (int q = p + 1; q < count; ++q) {
            const FlipComparison cmp = compare_flips(graph.nodes[p], graph.nodes[q], profile);
            if (cmp.x_dominates_y()) graph.edges.emplace_back(p, q);
            if (cmp.y_dominates_x()) graph.edges.emplace_back(q, p);
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

std::vector<Allocation> intensity_efficient_set(const DominanceDigraph &graph) {
    const std::vector<int> deg = graph.in_degree();
    std::vector<Allocation> out;
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        if (deg[i] == 0) out.push_back(graph.nodes[i]);
    }
    return out;
}

std::vector<Allocation> intensity_efficient_set(const Profile &profile) {
    return intensity_efficient_set(dominance_digraph(profile));
}

namespace {

struct TarjanState {
    const std::vector<std::vector<int>> &succ;
    std::vector<int> index, lowlink, component;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int component_count = 0;

    explicit TarjanState(const std::vector<std::vector<int>> &succ)
        : succ(succ),
          index(succ.size(), -1),
          lowlink(succ.size(), 0),
          component(succ.size(), -1),
          on_stack(succ.size(), false) {}

    void visit(int v) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : succ[v]) {
            if (index[w] == -1) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component[w] = component_count;
            } while (w != v);
            ++component_count;
        }
    }
};

}  // namespace

std::optional<std::vector<Allocation>> find_cycle(const DominanceDigraph &graph) {
    const int count = static_cast<int>(graph.nodes.size());
    std::vector<std::vector<int>> succ(count);
    for (const auto &[from, to] : graph.edges) succ[from].push_back(to);

    TarjanState tarjan(succ);
    for (int v = 0; v < count; ++v) {
        if (tarjan.index[v] == -1) tarjan.visit(v);
    }

    std::vector<int> component_size(tarjan.component_count, 0);
    for (int v = 0; v < count; ++v) ++component_size[tarjan.component[v]];

    for (int v = 0; v < count; ++v) {
        if (component_size[tarjan.component[v]] < 2) continue;
        // Walk inside the component until a node repeats, then cut the tail.
        std::vector<int> path;
        std::vector<int> seen_at(count, -1);
        int cur = v;
        while (seen_at[cur] == -1) {
            seen_at[cur] = static_cast<int>(path.size());
            path.push_back(cur);
            for (int w : succ[cur]) {
                if (tarjan.component[w] == tarjan.component[cur]) {
                    cur = w;
                    break;
                }
            }
        }
        std::vector<Allocation> cycle;
        for (size_t i = seen_at[cur]; i < path.size(); ++i) cycle.push_back(graph.nodes[path[i]]);
        return cycle;
    }
    return std::nullopt;
}

}  // namespace ieff
