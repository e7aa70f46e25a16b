#include "ieff/model.hpp"

#include <algorithm>
#include <sstream>

namespace ieff {

std::string object_name(ObjectId id, int n) {
    if (n <= 26) return std::string(1, static_cast<char>('a' + id));
    return "o" + std::to_string(id);
}

ObjectId object_from_name(const std::string &name, int n) {
    for (ObjectId i = 0; i < n; ++i) {
        if (object_name(i, n) == name) return i;
    }
    return -1;
}

std::string pair_name(const OrderedPair &p, int n) {
    return object_name(p.first, n) + object_name(p.second, n);
}

int PreferenceOrder::position(ObjectId x) const {
    for (int i = 0; i < n(); ++i) {
        if (ranking[i] == x) return i;
    }
    throw std::invalid_argument("object " + std::to_string(x) + " not in preference order");
}

bool ValidationReport::has(const std::string &axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation &v) { return v.axiom == axiom; });
}

std::string ValidationReport::summary() const {
    if (valid) return "valid";
    std::ostringstream out;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) out << "; ";
        out << violations[i].message;
    }
    return out.str();
}

namespace {

void check_complete(const RawIntensityMap &raw, int n) {
    for (const auto &[pair, value] : raw) {
        (void)value;
        if (pair.first < 0 || pair.first >= n || pair.second < 0 || pair.second >= n) {
            throw std::invalid_argument("incomplete map: entry " + pair_name(pair, n) +
                                        " is outside the object set");
        }
        if (pair.first == pair.second) {
            throw std::invalid_argument("incomplete map: diagonal entry " + pair_name(pair, n) +
                                        " must not be stored");
        }
    }
    for (ObjectId a = 0; a < n; ++a) {
        for (ObjectId b = 0; b < n; ++b) {
            if (a != b && !raw.count({a, b})) {
                throw std::invalid_argument("incomplete map: missing entry for " +
                                            pair_name({a, b}, n));
            }
        }
    }
}

}  // namespace

ValidationReport validate_intensity(const RawIntensityMap &raw, int n) {
    if (n < kMinObjects || n > kMaxObjects) {
        throw std::invalid_argument("object count " + std::to_string(n) + " out of range [" +
                                    std::to_string(kMinObjects) + "," +
                                    std::to_string(kMaxObjects) + "]");
    }
    check_complete(raw, n);

    ValidationReport report;
    auto add = [&](std::string axiom, std::vector<OrderedPair> witnesses, std::string message) {
        report.valid = false;
        report.violations.push_back({std::move(axiom), std::move(witnesses), std::move(message)});
    };
    auto value = [&](ObjectId a, ObjectId b) { return raw.at({a, b}); };

    const int k = pair_count(n);
    for (ObjectId a = 0; a < n; ++a) {
        for (ObjectId b = a + 1; b < n; ++b) {
            if (value(a, b) != -value(b, a)) {
                add("skew-symmetry", {{a, b}, {b, a}},
                    "s(" + pair_name({a, b}, n) + ")=" + std::to_string(value(a, b)) +
                        " but s(" + pair_name({b, a}, n) + ")=" + std::to_string(value(b, a)));
            }
        }
    }

    // Canonical range + strictness: the positive magnitudes over unordered
    // pairs must be exactly {1,...,k}, each once.
    std::vector<OrderedPair> by_magnitude(k + 1, OrderedPair{-1, -1});
    for (ObjectId a = 0; a < n; ++a) {
        for (ObjectId b = a + 1; b < n; ++b) {
            int v = value(a, b);
            OrderedPair oriented = v >= 0 ? OrderedPair{a, b} : OrderedPair{b, a};
            int mag = v >= 0 ? v : -v;
            if (mag < 1 || mag > k) {
                add("canonical-range", {oriented},
                    "s(" + pair_name(oriented, n) + ")=" + std::to_string(mag) +
                        " outside the canonical range {1,...," + std::to_string(k) + "}");
                continue;
            }
            if (by_magnitude[mag].first >= 0) {
                add("strictness", {by_magnitude[mag], oriented},
                    "pairs " + pair_name(by_magnitude[mag], n) + " and " + pair_name(oriented, n) +
                        " share intensity " + std::to_string(mag));
            } else {
                by_magnitude[mag] = oriented;
            }
        }
    }

    // Chain condition, sharpened to strict inequality: distinct pairs never
    // share a value, so a pair spanning a chain must strictly outrank the
    // pairs it contains.
    for (ObjectId a = 0; a < n; ++a) {
        for (ObjectId b = 0; b < n; ++b) {
            for (ObjectId c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                int ab = value(a, b), bc = value(b, c);
                if (ab > 0 && bc > 0 && value(a, c) <= std::max(ab, bc)) {
                    add("chain-condition", {{a, b}, {b, c}, {a, c}},
                        "s(" + pair_name({a, c}, n) + ")=" + std::to_string(value(a, c)) +
                            " <= max(s(" + pair_name({a, b}, n) + ")=" + std::to_string(ab) +
                            ", s(" + pair_name({b, c}, n) + ")=" + std::to_string(bc) + ")");
                }
            }
        }
    }
    return report;
}

PreferenceOrder induced_preference(const CanonicalIntensity &s) {
    // Positive part of a valid relation is a transitive tournament, so the
    // number of wins determines each object's position.
    PreferenceOrder order;
    order.ranking.assign(s.n, -1);
    for (ObjectId a = 0; a < s.n; ++a) {
        int wins = 0;
        for (ObjectId b = 0; b < s.n; ++b) {
            if (a != b && s.value(a, b) > 0) ++wins;
        }
        int pos = s.n - 1 - wins;
        if (order.ranking[pos] != -1) {
            throw std::invalid_argument("relation does not induce a total order");
        }
        order.ranking[pos] = a;
    }
    return order;
}

CanonicalIntensity intensity_from_ranking(const std::vector<OrderedPair> &pairs, int n) {
    const int k = pair_count(n);
    if (static_cast<int>(pairs.size()) != k) {
        throw std::invalid_argument("ranking must list all " + std::to_string(k) +
                                    " pairs, got " + std::to_string(pairs.size()));
    }
    RawIntensityMap raw;
    int rank = k;
    for (const OrderedPair &p : pairs) {
        if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n || p.first == p.second) {
            throw std::invalid_argument("bad pair " + pair_name(p, n) + " in ranking");
        }
        if (raw.count(p) || raw.count({p.second, p.first})) {
            throw std::invalid_argument("duplicate pair " + pair_name(p, n) + " in ranking");
        }
        raw[p] = rank;
        raw[{p.second, p.first}] = -rank;
        --rank;
    }

    ValidationReport report = validate_intensity(raw, n);
    if (!report.valid) {
        throw ValidationError("ranking violates intensity axioms: " + report.summary(),
                              std::move(report));
    }

    CanonicalIntensity s;
    s.n = n;
    s.values.assign(n * (n - 1), 0);
    for (const auto &[pair, value] : raw) {
        s.values[pair_index(pair.first, pair.second, n)] = static_cast<std::int8_t>(value);
    }
    return s;
}

std::vector<OrderedPair> ranking_of(const CanonicalIntensity &s) {
    std::vector<OrderedPair> pairs;
    pairs.reserve(s.k());
    for (ObjectId a = 0; a < s.n; ++a) {
        for (ObjectId b = 0; b < s.n; ++b) {
            if (a != b && s.value(a, b) > 0) pairs.push_back({a, b});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const OrderedPair &p, const OrderedPair &q) {
        return s.value(p.first, p.second) > s.value(q.first, q.second);
    });
    return pairs;
}

std::string ranking_line(const CanonicalIntensity &s) {
    std::string out;
    for (const OrderedPair &p : ranking_of(s)) {
        if (!out.empty()) out += '>';
        out += pair_name(p, s.n);
    }
    return out;
}

CanonicalIntensity parse_ranking_line(const std::string &line, int n) {
    std::vector<OrderedPair> pairs;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, '>')) {
        if (token.size() != 2) {
            throw std::invalid_argument("bad pair token '" + token + "' in ranking line");
        }
        ObjectId a = object_from_name(token.substr(0, 1), n);
        ObjectId b = object_from_name(token.substr(1, 1), n);
        if (a < 0 || b < 0) {
            throw std::invalid_argument("unknown object in pair token '" + token + "'");
        }
        pairs.push_back({a, b});
    }
    return intensity_from_ranking(pairs, n);
}

std::string profile_line(const Profile &profile) {
    std::string out;
    for (const CanonicalIntensity &s : profile.agents) {
        if (!out.empty()) out += '|';
        out += ranking_line(s);
    }
    return out;
}

Profile parse_profile_line(const std::string &line, int n) {
    Profile profile;
    profile.n = n;
    std::string part;
    std::istringstream in(line);
    while (std::getline(in, part, '|')) {
        profile.agents.push_back(parse_ranking_line(part, n));
    }
    if (static_cast<int>(profile.agents.size()) != n) {
        throw std::invalid_argument("profile line has " + std::to_string(profile.agents.size()) +
                                    " agents, expected " + std::to_string(n));
    }
    return profile;
}

CanonicalIntensity relabel_objects(const CanonicalIntensity &s, const std::vector<int> &perm) {
    CanonicalIntensity out;
    out.n = s.n;
    out.values.assign(s.values.size(), 0);
    for (ObjectId a = 0; a < s.n; ++a) {
        for (ObjectId b = 0; b < s.n; ++b) {
            if (a == b) continue;
            out.values[pair_index(perm[a], perm[b], s.n)] = s.values[pair_index(a, b, s.n)];
        }
    }
    return out;
}

Profile relabel_profile(const Profile &profile, const std::vector<int> &object_perm,
                        const std::vector<int> &agent_perm) {
    Profile out;
    out.n = profile.n;
    out.agents.resize(profile.agents.size());
    for (size_t i = 0; i < profile.agents.size(); ++i) {
        out.agents[agent_perm[i]] = relabel_objects(profile.agents[i], object_perm);
    }
    return out;
}

}  // namespace ieff
