#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ieff/enumerate.hpp"
#include "ieff/model.hpp"

using namespace ieff;

namespace {

RawIntensityMap raw_from_positive(const std::map<std::pair<char, char>, int> &positive, int n) {
    RawIntensityMap raw;
    for (const auto &[pair, value] : positive) {
        const ObjectId a = pair.first - 'a';
        const ObjectId b = pair.second - 'a';
        raw[{a, b}] = value;
        raw[{b, a}] = -value;
    }
    (void)n;
    return raw;
}

bool order_is(const PreferenceOrder &order, const std::string &names) {
    if (order.n() != static_cast<int>(names.size())) return false;
    for (int i = 0; i < order.n(); ++i) {
        if (object_name(order.ranking[i], order.n()) != std::string(1, names[i])) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("pair_index is a lexicographic bijection") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> seen;
        for (ObjectId a = 0; a < n; ++a) {
            for (ObjectId b = 0; b < n; ++b) {
                if (a != b) seen.push_back(pair_index(a, b, n));
            }
        }
        // Lexicographic (a, b) iteration must produce 0, 1, 2, ...
        for (size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == static_cast<int>(i));
    }
}

TEST_CASE("validate_intensity accepts agent 1 of the n=5 counterexample table") {
    const RawIntensityMap raw = raw_from_positive({{{'a', 'e'}, 10},
                                                   {{'a', 'd'}, 9},
                                                   {{'b', 'e'}, 8},
                                                   {{'b', 'd'}, 7},
                                                   {{'a', 'c'}, 6},
                                                   {{'c', 'e'}, 5},
                                                   {{'a', 'b'}, 4},
                                                   {{'b', 'c'}, 3},
                                                   {{'c', 'd'}, 2},
                                                   {{'d', 'e'}, 1}},
                                                  5);
    const ValidationReport report = validate_intensity(raw, 5);
    CHECK(report.valid);
    CHECK(report.violations.empty());
}

TEST_CASE("chain-condition violation is reported with its witness triple") {
    // s(a,b)=2, s(b,c)=1 force s(a,c) > 2; s(a,c)=1 breaks the chain.
    const RawIntensityMap raw =
        raw_from_positive({{{'a', 'b'}, 2}, {{'b', 'c'}, 1}, {{'a', 'c'}, 1}}, 3);
    const ValidationReport report = validate_intensity(raw, 3);
    CHECK_FALSE(report.valid);
    REQUIRE(report.has("chain-condition"));
    for (const Violation &v : report.violations) {
        if (v.axiom != "chain-condition") continue;
        REQUIRE(v.witnesses.size() == 3);
        CHECK(v.witnesses[0] == OrderedPair{0, 1});
        CHECK(v.witnesses[1] == OrderedPair{1, 2});
        CHECK(v.witnesses[2] == OrderedPair{0, 2});
    }
}

TEST_CASE("duplicate positive values are a strictness violation") {
    const RawIntensityMap raw =
        raw_from_positive({{{'a', 'b'}, 2}, {{'b', 'c'}, 2}, {{'a', 'c'}, 3}}, 3);
    const ValidationReport report = validate_intensity(raw, 3);
    CHECK_FALSE(report.valid);
    REQUIRE(report.has("strictness"));
    CHECK_FALSE(report.has("chain-condition"));
    for (const Violation &v : report.violations) {
        if (v.axiom != "strictness") continue;
        REQUIRE(v.witnesses.size() == 2);
        CHECK(v.witnesses[0] == OrderedPair{0, 1});
        CHECK(v.witnesses[1] == OrderedPair{1, 2});
    }
}

TEST_CASE("skew-symmetry and range violations carry witnesses") {
    RawIntensityMap raw = raw_from_positive({{{'a', 'b'}, 2}, {{'b', 'c'}, 1}, {{'a', 'c'}, 3}}, 3);
    raw[{1, 0}] = 2;  // breaks s(b,a) = -s(a,b)
    ValidationReport report = validate_intensity(raw, 3);
    CHECK_FALSE(report.valid);
    CHECK(report.has("skew-symmetry"));

    raw = raw_from_positive({{{'a', 'b'}, 4}, {{'b', 'c'}, 1}, {{'a', 'c'}, 5}}, 3);
    report = validate_intensity(raw, 3);
    CHECK(report.has("canonical-range"));

    raw = raw_from_positive({{{'a', 'b'}, 0}, {{'b', 'c'}, 1}, {{'a', 'c'}, 2}}, 3);
    report = validate_intensity(raw, 3);
    CHECK(report.has("canonical-range"));
}

TEST_CASE("missing entries are an incomplete-map error, not an axiom violation") {
    RawIntensityMap raw = raw_from_positive({{{'a', 'b'}, 2}, {{'b', 'c'}, 1}}, 3);
    try {
        validate_intensity(raw, 3);
        FAIL("expected std::invalid_argument");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("incomplete map") != std::string::npos);
    }
}

TEST_CASE("induced preference orders") {
    const CanonicalIntensity s1 = parse_ranking_line("ac>ab>bc", 3);
    CHECK(order_is(induced_preference(s1), "abc"));

    const CanonicalIntensity agent3 = parse_ranking_line("ae>ad>ac>be>bd>ce>cd>de>ab>bc", 5);
    CHECK(order_is(induced_preference(agent3), "abcde"));

    const CanonicalIntensity s = parse_ranking_line("cb>ca>ab", 3);
    CHECK(order_is(induced_preference(s), "cab"));
}

TEST_CASE("intensity_from_ranking matches the worked n=3 example") {
    const CanonicalIntensity s1 = intensity_from_ranking({{0, 2}, {0, 1}, {1, 2}}, 3);
    CHECK(s1.value(0, 2) == 3);
    CHECK(s1.value(0, 1) == 2);
    CHECK(s1.value(1, 2) == 1);
    CHECK(s1.value(2, 0) == -3);
    CHECK(s1.value(1, 0) == -2);
    CHECK(s1.value(2, 1) == -1);
    CHECK(s1.value(1, 1) == 0);
}

TEST_CASE("intensity_from_ranking rejects bad rankings") {
    // (a,c) spans a > b > c, so it cannot rank below (a,b).
    try {
        intensity_from_ranking({{0, 1}, {0, 2}, {1, 2}}, 3);
        FAIL("expected ValidationError");
    } catch (const ValidationError &e) {
        CHECK(e.report.has("chain-condition"));
    }

    CHECK_THROWS_AS(intensity_from_ranking({{0, 1}, {0, 1}, {1, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(intensity_from_ranking({{0, 1}, {0, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(intensity_from_ranking({{0, 0}, {0, 2}, {1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("the agent-5 completion ranking is valid with the stated order") {
    const CanonicalIntensity s = parse_ranking_line("cd>cb>ed>ca>eb>ad>ea>bd>ab>ce", 5);
    CHECK(order_is(induced_preference(s), "ceabd"));
    CHECK(s.value(2, 4) == 1);  // s(c,e) = 1
    CHECK(s.value(2, 3) == 10);
}

TEST_CASE("ranking round-trips through every enumerated relation at n=3,4") {
    for (int n : {3, 4}) {
        for (const CanonicalIntensity &s : all_intensity_relations(n)) {
            CHECK(intensity_from_ranking(ranking_of(s), n) == s);
            CHECK(parse_ranking_line(ranking_line(s), n) == s);
        }
    }
}

TEST_CASE("induced preference is a strict total order with the chain property") {
    auto check_relation = [](const CanonicalIntensity &s) {
        const PreferenceOrder order = induced_preference(s);
        std::set<ObjectId> distinct(order.ranking.begin(), order.ranking.end());
        REQUIRE(static_cast<int>(distinct.size()) == s.n);
        for (int i = 0; i < s.n; ++i) {
            for (int j = i + 1; j < s.n; ++j) {
                // Earlier position must mean strictly positive intensity.
                CHECK(s.value(order.ranking[i], order.ranking[j]) > 0);
                for (int l = j + 1; l < s.n; ++l) {
                    const ObjectId a = order.ranking[i], b = order.ranking[j],
                                   c = order.ranking[l];
                    CHECK(s.value(a, c) > s.value(a, b));
                    CHECK(s.value(a, c) > s.value(b, c));
                }
            }
        }
    };
    for (int n : {3, 4}) {
        for (const CanonicalIntensity &s : all_intensity_relations(n)) check_relation(s);
    }
    const RelationTable &table = RelationTable::get(5);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        check_relation(table.relation(static_cast<std::uint32_t>(rng() % table.count())));
    }
}

TEST_CASE("per preference order, exactly 2 of the 6 rank assignments are valid at n=3") {
    for (const PreferenceOrder &order : all_preference_orders(3)) {
        std::vector<OrderedPair> pairs;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                pairs.push_back({order.ranking[i], order.ranking[j]});
            }
        }
        std::sort(pairs.begin(), pairs.end());
        int valid = 0;
        do {
            RawIntensityMap raw;
            int rank = 3;
            for (const OrderedPair &p : pairs) {
                raw[p] = rank;
                raw[{p.second, p.first}] = -rank;
                --rank;
            }
            if (validate_intensity(raw, 3).valid) ++valid;
        } while (std::next_permutation(pairs.begin(), pairs.end()));
        CHECK(valid == 2);
    }
}

TEST_CASE("relabeling is an involution under the inverse permutation") {
    const CanonicalIntensity s = parse_ranking_line("cd>cb>ed>ca>eb>ad>ea>bd>ab>ce", 5);
    const std::vector<int> perm = {2, 0, 4, 1, 3};
    std::vector<int> inverse(5);
    for (int i = 0; i < 5; ++i) inverse[perm[i]] = i;
    CHECK(relabel_objects(relabel_objects(s, perm), inverse) == s);
}

TEST_CASE("profile lines round-trip") {
    Profile profile;
    profile.n = 3;
    profile.agents = {parse_ranking_line("ac>ab>bc", 3), parse_ranking_line("ac>bc>ab", 3),
                      parse_ranking_line("ac>ab>bc", 3)};
    CHECK(parse_profile_line(profile_line(profile), 3) == profile);
}

}  // TEST_SUITE
