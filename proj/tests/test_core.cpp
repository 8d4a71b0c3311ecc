#include <doctest.h>

#include <random>

#include "bipdeg/core.hpp"
#include "brute.hpp"

using namespace bipdeg;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("normalize sorts and strips zeros") {
    const std::vector<int> a{1, 2, 2, 1};
    auto n1 = normalize(a);
    CHECK(n1.sequence == DegreeSequence{2, 2, 1, 1});
    CHECK(n1.zeros_dropped == 0);

    const std::vector<int> b{2, 0, 2, 2, 0};
    auto n2 = normalize(b);
    CHECK(n2.sequence == DegreeSequence{2, 2, 2});
    CHECK(n2.zeros_dropped == 2);

    const std::vector<int> c{3, -1};
    CHECK_THROWS_AS(normalize(c), InvalidInput);
}

TEST_CASE("DegreeSequence validates order and sign") {
    CHECK_THROWS_AS(DegreeSequence({1, 2}), InvalidInput);
    CHECK_THROWS_AS(DegreeSequence({2, -1}), InvalidInput);
    DegreeSequence d{3, 2, 2, 1, 0};
    CHECK(d.weight() == 8);
    CHECK(d.max() == 3);
    CHECK(d.min() == 0);
    CHECK_FALSE(d.zero_free());
    CHECK(d.to_string() == "(3,2,2,1,0)");
}

TEST_CASE("Partition canonical form") {
    CHECK(P({1, 0, 3, 2}).vec() == std::vector<int>{3, 2, 1});
    CHECK(P({}).length() == 0);
    CHECK(P({2, 2}).part(5) == 0);
    CHECK_THROWS_AS(P({1, -2}), InvalidInput);
}

TEST_CASE("is_graphical examples") {
    CHECK(is_graphical(DegreeSequence{1, 1}));
    CHECK_FALSE(is_graphical(DegreeSequence{3, 3, 1, 1}));
    CHECK(is_graphical(DegreeSequence{3, 3, 3, 3}));
    CHECK(is_graphical(DegreeSequence{}));
    CHECK_FALSE(is_graphical(DegreeSequence{1}));
    CHECK_FALSE(is_graphical(DegreeSequence{2, 1}));
}

TEST_CASE("is_graphical agrees with building every graph, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto& census = brute::cached_census(n);
        // every nonincreasing zero-free sequence with terms in [1, n]
        std::vector<int> d(static_cast<std::size_t>(n));
        std::function<void(int, int)> rec = [&](int k, int cap) {
            if (k == n) {
                const bool expect = census.graphical.count(d) > 0;
                CHECK(is_graphical(DegreeSequence(d)) == expect);
                return;
            }
            for (int v = cap; v >= 1; --v) {
                d[static_cast<std::size_t>(k)] = v;
                rec(k + 1, v);
            }
        };
        rec(0, n);
    }
}

TEST_CASE("complement examples and involution") {
    CHECK(complement(DegreeSequence{3, 3, 3, 3}) == DegreeSequence{0, 0, 0, 0});
    CHECK(complement(DegreeSequence{2, 2, 2, 2, 2, 2}) == DegreeSequence{3, 3, 3, 3, 3, 3});
    CHECK(complement(DegreeSequence{1, 1}) == DegreeSequence{0, 0});
    CHECK(complement(DegreeSequence{2, 1, 0}) == DegreeSequence{2, 1, 0});
    CHECK_THROWS_AS(complement(DegreeSequence{2, 1}), InvalidInput);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int& x : v) x = std::uniform_int_distribution<int>(0, n - 1)(rng);
        DegreeSequence d(brute::sorted_desc(v));
        CHECK(complement(complement(d)) == d);
    }
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(P({3, 3, 3})) == P({3, 3, 3}));
    CHECK(conjugate(P({3, 2})) == P({2, 2, 1}));
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
}

TEST_CASE("conjugate matches its definition and is an involution") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20000; ++t) {
        const auto p = brute::random_partition(rng, 15, 15);
        const Partition c = conjugate(P(p));
        CHECK(c.vec() == brute::conjugate(p));
        CHECK(c.weight() == P(p).weight());
        CHECK(conjugate(c) == P(p));
    }
}

TEST_CASE("dominates examples") {
    CHECK(dominates(P({4, 2}), P({3, 3})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK(dominates(P({2, 2, 1}), P({2, 2, 1})));
    CHECK(dominates(P({}), P({})));
    CHECK(dominates(P({3}), P({1, 1, 1})));
    CHECK_THROWS_AS(dominates(P({2}), P({1})), InvalidInput);
}

TEST_CASE("domination is reflexive and transitive on sampled triples") {
    std::mt19937_64 rng(13);
    // Partitions of a fixed weight: cut random partitions down to weight w.
    auto of_weight = [&](int w) {
        std::vector<int> parts;
        while (w > 0) {
            const int x = std::uniform_int_distribution<int>(1, w)(rng);
            parts.push_back(x);
            w -= x;
        }
        return P(parts);
    };
    int transitive_cases = 0;
    for (int t = 0; t < 20000; ++t) {
        const int w = std::uniform_int_distribution<int>(0, 12)(rng);
        const Partition p = of_weight(w), q = of_weight(w), r = of_weight(w);
        CHECK(dominates(p, p));
        if (dominates(p, q) && dominates(q, r)) {
            ++transitive_cases;
            CHECK(dominates(p, r));
        }
    }
    CHECK(transitive_cases > 100);
}

TEST_CASE("gale_ryser examples") {
    CHECK(gale_ryser(P({3, 3, 3}), P({3, 3, 3})));
    CHECK_FALSE(gale_ryser(P({2, 2}), P({3, 1})));
    CHECK(gale_ryser(P({2, 1, 1}), P({2, 2})));
    CHECK(gale_ryser(P({}), P({})));
    CHECK_THROWS_AS(gale_ryser(P({2}), P({1})), InvalidInput);
}

TEST_CASE("gale_ryser agrees with exhaustive bipartite search and is symmetric") {
    std::mt19937_64 rng(17);
    int realizable = 0;
    for (int t = 0; t < 20000; ++t) {
        const int la = std::uniform_int_distribution<int>(1, 5)(rng);
        const int lb = std::uniform_int_distribution<int>(1, 8 - la)(rng);
        std::vector<int> a(static_cast<std::size_t>(la)), b(static_cast<std::size_t>(lb));
        for (int& x : a) x = std::uniform_int_distribution<int>(1, lb)(rng);
        for (int& x : b) x = std::uniform_int_distribution<int>(1, la)(rng);
        a = brute::sorted_desc(a);
        b = brute::sorted_desc(b);
        const Partition pa = P(a), pb = P(b);
        if (pa.weight() != pb.weight()) continue;
        const bool expect = brute::bipartite_realizable(a, b);
        realizable += expect;
        CHECK(gale_ryser(pa, pb) == expect);
        CHECK(gale_ryser(pb, pa) == expect);
        CHECK(gale_ryser_sorted(a, b) == expect);
    }
    CHECK(realizable > 100);
}

TEST_CASE("multiset_difference") {
    DegreeSequence d{3, 3, 2, 2, 1, 1};
    CHECK(multiset_difference(d, P({3, 2, 1})) == P({3, 2, 1}));
    CHECK(multiset_difference(d, P({})) == P({3, 3, 2, 2, 1, 1}));
    CHECK_THROWS_AS(multiset_difference(d, P({3, 3, 3})), InvalidInput);
}
