#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trisphom/lattices.hpp"
#include "trisphom/poset.hpp"

using trisphom::BitRelation;
using trisphom::FinitePoset;
using trisphom::PosetKind;

namespace {

// Random strict order compatible with the index order, as a closure.
BitRelation random_relation(int n, double density, std::mt19937& rng) {
    BitRelation less(n);
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) less.set(i, j);
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (!less.get(i, j)) continue;
            for (int k = j + 1; k < n; ++k) {
                if (less.get(j, k)) less.set(i, k);
            }
        }
    }
    return less;
}

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

}  // namespace

TEST_CASE("bit relation primitives", "[poset]") {
    BitRelation r(130);  // spans multiple 64-bit words
    r.set(0, 5);
    r.set(0, 127);
    r.set(64, 127);
    CHECK(r.get(0, 5));
    CHECK(r.get(0, 127));
    CHECK_FALSE(r.get(5, 0));
    CHECK(r.rows_intersect(0, 64));        // both reach 127
    CHECK_FALSE(r.rows_intersect(5, 64));  // row 5 empty
    CHECK(r.row_subset(64, 0));            // {127} inside {5,127}
    CHECK_FALSE(r.row_subset(0, 64));

    const BitRelation t = r.transposed();
    CHECK(t.get(5, 0));
    CHECK(t.get(127, 64));
    CHECK_FALSE(t.get(0, 5));
}

TEST_CASE("partition lattice sizes match the Stirling oracle", "[poset]") {
    // S(n,k) via the standard recurrence, computed here independently.
    std::map<std::pair<int, int>, long long> stirling{{{0, 0}, 1}};
    for (int n = 1; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            const long long with_prev =
                k > 0 ? stirling[{n - 1, k - 1}] : 0;
            stirling[{n, k}] = with_prev + k * stirling[{n - 1, k}];
        }
    }

    for (int n : {3, 4, 5, 6}) {
        const FinitePoset poset = trisphom::build_reduced_partition_lattice(n);
        long long expected_total = 0;
        for (int blocks = 2; blocks <= n - 1; ++blocks) {
            expected_total += stirling[{n, blocks}];
        }
        CHECK(poset.size() == expected_total);

        // rank r holds the partitions with n - r blocks.
        std::map<int, long long> by_rank;
        for (int i = 0; i < poset.size(); ++i) ++by_rank[poset.rank(i)];
        for (int r = 1; r <= n - 2; ++r) {
            CHECK(by_rank[r] == stirling[{n, n - r}]);
        }
    }
}

TEST_CASE("subset lattice sizes and ranks", "[poset]") {
    const FinitePoset poset = trisphom::build_reduced_subset_lattice(5);
    CHECK(poset.size() == 30);
    std::map<int, int> by_rank;
    for (int i = 0; i < poset.size(); ++i) ++by_rank[poset.rank(i)];
    CHECK(by_rank[1] == 5);
    CHECK(by_rank[2] == 10);
    CHECK(by_rank[3] == 10);
    CHECK(by_rank[4] == 5);

    CHECK(poset.index_of("{1}") == 0);  // sorted by (rank, label)
    CHECK(poset.index_of("{9}") == -1);
}

TEST_CASE("lattice construction rejects tiny ground sets", "[poset]") {
    CHECK_THROWS_AS(trisphom::build_reduced_partition_lattice(2),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::build_reduced_subset_lattice(1),
                    std::invalid_argument);
}

TEST_CASE("ordering is refinement / inclusion", "[poset]") {
    const FinitePoset pi4 = trisphom::build_reduced_partition_lattice(4);
    const int fine = pi4.index_of("{1}|{2}|{3,4}");
    const int coarse = pi4.index_of("{1,2}|{3,4}");
    const int other = pi4.index_of("{1,3}|{2,4}");
    REQUIRE(fine >= 0);
    REQUIRE(coarse >= 0);
    REQUIRE(other >= 0);
    CHECK(pi4.less(fine, coarse));
    CHECK_FALSE(pi4.less(coarse, fine));
    CHECK_FALSE(pi4.less(fine, other));
    CHECK_FALSE(pi4.less(fine, fine));

    const FinitePoset l4 = trisphom::build_reduced_subset_lattice(4);
    CHECK(l4.less(l4.index_of("{1}"), l4.index_of("{1,3}")));
    CHECK_FALSE(l4.less(l4.index_of("{2}"), l4.index_of("{1,3}")));
}

TEST_CASE("covers are the transitive reduction", "[poset]") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const BitRelation less = random_relation(n, 0.3, rng);
        const FinitePoset poset(PosetKind::explicit_, n, numbered_labels(n),
                                less);

        // Brute-force reduction: (i, j) is a cover iff i < j with nothing
        // strictly between.
        std::vector<std::pair<int, int>> expected;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!less.get(i, j)) continue;
                bool between = false;
                for (int k = 0; k < n && !between; ++k) {
                    between = less.get(i, k) && less.get(k, j);
                }
                if (!between) expected.emplace_back(i, j);
            }
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::pair<int, int>> actual = poset.covers();
        std::sort(actual.begin(), actual.end());
        CHECK(actual == expected);

        // Ranks are heights: strictly increasing along covers, 0 at minima.
        for (const auto& [i, j] : poset.covers()) {
            CHECK(poset.rank(i) < poset.rank(j));
        }
    }
}

TEST_CASE("poset constructor enforces its invariants", "[poset]") {
    // Not a linear extension: 1 < 0 by index.
    BitRelation backwards(2);
    backwards.set(1, 0);
    CHECK_THROWS_AS(FinitePoset(PosetKind::explicit_, 2, numbered_labels(2),
                                backwards),
                    std::invalid_argument);

    // Not transitive: 0 < 1 < 2 without 0 < 2.
    BitRelation intransitive(3);
    intransitive.set(0, 1);
    intransitive.set(1, 2);
    CHECK_THROWS_AS(FinitePoset(PosetKind::explicit_, 3, numbered_labels(3),
                                intransitive),
                    std::invalid_argument);

    // Duplicate labels.
    BitRelation empty_rel(2);
    const std::vector<std::string> twice{"x", "x"};
    CHECK_THROWS_AS(FinitePoset(PosetKind::explicit_, 2, twice, empty_rel),
                    std::invalid_argument);
}

TEST_CASE("chain enumeration agrees with a counting oracle", "[poset]") {
    std::mt19937 rng(911);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const BitRelation less = random_relation(n, 0.25, rng);
        const FinitePoset poset(PosetKind::explicit_, n, numbered_labels(n),
                                less);

        // DP oracle: chains ending at v, by length.
        std::vector<std::map<int, long long>> ending(n);
        for (int v = 0; v < n; ++v) {
            ending[v][1] = 1;
            for (int u = 0; u < v; ++u) {
                if (!less.get(u, v)) continue;
                for (const auto& [len, count] : ending[u]) {
                    ending[v][len + 1] += count;
                }
            }
        }
        std::map<int, long long> by_length;
        for (int v = 0; v < n; ++v) {
            for (const auto& [len, count] : ending[v]) {
                by_length[len] += count;
            }
        }

        const auto chains = trisphom::enumerate_chains(poset);
        std::map<int, long long> observed;
        for (const auto& chain : chains) {
            ++observed[static_cast<int>(chain.size())];
            // Every chain is strictly ascending and totally ordered.
            for (std::size_t a = 0; a < chain.size(); ++a) {
                for (std::size_t b = a + 1; b < chain.size(); ++b) {
                    CHECK(poset.less(chain[a], chain[b]));
                }
            }
        }
        CHECK(observed == by_length);

        // Lexicographic emission order.
        CHECK(std::is_sorted(chains.begin(), chains.end()));
    }
}

TEST_CASE("maximal chain count of the partition lattice", "[poset]") {
    // The full lattice has n! (n-1)! / 2^(n-1) maximal chains; removing the
    // bounds keeps them in bijection with the maximal chains here.
    for (int n : {4, 5}) {
        const FinitePoset poset = trisphom::build_reduced_partition_lattice(n);
        const auto chains = trisphom::enumerate_chains(poset);
        long long maximal = 0;
        for (const auto& chain : chains) {
            if (static_cast<int>(chain.size()) == n - 2) ++maximal;
        }
        long long expected = 1;
        for (int i = 2; i <= n; ++i) expected *= i;        // n!
        for (int i = 2; i <= n - 1; ++i) expected *= i;    // (n-1)!
        for (int i = 1; i <= n - 1; ++i) expected /= 2;    // 2^(n-1)
        CHECK(maximal == expected);
    }
}

TEST_CASE("upper sets are the strict successors", "[poset]") {
    const FinitePoset l3 = trisphom::build_reduced_subset_lattice(3);
    const int one = l3.index_of("{1}");
    const auto upper = l3.upper_set(one);
    std::vector<int> expected{l3.index_of("{1,2}"), l3.index_of("{1,3}")};
    std::sort(expected.begin(), expected.end());
    CHECK(upper == expected);
}
