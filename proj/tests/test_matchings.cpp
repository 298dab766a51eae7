#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "mjack/matchings.hpp"

using namespace mjack;

namespace {

Matching from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    Matching m{n, std::vector<int>(static_cast<std::size_t>(2 * n), -1)};
    for (auto [x, y] : pairs) {
        m.partner[static_cast<std::size_t>(x)] = y;
        m.partner[static_cast<std::size_t>(y)] = x;
    }
    return m;
}

// 1-based plain point i is 0-based i−1, its hat is n + i − 1
int P(int i) { return i - 1; }
int H(int n, int i) { return n + i - 1; }

Matching random_bipartite(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matching m{n, std::vector<int>(static_cast<std::size_t>(2 * n))};
    for (int i = 0; i < n; ++i) {
        m.partner[static_cast<std::size_t>(i)] = n + perm[static_cast<std::size_t>(i)];
        m.partner[static_cast<std::size_t>(n + perm[static_cast<std::size_t>(i)])] = i;
    }
    return m;
}

} // namespace

TEST_CASE("canonical pairs and component types") {
    auto [a1, a2] = canonical_deltas({1});
    CHECK(a1 == a2);
    auto [b1, b2] = canonical_deltas({2});
    CHECK(b2 == from_pairs(2, {{P(1), H(2, 2)}, {P(2), H(2, 1)}}));
    CHECK(lambda_of(b1, b2) == Partition{2});
    for (int n = 1; n <= 6; ++n)
        for (const auto& la : all_partitions(n)) {
            auto [d1, d2] = canonical_deltas(la);
            CHECK(d1.valid());
            CHECK(d2.valid());
            CHECK(d1.is_bipartite());
            CHECK(d2.is_bipartite());
            CHECK(lambda_of(d1, d2) == la);
            CHECK(lambda_of(d1, d1) == ones(n));
        }
    // two matchings on four points forming one 4-cycle
    auto x = from_pairs(2, {{P(1), H(2, 1)}, {P(2), H(2, 2)}});
    auto y = from_pairs(2, {{P(1), P(2)}, {H(2, 1), H(2, 2)}});
    CHECK(lambda_of(x, y) == Partition{2});
    // the worked example on eight points
    const int n = 4;
    auto e1 = from_pairs(n, {{P(1), H(n, 3)}, {P(3), H(n, 4)}, {P(4), H(n, 1)}, {P(2), H(n, 2)}});
    auto e2 = from_pairs(n, {{P(1), P(3)}, {H(n, 3), H(n, 4)}, {P(4), H(n, 2)}, {P(2), H(n, 1)}});
    CHECK(e1.is_bipartite());
    CHECK(!e2.is_bipartite());
    CHECK(lambda_of(e1, e2) == Partition{2, 2});
    CHECK(lambda_of(e2, e1) == Partition{2, 2});
}

TEST_CASE("enumeration sizes") {
    long dfact = 1;
    long fact = 1;
    for (int n = 1; n <= 6; ++n) {
        dfact *= 2 * n - 1;
        fact *= n;
        long all = 0, bip = 0;
        for_each_matching(n, false, [&](const Matching& m) {
            CHECK(m.valid());
            ++all;
        });
        for_each_matching(n, true, [&](const Matching& m) {
            CHECK(m.is_bipartite());
            ++bip;
        });
        CHECK(all == dfact);
        CHECK(bip == fact);
    }
}

TEST_CASE("small counts") {
    CHECK(count_a({2}, {2}, {2}, false) == 1);
    CHECK(count_a({2}, {2}, {2}, true) == 0);
    CHECK(count_a({1}, {1}, {1}, false) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& m : all_partitions(n))
                CHECK(count_a(l, m, ones(n), true) == (l == m ? 1 : 0));
    CHECK_THROWS_AS(count_table(7, false), GuardExceeded);
    CHECK_THROWS_AS(count_a({7}, {7}, {7}, false), GuardExceeded);
}

TEST_CASE("count tables: totals, symmetry, serial vs parallel") {
    long dfact = 1, fact = 1;
    for (int n = 1; n <= 5; ++n) {
        dfact *= 2 * n - 1;
        fact *= n;
        auto a = count_table(n, false, Exec::Serial);
        auto at = count_table(n, true, Exec::Serial);
        CHECK(a == count_table(n, false, Exec::Parallel));
        CHECK(at == count_table(n, true, Exec::Parallel));
        const std::size_t d = a.dim();
        for (std::size_t l = 0; l < d; ++l) {
            std::uint64_t sa = 0, st = 0;
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t v = 0; v < d; ++v) {
                    sa += a.at(l, m, v);
                    st += at.at(l, m, v);
                    CHECK(at.at(l, m, v) == at.at(l, v, m));
                }
            CHECK(sa == static_cast<std::uint64_t>(dfact));
            CHECK(st == static_cast<std::uint64_t>(fact));
        }
    }
}

TEST_CASE("counts do not depend on the reference pair") {
    std::mt19937 rng(12345);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            auto d1 = random_bipartite(n, rng);
            auto d2 = random_bipartite(n, rng);
            const Partition la = lambda_of(d1, d2);
            for (const auto& m : all_partitions(n))
                for (const auto& v : all_partitions(n)) {
                    CHECK(count_a(d1, d2, m, v, false) == count_a(la, m, v, false));
                    CHECK(count_a(d1, d2, m, v, true) == count_a(la, m, v, true));
                }
        }
}

TEST_CASE("specializations and multiplicativity") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(verify_b01(n).passed());
        CHECK(verify_comb_multiplicativity(n).passed());
    }
}
