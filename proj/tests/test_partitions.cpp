#include "doctest.h"

#include <algorithm>
#include <set>

#include "mjack/partitions.hpp"

using namespace mjack;

TEST_CASE("partition basics") {
    Partition p{3, 1, 1};
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.rank() == 2);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p[5] == 0);
    CHECK(Partition(std::vector<int>{1, 3, 0, 1}) == p);
    CHECK_THROWS(Partition(std::vector<int>{2, -1}));
    CHECK(conjugate(p) == Partition{3, 1, 1});
    CHECK(conjugate(Partition{4, 2}) == Partition{2, 2, 1, 1});
    CHECK(z_factor(Partition{2, 1, 1}) == 4);
    CHECK(z_factor(Partition{2, 2}) == 8);
    CHECK(z_factor(Partition{}) == 1);
}

TEST_CASE("partition operations") {
    CHECK(union_of(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
    CHECK(oplus(Partition{3, 1}, Partition{2, 2, 1}) == Partition{5, 3, 1});
    CHECK(minus_one(Partition{3, 1, 1}) == Partition{2});
    CHECK(remove_part(Partition{3, 2, 1}, 2) == Partition{3, 1});
    CHECK_THROWS(remove_part(Partition{3, 1}, 2));
    CHECK(ones(3) == Partition{1, 1, 1});
}

TEST_CASE("partition counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partition_count(n) == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("total order refines dominance and is total") {
    for (int n = 1; n <= 8; ++n) {
        const auto& ps = all_partitions(n);
        CHECK(std::is_sorted(ps.begin(), ps.end(), TotalLess{}));
        CHECK(ps.front() == ones(n));
        CHECK(ps.back() == Partition{n});
        for (const auto& a : ps)
            for (const auto& b : ps) {
                CHECK((total_leq(a, b) || total_leq(b, a)));
                if (dominated_by(a, b))
                    CHECK(total_leq(a, b));
                CHECK(dual_leq(a, b) == total_leq(conjugate(b), conjugate(a)));
            }
        for (std::size_t i = 0; i < ps.size(); ++i)
            CHECK(partition_index(ps[i]) == i);
    }
    CHECK(all_partitions(4) == std::vector<Partition>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}});
    CHECK_THROWS(total_leq(Partition{2}, Partition{3}));
}

TEST_CASE("codec round trip") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_partitions(n))
            CHECK(parse_partition(encode(p)) == p);
    CHECK(encode(Partition{}) == "-");
    CHECK(parse_partition("[3,1]") == Partition{3, 1});
    CHECK(parse_partition("[]").empty());
    CHECK_THROWS(parse_partition("1,3"));
    CHECK_THROWS(parse_partition("2,0"));
    CHECK_THROWS(parse_partition("x"));
}

TEST_CASE("set partitions") {
    const int bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 6; ++n) {
        auto sp = set_partitions(n);
        CHECK(sp.size() == static_cast<std::size_t>(bell[n]));
        for (const auto& s : sp) {
            std::set<int> seen;
            for (const auto& b : s.blocks)
                for (int x : b)
                    CHECK(seen.insert(x).second);
            CHECK(seen.size() == static_cast<std::size_t>(n));
        }
    }
    CHECK(factorial(6) == 720);
}
