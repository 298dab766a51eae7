#include "doctest.h"

#include <filesystem>

#include "mjack/cache.hpp"
#include "mjack/symfunc.hpp"

using namespace mjack;

namespace {
UniPoly apoly(std::vector<long> c) {
    std::vector<Rational> q;
    for (long x : c)
        q.emplace_back(x);
    return UniPoly(q, Var::Alpha);
}
RatFunc ar(std::vector<long> c) { return RatFunc(apoly(std::move(c))); }

IntMatrix make(std::vector<std::vector<long>> rows) {
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}
} // namespace

TEST_CASE("power sums in monomials") {
    // p_{11} = m_{2} + 2 m_{11}
    const auto& p = powersum_in_monomial(2);
    CHECK(p == make({{2, 1}, {0, 1}}));
    // p_{21} = m_3 + m_{21}
    const auto& p3 = powersum_in_monomial(3);
    CHECK(p3(1, partition_index(Partition{3})) == 1);
    CHECK(p3(1, partition_index(Partition{2, 1})) == 1);
    CHECK(p3(0, partition_index(Partition{1, 1, 1})) == 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(to_rational(powersum_in_monomial(n)) * monomial_in_powersum(n) ==
              QMatrix::identity(partition_count(n)));
}

TEST_CASE("elementary functions via Newton") {
    // e_2 = (p_11 − p_2)/2
    auto e2 = elementary_to_powersum(Partition{2});
    CHECK(e2.coeff(Partition{1, 1}) == RatFunc(Rational(1, 2), Var::Alpha));
    CHECK(e2.coeff(Partition{2}) == RatFunc(Rational(-1, 2), Var::Alpha));
    // e_n in monomials is m_{1^n}
    for (int n = 1; n <= 6; ++n) {
        auto en = elementary_to_powersum(Partition{n});
        CHECK(en == monomial_to_powersum(ones(n)));
    }
}

TEST_CASE("monomials in elementary functions") {
    auto u = monomial_in_elementary(3);
    CHECK(u.rows == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(u.cols == std::vector<Partition>{{1, 1, 1}, {2, 1}, {3}});
    CHECK(u.entries == make({{1, -3, 3}, {0, 1, -3}, {0, 0, 1}}));
    for (int r = 1; r <= 7; ++r)
        CHECK(is_upper_unitriangular(monomial_in_elementary(r).entries));
    CHECK(f_order(5) ==
          std::vector<Partition>{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
}

TEST_CASE("small Jack polynomials") {
    auto j2 = jack(Partition{2});
    CHECK(j2.coeff(Partition{1, 1}) == ar({1}));
    CHECK(j2.coeff(Partition{2}) == ar({0, 1}));
    auto j11 = jack(Partition{1, 1});
    CHECK(j11.coeff(Partition{1, 1}) == ar({1}));
    CHECK(j11.coeff(Partition{2}) == ar({-1}));
    CHECK(jack_norm(Partition{2}) == ar({0, 0, 2, 2}));
    CHECK(jack(Partition{1}).coeff(Partition{1}) == ar({1}));
}

TEST_CASE("Jack orthogonality, norms and triangularity") {
    for (int n = 1; n <= 6; ++n) {
        auto jd = JackStore::instance().degree(n);
        const auto& parts = all_partitions(n);
        for (std::size_t a = 0; a < parts.size(); ++a) {
            CHECK(inner_alpha(jd->powersum[a], jd->powersum[a]) == jack_norm(parts[a]));
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                CHECK(inner_alpha(jd->powersum[a], jd->powersum[b]).is_zero());
            // monomial support dominated by θ; leading coefficient ∏(α a + l + 1)
            UniPoly lead = apoly({1});
            const auto& th = parts[a];
            for (int i = 0; i < th.length(); ++i)
                for (int j = 0; j < th[static_cast<std::size_t>(i)]; ++j)
                    lead *= apoly({leg_length(th, i, j) + 1, arm_length(th, i, j)});
            CHECK(jd->monomial[a][a] == RatFunc(lead));
            for (std::size_t mu = 0; mu < parts.size(); ++mu)
                if (!dominated_by(parts[mu], th))
                    CHECK(jd->monomial[a][mu].is_zero());
            CHECK(jd->monomial[a][0] == RatFunc(Rational(factorial(n)), Var::Alpha));
        }
        // J_{1^n} = n! e_n
        auto en = elementary_to_powersum(Partition{n});
        en *= RatFunc(Rational(factorial(n)), Var::Alpha);
        CHECK(jd->powersum[0] == en);
    }
}

TEST_CASE("Jack cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "mjack-test-cache";
    std::filesystem::remove_all(dir);
    auto jd = compute_jack_degree(4);
    save_jack_cache(dir, jd);
    auto back = load_jack_cache(dir, 4);
    REQUIRE(back);
    CHECK(back->powersum == jd.powersum);
    CHECK(back->monomial == jd.monomial);
    CHECK(!load_jack_cache(dir, 5));
    // tamper with the body: hash check must reject it
    auto text = serialize_jack_degree(jd);
    auto pos = text.find("\"n\":4");
    REQUIRE(pos != std::string::npos);
    text[pos + 4] = '5';
    CHECK(!deserialize_jack_degree(text, 4));
    CHECK(!deserialize_jack_degree(serialize_jack_degree(jd), 3));
    std::filesystem::remove_all(dir);
}
