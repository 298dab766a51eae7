#include "doctest.h"

#include <functional>

#include "mjack/connection.hpp"

using namespace mjack;

namespace {

IntPoly ip(std::vector<long> c) {
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return IntPoly(v);
}

} // namespace

TEST_CASE("small coefficients") {
    CHECK(c_coeff({1}, {1}, {1}) == ip({1}));
    CHECK(c_coeff({2}, {2}, {2}) == ip({0, 1}));
    CHECK(c_coeff({2}, {1, 1}, {2}) == ip({1}));
    CHECK(c_coeff({1, 1}, {2}, {2}) == ip({1, 1}));
    CHECK_THROWS_AS(c_coeff({2, 1}, {3}, {1, 1}), std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& m : all_partitions(n))
                CHECK(c_coeff(l, m, ones(n)) == (l == m ? ip({1}) : IntPoly{}));
}

TEST_CASE("serial and parallel tables agree and match single evaluations") {
    for (int n = 1; n <= 5; ++n) {
        auto serial = compute_coeff_table(n, Exec::Serial);
        auto parallel = compute_coeff_table(n, Exec::Parallel);
        CHECK(serial == parallel);
        CHECK(*coeff_table(n) == serial);
        const auto& parts = all_partitions(n);
        for (std::size_t l = 0; l < parts.size(); ++l)
            for (std::size_t m = 0; m < parts.size(); ++m)
                CHECK(serial.at(l, m, m) == c_coeff(parts[l], parts[m], parts[m]));
    }
}

TEST_CASE("symmetries of the defining sum") {
    for (int n = 1; n <= 4; ++n) {
        const auto& parts = all_partitions(n);
        const auto table = coeff_table(n);
        for (const auto& l : parts)
            for (const auto& m : parts)
                for (const auto& v : parts) {
                    CHECK(table->at(l, m, v) == table->at(l, v, m));
                    const RatFunc base = c_normalized(l, m, v);
                    CHECK(c_normalized(m, l, v) == base);
                    CHECK(c_normalized(v, m, l) == base);
                    CHECK(c_normalized(m, v, l) == base);
                }
    }
}

TEST_CASE("marginals") {
    CHECK(marginal({4, 1}, {2, 1, 1, 1}, 3) == ip({6}));
    CHECK(marginal({2}, {2}, 1) == ip({0, 1}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& m : all_partitions(n)) {
                CHECK(marginal(l, m, n) == (l == m ? ip({1}) : IntPoly{}));
                for (int len = 1; len <= n; ++len) {
                    auto mc = marginal(l, m, len);
                    CHECK(mc.nonnegative());
                    CHECK((mc.is_zero() || mc.degree() <= n - len + l.length() - m.length()));
                }
            }
    CHECK_THROWS_AS(marginal({2}, {2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(marginal({2}, {2}, 3), std::invalid_argument);
}

TEST_CASE("top coefficients from marginals") {
    CHECK(top_coeff_via_marginal({3}, {3}) == 4);
    CHECK(top_coeff_via_marginal({1, 1, 1}, {2, 1}) == 3);
    CHECK(top_coeff_via_marginal({1}, {1}) == 1);
    // rows pi, columns rho, both listed [3], [2,1], [1^3]
    const std::vector<Partition> order{{3}, {2, 1}, {1, 1, 1}};
    const long expected[3][3] = {{4, 1, 0}, {6, 4, 3}, {1, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(top_coeff_via_marginal(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(i)]) ==
                  expected[i][j]);
    // independence of the padding size
    for (int r = 1; r <= 3; ++r)
        for (const auto& rho : all_partitions(r))
            for (const auto& pi : all_partitions(r)) {
                const int n0 = top_coeff_min_size(rho, pi);
                CHECK(top_coeff_via_marginal(rho, pi, n0) == top_coeff_via_marginal(rho, pi, n0 + 1));
            }
}

TEST_CASE("multi-parameter coefficients") {
    CHECK(c_multi({2}, {{2}, {2}, {2}}) == ip({1, 1, 1}));
    CHECK(c_multi({1}, {{1}, {1}, {1}}) == ip({1}));
    CHECK(c_multi({3}, {{2, 1}, {3}}) == c_coeff({3}, {2, 1}, {3}));
    for (int n = 1; n <= 4; ++n) {
        const auto& parts = all_partitions(n);
        for (const auto& l : parts)
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts)
                        CHECK(c_multi(l, {a, b, c}) == c_multi_direct(l, {a, b, c}));
    }
    const std::vector<Partition> four{{2, 1}, {3}, {1, 1, 1}, {2, 1}};
    CHECK(c_multi({2, 1}, four) == c_multi_direct({2, 1}, four));
    CHECK(c_multi({3}, four) == c_multi_direct({3}, four));
}

TEST_CASE("cumulants") {
    CHECK(cumulant_d({1}, {1}, {1}) == ip({1}));
    CHECK(cumulant_d({1, 1}, {1, 1}, {1, 1}).is_zero());
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& m : all_partitions(n))
                for (const auto& v : all_partitions(n)) {
                    const IntPoly d = cumulant_d(l, m, v);
                    if (l.length() == 1)
                        CHECK(d == c_coeff(l, m, v));
                    CHECK(d.to_unipoly() == cumulant_d_log(l, m, v));
                }
}

TEST_CASE("h coefficients") {
    auto h = h_coeff({2}, {2}, {2});
    CHECK(h.h == ip({0, 1}).to_unipoly());
    CHECK(h.integral);
    CHECK(h_coeff({1}, {1}, {1}).h == ip({1}).to_unipoly());
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& m : all_partitions(n))
                for (const auto& v : all_partitions(n)) {
                    auto hc = h_coeff(l, m, v);
                    if (l == Partition{n})
                        CHECK(hc.integral);
                    CHECK(hc.scaled.to_unipoly() * Rational(n) == hc.h * Rational(z_factor(l)));
                }
    auto multi = h_coeff({3}, {{2, 1}, {3}, {2, 1}});
    CHECK(multi.integral);
}

TEST_CASE("row sums and multiplicativity") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : all_partitions(n))
            for (const auto& v : all_partitions(n))
                CHECK(check_row_sum(l, v));
    for (int n = 1; n <= 3; ++n) {
        CHECK(check_multiplicativity(n).passed());
        CHECK(check_marginal_multiplicativity(n).passed());
    }
}
