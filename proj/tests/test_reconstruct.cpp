#include "doctest.h"

#include "json.hpp"
#include "mjack/fh_algebra.hpp"
#include "mjack/reconstruct.hpp"

using namespace mjack;

namespace {

std::string marginal_json(int n) {
    nlohmann::json doc;
    doc["n"] = n;
    doc["entries"] = nlohmann::json::array();
    const auto& parts = all_partitions(n);
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            for (int l = 1; l <= n; ++l)
                doc["entries"].push_back({{"lambda", encode(lambda)},
                                          {"mu", encode(mu)},
                                          {"l", l},
                                          {"poly_b", encode_coeffs(marginal(lambda, mu, l))}});
    return doc.dump();
}

} // namespace

TEST_CASE("condition C2 pairs") {
    const auto p21 = condition_c2_pairs(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0] == std::pair{Partition{1, 1}, 1});
    const auto p53 = condition_c2_pairs(5, 3);
    REQUIRE(p53.size() == 3);
    CHECK(p53[1] == std::pair{Partition{2, 1, 1, 1}, 3});
    CHECK(condition_c2_pairs(4, 3).size() == 3);
    CHECK_THROWS_AS(condition_c2_pairs(3, 3), std::invalid_argument);
}

TEST_CASE("right-hand side needs lower ranks") {
    const auto src = marginals_from_connection(3);
    PartialCoeffTable empty(3);
    CHECK_THROWS_AS(rhs_value(Partition{3}, Partition{3}, Partition{1, 1, 1}, 2, 1, empty, src), std::logic_error);
    const PartialCoeffTable base = base_case(3);
    CHECK_NOTHROW(rhs_value(Partition{3}, Partition{3}, Partition{1, 1, 1}, 2, 1, base, src));
}

TEST_CASE("right-hand side for n = 2") {
    // P = Σ_θ mc^[2]_{θ,1} c^θ_{[2],[1,1]} − c^[2]_{[2],[1,1]} mc^[1,1]_{[1,1],1}.
    const auto src = marginals_from_connection(2);
    const PartialCoeffTable base = base_case(2);
    const IntPoly p = rhs_value(Partition{2}, Partition{2}, Partition{1, 1}, 1, 1, base, src);
    // With only the base case known, c^θ_{[2],[1,1]} = δ and the subtracted term vanishes.
    CHECK(p == marginal(Partition{2}, Partition{2}, 1));
    // The single rank-1 unknown is c^[2]_{[2],[2]} = b times tc = 1.
    CHECK(p == c_coeff(Partition{2}, Partition{2}, Partition{2}));
}

TEST_CASE("solving one stratum") {
    const auto src = marginals_from_connection(2);
    const auto sol = solve_rank(2, 1, base_case(2), src);
    CHECK(sol.at({Partition{2}, Partition{2}, Partition{2}}) == IntPoly({0, 1}));
    CHECK(sol.size() == 4);

    const auto src3 = marginals_from_connection(3);
    for (const auto& [key, poly] : solve_rank(3, 1, base_case(3), src3)) {
        const auto& [lambda, mu, kappa] = key;
        CHECK(kappa.rank() == 1);
        CHECK(poly == c_coeff(lambda, mu, kappa));
    }
}

TEST_CASE("assembled matrices are Q with columns erased") {
    const auto src = marginals_from_connection(4);
    const LabeledMatrix a2 = assemble_rank_matrix(4, 2, src);
    CHECK(a2.entries == matrix_Q(2).entries);
    const LabeledMatrix a3 = assemble_rank_matrix(4, 3, src);
    CHECK(a3.cols == std::vector<Partition>{Partition{3}});
    CHECK(a3.rows.size() == 3);
}

TEST_CASE("reconstruction round trip") {
    const auto one = reconstruct_all(1, marginals_from_connection(1));
    CHECK(one.at(0, 0, 0) == IntPoly::constant(1));
    for (int n = 2; n <= 5; ++n) {
        INFO("n=" << n);
        CHECK(reconstruct_all(n, marginals_from_connection(n), Exec::Serial) == *coeff_table(n));
        CHECK(check_reconstruct(n).passed());
    }
}

TEST_CASE("marginals from JSON") {
    const auto src = marginals_from_json(marginal_json(4));
    CHECK(src.n == 4);
    CHECK(reconstruct_all(4, src) == *coeff_table(4));
}

TEST_CASE("inconsistent marginal sources are rejected") {
    CHECK_THROWS_AS(marginals_from_json("{\"n\": 2, \"entries\": []}"), std::runtime_error);
    CHECK_THROWS_AS(marginals_from_json("not json"), std::runtime_error);

    // Perturb one top marginal: the assembled matrix no longer matches Q.
    auto direct = marginals_from_connection(3);
    MarginalSource bad{3, [direct](const Partition& l, const Partition& m, int len) {
                           IntPoly v = direct.get(l, m, len);
                           if (l == Partition{3} && m == Partition{1, 1, 1} && len == 1)
                               v += IntPoly::constant(1);
                           return v;
                       }};
    CHECK_THROWS_AS(reconstruct_all(3, bad), TheoremViolation);
}
