#include "doctest.h"

#include "mjack/exact.hpp"

using namespace mjack;

namespace {
UniPoly poly(std::vector<long> c, Var v = Var::Alpha) {
    std::vector<Rational> q;
    for (long x : c)
        q.emplace_back(x);
    return UniPoly(q, v);
}
} // namespace

TEST_CASE("polynomial arithmetic") {
    auto p = poly({1, 2, 1});
    auto q = poly({1, 1});
    CHECK(q * q == p);
    auto d = divmod(p, q);
    CHECK(d.quotient == q);
    CHECK(d.remainder.is_zero());
    CHECK(gcd(p, poly({-1, 0, 1})) == q);
    CHECK(pow(q, 3) == poly({1, 3, 3, 1}));
    CHECK(poly({0, 0}).is_zero());
    CHECK(p.eval(2) == 9);
    CHECK_THROWS_AS(divmod(p, UniPoly()), std::domain_error);
    CHECK_THROWS(poly({1}) + poly({1}, Var::B));
}

TEST_CASE("variable shift") {
    auto a = poly({0, 1}); // α
    CHECK(shift_alpha_to_b(a) == poly({1, 1}, Var::B));
    auto p = poly({3, -2, 5, 1});
    CHECK(shift_b_to_alpha(shift_alpha_to_b(p)) == p);
}

TEST_CASE("rational functions are canonical") {
    RatFunc r(poly({-1, 0, 1}), poly({2, 2}));
    CHECK(r.den() == poly({1}));
    CHECK(r.num() == UniPoly({Rational(-1, 2), Rational(1, 2)}, Var::Alpha));
    CHECK(r.is_polynomial());
    RatFunc s = RatFunc(poly({1})) / RatFunc(poly({0, 1}));
    CHECK(!s.is_polynomial());
    CHECK((s * RatFunc(poly({0, 1}))) == RatFunc(poly({1})));
    CHECK((s - s).is_zero());
    CHECK_THROWS_AS(s / RatFunc(Var::Alpha), std::domain_error);
}

TEST_CASE("certification") {
    // α² − α = (b+1)b
    auto c = certify_integer_poly(RatFunc(poly({0, -1, 1})));
    REQUIRE(c);
    CHECK(*c.poly == IntPoly({0, 1, 1}));
    auto bad = certify_integer_poly(RatFunc(poly({1}), poly({0, 1})));
    CHECK(!bad);
    CHECK(bad.failure == CertifyFailure::NonPolynomial);
    auto half = certify_integer_poly(RatFunc(UniPoly({Rational(1, 2)}, Var::Alpha)));
    CHECK(!half);
    CHECK(half.failure == CertifyFailure::NonIntegral);
    CHECK(one_plus_b_pow(2) == IntPoly({1, 2, 1}));
    CHECK(IntPoly({1, 0, 2}).eval(3) == 19);
    CHECK(IntPoly({1, 2}).nonnegative());
    CHECK(!IntPoly({1, -2}).nonnegative());
}

TEST_CASE("coefficient codec") {
    UniPoly p({Rational(1, 2), Rational(0), Rational(-3)}, Var::B);
    auto enc = encode_coeffs(p);
    CHECK(enc == std::vector<std::string>{"1/2", "0", "-3"});
    CHECK(decode_coeffs(enc, Var::B) == p);
    CHECK(encode_coeffs(IntPoly{}).empty());
    CHECK_THROWS(decode_coeffs({"x"}, Var::B));
}
