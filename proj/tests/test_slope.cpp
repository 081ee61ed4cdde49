#include <catch2/catch_amalgamated.hpp>

#include "cabletorus/slope.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

#include <random>
#include <vector>

using namespace cabletorus;
using testutil::from_frac;
using testutil::LSlope;
using testutil::S;
using testutil::SL;
using testutil::to_frac;

TEST_CASE("reduce produces the canonical representative") {
    CHECK(reduce<BigInt>(-2, -4) == S("1/2"));
    CHECK(reduce<BigInt>(-1, 0) == Slope::infinity());
    CHECK(reduce<BigInt>(0, -7) == Slope::zero());
    CHECK(reduce<BigInt>(3, 0) == Slope::infinity());
    CHECK(reduce<BigInt>(-6, 4) == S("-3/2"));
    CHECK(reduce<BigInt>(-2, -4) == reduce<BigInt>(2, 4));
    CHECK_THROWS_AS(reduce<BigInt>(0, 0), std::domain_error);
}

TEST_CASE("slope parsing and formatting") {
    CHECK(S("inf") == Slope::infinity());
    CHECK(S("-inf") == Slope::infinity());
    CHECK(S("-2") == reduce<BigInt>(-2, 1));
    CHECK(S("-2/1") == S("-2"));
    CHECK(S("2/-4") == S("-1/2"));
    CHECK(to_string(S("-1/2")) == "-1/2");
    CHECK(to_string(S("-4/2")) == "-2");
    CHECK(to_string(Slope::infinity()) == "inf");
    CHECK_THROWS_AS(S(""), std::domain_error);
    CHECK_THROWS_AS(S("1/2/3"), std::domain_error);
    CHECK_THROWS_AS(S("a/2"), std::domain_error);
    CHECK_THROWS_AS(S("0/0"), std::domain_error);

    for (oracle::Frac f : oracle::box_slopes(9)) {
        LSlope s = from_frac(f);
        CHECK(cabletorus::parse_slope<long long>(to_string(s)) == s);
    }
}

TEST_CASE("is_edge is the determinant-one test") {
    CHECK(is_edge(S("-2"), S("inf")));
    CHECK(is_edge(S("-3"), S("-5/2")));
    CHECK_FALSE(is_edge(S("-1"), S("-2/5")));

    std::vector<oracle::Frac> box = oracle::box_slopes(8);
    for (oracle::Frac a : box)
        for (oracle::Frac b : box) {
            LSlope s = from_frac(a), t = from_frac(b);
            CHECK(is_edge(s, t) == oracle::edge(a, b));
            CHECK(is_edge(s, t) == is_edge(t, s));
        }
}

TEST_CASE("clockwise intervals follow the circular order") {
    Slope inf = Slope::infinity();
    CHECK(in_clockwise_interval(inf, S("-2"), S("-3"), Closure::open));
    CHECK_FALSE(in_clockwise_interval(S("-5/2"), S("-2"), S("-3"), Closure::open));
    CHECK_FALSE(in_clockwise_interval(S("-2"), S("-2"), S("-3"), Closure::open));
    CHECK(in_clockwise_interval(S("-2"), S("-2"), S("-3"), Closure::left_closed));
    CHECK(in_clockwise_interval(S("-3"), S("-2"), S("-3"), Closure::right_closed));
    CHECK(in_clockwise_interval(S("0"), S("-1"), S("1"), Closure::open));
    CHECK(in_clockwise_interval(S("-3"), inf, S("-1"), Closure::open));
    CHECK_FALSE(in_clockwise_interval(S("0"), inf, S("-1"), Closure::open));
    CHECK_THROWS_AS(in_clockwise_interval(S("0"), S("1"), S("1"), Closure::open), std::domain_error);

    // Strictness: the two open arcs between a and b partition everything else.
    std::vector<oracle::Frac> box = oracle::box_slopes(5);
    for (oracle::Frac a : box)
        for (oracle::Frac b : box) {
            if (a == b) continue;
            for (oracle::Frac x : box) {
                LSlope ls = from_frac(x), la = from_frac(a), lb = from_frac(b);
                bool fwd = in_clockwise_interval(ls, la, lb, Closure::open);
                bool bwd = in_clockwise_interval(ls, lb, la, Closure::open);
                bool endpoint = x == a || x == b;
                CHECK((fwd + bwd + endpoint) == 1);
                CHECK(fwd == oracle::in_cw_open(x, a, b));
            }
        }
}

TEST_CASE("mediant lands between Farey neighbors") {
    CHECK(mediant(S("-1/2"), S("-1/3")) == S("-2/5"));
    CHECK(mediant(S("-3"), Slope::infinity()) == S("-2"));
    CHECK(mediant(S("0"), Slope::infinity()) == S("1"));
    CHECK_THROWS_AS(mediant(S("1/2"), S("1/2")), std::domain_error);

    // Wrap-around representative: the triangle over the edge {-1, -2} on the
    // clockwise side from -1 has apex at infinity.
    CHECK(mediant(S("-1"), S("-2")) == Slope::infinity());
    CHECK(oracle::mediant_scan({-1, 1}, {-2, 1}, 8) == oracle::Frac{1, 0});

    std::vector<oracle::Frac> box = oracle::box_slopes(20);
    for (oracle::Frac a : box)
        for (oracle::Frac b : box) {
            if (a == b || !oracle::edge(a, b)) continue;
            LSlope s = from_frac(a), t = from_frac(b);
            LSlope m = mediant(s, t);
            CHECK(is_edge(s, m));
            CHECK(is_edge(m, t));
            CHECK(in_clockwise_interval(m, s, t, Closure::open));
        }
}

TEST_CASE("shear is a tessellation automorphism fixing infinity") {
    CHECK(shear(S("-1/2"), BigInt(-1)) == S("-3/2"));
    CHECK(shear(Slope::infinity(), BigInt(7)) == Slope::infinity());

    std::vector<oracle::Frac> box = oracle::box_slopes(6);
    for (long long k = -3; k <= 3; ++k)
        for (oracle::Frac a : box)
            for (oracle::Frac b : box) {
                if (a == b) continue;
                LSlope s = from_frac(a), t = from_frac(b);
                LSlope sk = shear(s, k), tk = shear(t, k);
                CHECK(is_edge(s, t) == is_edge(sk, tk));
                if (is_edge(s, t)) CHECK(shear(mediant(s, t), k) == mediant(sk, tk));
            }
}

TEST_CASE("farthest neighbor in an interval matches the exhaustive scan") {
    Slope inf = Slope::infinity();
    CHECK(farthest_neighbor_within(inf, S("-2/5"), true) == S("-1"));
    CHECK(farthest_neighbor_within(S("-1/2"), S("-1"), false) == S("0"));
    CHECK(farthest_neighbor_within(S("-2"), S("-3"), false) == inf);
    CHECK(farthest_neighbor_within(S("-3"), inf, false) == S("-2"));
    CHECK(farthest_neighbor_within(S("-8/3"), S("-2"), true) == S("-5/2"));
    // A neighboring bound is itself the farthest when included.
    CHECK(farthest_neighbor_within(S("-3"), S("-2"), true) == S("-2"));
    CHECK_THROWS_AS(farthest_neighbor_within(S("-3"), S("-3"), true), std::domain_error);

    std::vector<oracle::Frac> box = oracle::box_slopes(6);
    for (oracle::Frac a : box)
        for (oracle::Frac b : box) {
            if (a == b) continue;
            LSlope x = from_frac(a), bound = from_frac(b);
            for (bool include : {false, true}) {
                LSlope got = farthest_neighbor_within(x, bound, include);
                auto want = oracle::farthest_neighbor_scan(a, b, include,
                                                           oracle::scan_box_for({a, b}, 6));
                REQUIRE(want.has_value());
                CHECK(got == from_frac(*want));
            }
        }
}

TEST_CASE("extended gcd identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-2000, 2000);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        auto e = ext_gcd<long long>(a, b);
        CHECK(a * e.u + b * e.v == e.g);
        CHECK(e.g == std::gcd(a, b));
        CHECK(e.g >= 0);
    }
}

TEST_CASE("arithmetic stays exact far beyond word size") {
    // Consecutive Fibonacci ratios are Farey neighbors at any magnitude.
    BigInt f0 = 1, f1 = 1;
    for (int i = 0; i < 300; ++i) {
        BigInt f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
    }
    Slope a(f1, f0);
    Slope b(f0, f1 - f0);
    CHECK(a.num.str().size() > 50);
    CHECK(is_edge(a, b));
    Slope m = mediant(a, b);
    CHECK(is_edge(a, m));
    CHECK(is_edge(m, b));
    CHECK(in_clockwise_interval(m, a, b, Closure::open));
}

TEST_CASE("torus boundary data is validated") {
    TorusBoundary g{S("-1/2"), 2};
    CHECK_NOTHROW(validate(g));
    g.num_dividing_curves = 4;
    CHECK_NOTHROW(validate(g));
    g.num_dividing_curves = 3;
    CHECK_THROWS_AS(validate(g), std::domain_error);
    g.num_dividing_curves = 0;
    CHECK_THROWS_AS(validate(g), std::domain_error);
}
