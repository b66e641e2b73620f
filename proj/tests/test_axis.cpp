#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kemae/axis.hpp"
#include "kemae/ma_operator.hpp"
#include "kemae/parse.hpp"

using namespace kemae;

namespace {

Polynomial P2(const std::string& text) { return parse_expression(text, {"x1", "x2"}); }
Polynomial U(const std::string& text) { return parse_expression(text, {"t"}); }

}  // namespace

TEST_CASE("binomial_power frozen values") {
    CHECK(binomial_power(1) == U("1 + t"));
    CHECK(binomial_power(2) == U("1 + t + 1/4*t^2"));
    CHECK(binomial_power(3) == U("1 + t + 1/3*t^2 + 1/27*t^3"));
    CHECK_THROWS_AS(binomial_power(0), std::invalid_argument);
}

TEST_CASE("binomial_power_match") {
    for (int k = 1; k <= 6; ++k) CHECK(binomial_power_match(binomial_power(k)) == k);
    CHECK(!binomial_power_match(U("1")).has_value());
    CHECK(!binomial_power_match(U("1 + 2*t")).has_value());
    CHECK(!binomial_power_match(U("1 + t + t^2")).has_value());
    CHECK(!binomial_power_match(U("2 + t")).has_value());
    CHECK_THROWS_AS(binomial_power_match(P2("1 + x1")), std::invalid_argument);
}

TEST_CASE("axis profiles of the four models") {
    struct Case {
        Polynomial P;
        int s;
        Polynomial p_expected;
        Polynomial q_expected;
    };
    std::vector<Case> cases{
        {P2("1 + x1 + x2"), 3, U("1 + t"), U("1")},
        {P2("(1+x1)(1+x2)"), 2, U("1 + t"), U("1 + t")},
        {P2("(1+(x1+x2)/3)^3"), 1, U("(1+t/3)^3"), U("(1+t/3)^2")},
        {P2("(1+x1/2)^2*(1+x2/2)^2"), 1, U("(1+t/2)^2"), U("(1+t/2)^2")},
    };
    for (const auto& c : cases) {
        for (int axis = 0; axis < 2; ++axis) {
            AxisProfile profile = axis_profile(c.P, axis);
            // Every model here is symmetric in x1 <-> x2.
            CHECK(profile.p == c.p_expected);
            CHECK(profile.q_profile == c.q_expected);
            CHECK(profile.axis_index == axis);
            CHECK(axis_consistency_check(profile, c.s, 2));
        }
    }
    CHECK_THROWS_AS(axis_profile(P2("1 + x1"), 2), std::out_of_range);
}

TEST_CASE("axis consistency rejects mismatched data") {
    // Right profile, wrong Einstein constant: forces the wrong exponent.
    CHECK(!axis_consistency_check(axis_profile(P2("(1+x1)(1+x2)"), 0), 3, 2));
    CHECK(!axis_consistency_check(axis_profile(P2("(1+x1/2)^2*(1+x2/2)^2"), 0), 2, 2));

    // Restriction that is not a binomial power.
    CHECK(!axis_consistency_check(AxisProfile{U("1 + t + t^2"), U("1"), 0}, 1, 2));

    // k = 3 is not admitted at s = n = 2.
    CHECK(!axis_consistency_check(AxisProfile{binomial_power(3), U("1 + t/3"), 0}, 2, 2));

    // Correct p, corrupted derivative profile.
    CHECK(!axis_consistency_check(AxisProfile{U("1 + t"), U("1 + 2*t"), 0}, 2, 2));

    // s out of range.
    CHECK(!axis_consistency_check(AxisProfile{U("1 + t"), U("1"), 0}, 5, 2));
}

TEST_CASE("Cauchy data validation") {
    CauchyDatum d = CauchyDatum::make(1, 2);
    CHECK(d.p0 == U("(1+t/2)^2"));
    CHECK(d.p1 == U("(1+t/2)^2"));  // exponent k(1-s)+2 = 2

    CauchyDatum d13 = CauchyDatum::make(1, 3);
    CHECK(d13.p0 == U("(1+t/3)^3"));
    CHECK(d13.p1 == U("(1+t/3)^2"));

    CauchyDatum d21 = CauchyDatum::make(2, 1);
    CHECK(d21.p0 == U("1 + t"));
    CHECK(d21.p1 == U("1 + t"));

    CauchyDatum d31 = CauchyDatum::make(3, 1);
    CHECK(d31.p0 == U("1 + t"));
    CHECK(d31.p1 == U("1"));

    CHECK_THROWS_AS(CauchyDatum::make(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(CauchyDatum::make(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(CauchyDatum::make(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(CauchyDatum::make(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(CauchyDatum::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(CauchyDatum::make(1, 0), std::invalid_argument);
}

TEST_CASE("every admitted datum satisfies the axis equation") {
    for (int s = 1; s <= 3; ++s) {
        for (const CauchyDatum& d : enumerate_cauchy_data(s)) {
            CHECK(d_operator(d.p0) * d.p1 == pow(d.p0, 3 - s));
        }
    }
}

TEST_CASE("enumeration is complete and ordered") {
    auto one = enumerate_cauchy_data(3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].k == 1);

    auto two = enumerate_cauchy_data(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].k == 1);

    auto three = enumerate_cauchy_data(1);
    REQUIRE(three.size() == 2);
    CHECK(three[0].k == 2);
    CHECK(three[1].k == 3);

    CHECK_THROWS_AS(enumerate_cauchy_data(4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cauchy_data(1, 3), std::invalid_argument);
}

TEST_CASE("root system validation") {
    CHECK_THROWS_AS(RootSystem::make({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make({Rational(1)}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make({Rational(0)}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make({Rational(2), Rational(2)}, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::make({Rational(2)}, {0}), std::invalid_argument);
}

TEST_CASE("single-root compatibility: vanishes exactly when k = r") {
    CHECK(root_system_lhs(RootSystem::make({Rational(2)}, {2})).is_zero());
    CHECK(root_system_lhs(RootSystem::make({Rational(3)}, {3})).is_zero());
    CHECK(root_system_lhs(RootSystem::make({Rational(1)}, {1})).is_zero());
    CHECK(!root_system_lhs(RootSystem::make({Rational(2)}, {1})).is_zero());
    CHECK(!root_system_lhs(RootSystem::make({Rational(3, 2)}, {1})).is_zero());
}

TEST_CASE("two-root compatibility frozen value") {
    Polynomial lhs = root_system_lhs(RootSystem::make({Rational(1), Rational(2)}, {1, 1}));
    CHECK(lhs == U("3*t^2 + 8*t + 2"));
}

TEST_CASE("vandermonde determinant frozen values") {
    CHECK(vandermonde_det({Rational(1), Rational(2)}) == Rational(-4));
    CHECK(vandermonde_det({Rational(1), Rational(2), Rational(3)}) == Rational(-72));
    CHECK(vandermonde_det({Rational(5)}) == Rational(5));
    CHECK_THROWS_AS(vandermonde_det({}), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_det({Rational(1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_det({Rational(0)}), std::invalid_argument);
}

TEST_CASE("vandermonde determinant matches the closed form on random roots") {
    std::mt19937_64 rng(330122);
    std::uniform_int_distribution<int> size_dist(1, 5);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 4);
    for (int iter = 0; iter < 30; ++iter) {
        int R = size_dist(rng);
        std::set<Rational> seen;
        while (static_cast<int>(seen.size()) < R) {
            Rational r(num_dist(rng), den_dist(rng));
            if (!r.is_zero()) seen.insert(r);
        }
        std::vector<Rational> roots(seen.begin(), seen.end());
        std::shuffle(roots.begin(), roots.end(), rng);

        Rational expected(1);
        for (int i = 2; i <= R; ++i) expected *= Rational(i);  // R!
        for (const Rational& r : roots) expected *= r;
        for (int i = 0; i < R; ++i)
            for (int j = i + 1; j < R; ++j) expected *= roots[i] - roots[j];

        CHECK(vandermonde_det(roots) == expected);
        CHECK(!vandermonde_det(roots).is_zero());
    }
}

TEST_CASE("low-order skeleton matches the models away from x1^2*x2^2") {
    CHECK(soln2_template(1, 2) == P2("(1+x1)(1+x2)"));
    CHECK(soln2_template(1, 3) == P2("1 + x1 + x2"));
    CHECK(soln2_template(3, 1) == P2("(1+(x1+x2)/3)^3"));

    Polynomial diff = P2("(1+x1/2)^2*(1+x2/2)^2") - soln2_template(2, 1);
    CHECK(!diff.is_zero());
    CHECK(try_exact_divide(diff, P2("x1^2*x2^2")).has_value());

    CHECK_THROWS_AS(soln2_template(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(soln2_template(2, 3), std::invalid_argument);  // exponent k(1-s)+2 < 0
}
