#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kemae/parse.hpp"
#include "random_poly.hpp"

using namespace kemae;

namespace {

Polynomial P2(const std::string& text) { return parse_expression(text, {"x1", "x2"}); }
Polynomial U(const std::string& text) { return parse_expression(text, {"t"}); }

}  // namespace

TEST_CASE("exponent order: total degree first, then lexicographic") {
    ExponentVector a({1, 0}), b({0, 1}), c({0, 2});
    CHECK(grlex_less(b, a));        // same degree: lex on the exponent tuple
    CHECK(grlex_less(a, c));        // degree dominates
    CHECK(!grlex_less(a, a));
    CHECK((a + b) == ExponentVector({1, 1}));
    CHECK(try_subtract(c, b) == ExponentVector({0, 1}));
    CHECK(!try_subtract(b, a).has_value());
}

TEST_CASE("canonical form never stores zeros; equality is structural") {
    Polynomial p(2);
    p.add_term(ExponentVector({1, 1}), Rational(1, 2));
    p.add_term(ExponentVector({1, 1}), Rational(-1, 2));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(p.total_degree() == -1);

    Polynomial q = Polynomial::variable(2, 0) + Polynomial::constant(2, Rational(1));
    CHECK(q == P2("1+x1"));
    CHECK(q != P2("1+x2"));
}

TEST_CASE("leading term comes first (descending degree, lex)") {
    Polynomial p = P2("1 + x2 + x1 + x1^2*x2 + x2^3");
    auto it = p.terms().begin();
    CHECK(it->first == ExponentVector({2, 1}));  // degree 3, lex-max
    ++it;
    CHECK(it->first == ExponentVector({0, 3}));
}

TEST_CASE("degree bookkeeping") {
    Polynomial p = P2("1 + x1^2 + x1*x2^3");
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 3);
    CHECK(p.constant_term() == Rational(1));
    CHECK(p.coefficient(ExponentVector({1, 3})) == Rational(1));
    CHECK(p.coefficient(ExponentVector({5, 5})) == Rational(0));
}

TEST_CASE("to_string canonical form") {
    CHECK(to_string(U("(1+t/2)^2")) == "1/4*t^2 + t + 1");
    CHECK(to_string(P2("x1*x2 - x1 - 1")) == "x1*x2 - x1 - 1");
    CHECK(to_string(P2("0")) == "0");
    CHECK(to_string(P2("-x1^2")) == "-x1^2");
    CHECK(to_string(P2("x1 - 1/3")) == "x1 - 1/3");
}

TEST_CASE("pow") {
    CHECK(pow(P2("1+x1"), 0) == P2("1"));
    CHECK(pow(P2("1+x1"), 3) == P2("1 + 3*x1 + 3*x1^2 + x1^3"));
    CHECK(pow(P2("0"), 2) == P2("0"));
    CHECK_THROWS_AS(pow(P2("1+x1"), -1), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    Polynomial p = P2("x1^3*x2 + 2*x2^2 + 5");
    CHECK(partial(p, 0) == P2("3*x1^2*x2"));
    CHECK(partial(p, 1) == P2("x1^3 + 4*x2"));
    CHECK(partial(P2("7"), 0).is_zero());
}

TEST_CASE("scale_vars substitutes x_i -> f_i*x_i exactly") {
    Polynomial p = P2("1 + x1 + x2^2");
    Polynomial scaled = scale_vars(p, {Rational(1, 2), Rational(3)});
    CHECK(scaled == P2("1 + 1/2*x1 + 9*x2^2"));
    CHECK_THROWS_AS(scale_vars(p, {Rational(0), Rational(1)}), std::invalid_argument);
}

TEST_CASE("restrict_axis keeps one variable, zeroes the rest") {
    CHECK(restrict_axis(P2("(1+x1)*(1+x2)"), 0) == U("1+t"));
    CHECK(restrict_axis(P2("1+x1*x2"), 0) == U("1"));
    CHECK(restrict_axis(P2("(1+(x1+x2)/3)^3"), 1) == U("(1+t/3)^3"));
    CHECK_THROWS_AS(restrict_axis(P2("1"), 2), std::out_of_range);
}

TEST_CASE("promote_univariate embeds into a larger variable set") {
    Polynomial u = U("1 + 2*t + t^2");
    CHECK(promote_univariate(u, 2, 0) == P2("1 + 2*x1 + x1^2"));
    CHECK(promote_univariate(u, 2, 1) == P2("1 + 2*x2 + x2^2"));
    CHECK(restrict_axis(promote_univariate(u, 3, 2), 2) == u);
}

TEST_CASE("coefficient_in_var extracts and drops the variable") {
    Polynomial p = P2("(1+x1)*(1+x2)^2");
    CHECK(coefficient_in_var(p, 1, 0) == U("1+t"));
    CHECK(coefficient_in_var(p, 1, 1) == U("2+2*t"));
    CHECK(coefficient_in_var(p, 1, 2) == U("1+t"));
    CHECK(coefficient_in_var(p, 1, 3).is_zero());
    CHECK(coefficient_in_var(p, 0, 1) == U("(1+t)^2"));
}

TEST_CASE("exact division recovers factors; remainder is reported") {
    Polynomial a = P2("1 + x1 + x2"), b = P2("1 + x1*x2 + x2^2");
    CHECK(exact_divide(a * b, b) == a);
    CHECK(try_exact_divide(a * b, a) == b);
    CHECK(!try_exact_divide(P2("x1^2 + 1"), P2("x1 + 1")).has_value());
    try {
        exact_divide(P2("x1^2 + 1"), P2("x1 + 1"));
        FAIL("expected NotDivisibleError");
    } catch (const NotDivisibleError& e) {
        CHECK(e.remainder() == P2("2"));  // x1^2+1 = (x1+1)(x1-1) + 2
    }
    CHECK_THROWS_AS(exact_divide(a, P2("0")), std::invalid_argument);
    CHECK(exact_divide(P2("0"), b).is_zero());
}

TEST_CASE("determinant: frozen small cases") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = P2("1+x2");
    m.at(0, 1) = P2("-x1");
    m.at(1, 0) = P2("-x2");
    m.at(1, 1) = P2("1+x1");
    CHECK(determinant(m) == P2("1 + x1 + x2"));

    PolyMatrix id(3, 2);
    for (int i = 0; i < 3; ++i) id.at(i, i) = P2("1");
    CHECK(determinant(id) == P2("1"));
}

TEST_CASE("determinant is multilinear and alternating in rows") {
    std::mt19937_64 rng(812331);
    for (int n : {2, 3}) {
        for (int iter = 0; iter < 25; ++iter) {
            PolyMatrix m(n, 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = testutil::random_poly(rng, 2, 2, 3);
            Polynomial d = determinant(m);

            // scaling one row scales the determinant
            PolyMatrix scaled = m;
            Rational c(3, 7);
            for (int j = 0; j < n; ++j) scaled.at(0, j) *= c;
            CHECK(determinant(scaled) == d * c);

            // swapping two rows flips the sign
            PolyMatrix swapped = m;
            for (int j = 0; j < n; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
            CHECK(determinant(swapped) == -d);

            // additivity in the first row
            PolyMatrix added = m;
            Polynomial extra = testutil::random_poly(rng, 2, 2, 3);
            PolyMatrix other = m;
            for (int j = 0; j < n; ++j) other.at(0, j) = extra * Polynomial::variable(2, 0);
            for (int j = 0; j < n; ++j) added.at(0, j) += other.at(0, j);
            CHECK(determinant(added) == d + determinant(other));

            // equal rows kill the determinant
            PolyMatrix degenerate = m;
            for (int j = 0; j < n; ++j) degenerate.at(1, j) = degenerate.at(0, j);
            CHECK(determinant(degenerate).is_zero());
        }
    }
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937_64 rng(77123);
    for (int n : {1, 2, 3}) {
        for (int iter = 0; iter < 40; ++iter) {
            Polynomial a = testutil::random_poly(rng, n, 4, 5);
            Polynomial b = testutil::random_poly(rng, n, 4, 5);
            Polynomial c = testutil::random_poly(rng, n, 4, 5);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Polynomial(n));
            CHECK(a * Polynomial::constant(n, Rational(1)) == a);
            CHECK((a * Polynomial(n)).is_zero());
        }
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937_64 rng(411);
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial a = testutil::random_poly(rng, 3, 5, 6);
        CHECK(partial(partial(a, 0), 1) == partial(partial(a, 1), 0));
        CHECK(partial(partial(a, 1), 2) == partial(partial(a, 2), 1));
    }
}

TEST_CASE("exact_divide(a*b, b) == a on random input") {
    std::mt19937_64 rng(90817);
    for (int n : {1, 2, 3}) {
        for (int iter = 0; iter < 40; ++iter) {
            Polynomial a = testutil::random_poly(rng, n, 3, 4);
            Polynomial b = testutil::random_poly(rng, n, 3, 4);
            if (b.is_zero()) continue;
            CHECK(exact_divide(a * b, b) == a);
        }
    }
}

TEST_CASE("scale_vars round-trips with inverse factors") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial a = testutil::random_poly(rng, 2, 4, 5);
        std::vector<Rational> f{Rational(2, 3), Rational(-7, 5)};
        std::vector<Rational> finv{f[0].inverse(), f[1].inverse()};
        CHECK(scale_vars(scale_vars(a, f), finv) == a);
    }
}

TEST_CASE("default variable names") {
    CHECK(default_var_names(1) == std::vector<std::string>{"t"});
    CHECK(default_var_names(3) == std::vector<std::string>{"x1", "x2", "x3"});
}
