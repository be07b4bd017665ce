#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evolab/gaussian.hpp"
#include "evolab/parse.hpp"
#include "testutil.hpp"

using namespace evolab;
using testutil::rand_gaussian;
using testutil::rand_nonzero_gaussian;

namespace {
GaussianRational G(const std::string& s) { return parse_gaussian(s); }
} // namespace

TEST_CASE("rational canonical form") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7).numerator() == 0);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian arithmetic examples") {
    CHECK(G("1/2+1i") * G("1/2-1i") == G("5/4"));
    CHECK(G("1") / GaussianRational::i() == G("-i"));
    CHECK(G("2/3") + G("1/6") == G("5/6"));
    CHECK_THROWS_AS(G("1") / G("0"), std::domain_error);
}

TEST_CASE("is_zero") {
    CHECK(G("0").is_zero());
    CHECK_FALSE(G("1/7i").is_zero());
    CHECK((G("1/2") - G("1/2")).is_zero());
}

TEST_CASE("field axioms on random samples") {
    testutil::Rng rng(101);
    for (int t = 0; t < 300; ++t) {
        GaussianRational a = rand_gaussian(rng), b = rand_gaussian(rng), c = rand_gaussian(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("string round trip is exact") {
    testutil::Rng rng(102);
    for (int t = 0; t < 300; ++t) {
        GaussianRational a = rand_gaussian(rng), b = rand_gaussian(rng);
        for (auto& v : {a + b, a - b, a * b}) CHECK(parse_gaussian(v.to_string()) == v);
        if (!b.is_zero()) {
            GaussianRational q = a / b;
            CHECK(parse_gaussian(q.to_string()) == q);
        }
    }
    CHECK(G("3i").to_string() == "3i");
    CHECK(G("-i").to_string() == "-i");
    CHECK(G("1/2-3/4i").to_string() == "1/2-3/4i");
}

TEST_CASE("canonical form invariants after arithmetic") {
    testutil::Rng rng(103);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rand_gaussian(rng), b = rand_nonzero_gaussian(rng);
        GaussianRational v = a / b;
        for (const Rational& part : {v.re(), v.im()}) {
            CHECK(part.denominator() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), part.numerator().get_mpz_t(),
                    part.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("exact cube roots in Q(i)") {
    CHECK(exact_cube_root(G("8")) == G("2"));
    CHECK(exact_cube_root(G("27/64")) == G("3/4"));
    CHECK(exact_cube_root(G("-1")) == G("-1"));
    CHECK(exact_cube_root(G("i")) == G("-i"));
    CHECK(exact_cube_root(G("-2+2i")) == G("1+1i")); // (1+i)^3
    CHECK(exact_cube_root(G("0")) == G("0"));
    CHECK_FALSE(exact_cube_root(G("2")).has_value());
    CHECK_FALSE(exact_cube_root(G("9")).has_value());
    CHECK_FALSE(exact_cube_root(G("1+1i")).has_value());

    // The cube root in Q(i) is unique when it exists (the primitive cube
    // roots of unity are not Gaussian), so cubing then extracting round-trips.
    testutil::Rng rng(104);
    for (int t = 0; t < 100; ++t) {
        GaussianRational r = rand_gaussian(rng);
        GaussianRational c = r * r * r;
        auto back = exact_cube_root(c);
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
}
