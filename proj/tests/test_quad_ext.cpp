#include "mgraph/quad_ext.hpp"

#include <doctest.h>

#include <random>

using namespace mgraph;

namespace {

QuadExt random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("sqrt2 squares to 2") {
    const QuadExt r = QuadExt::sqrt_radicand();
    CHECK(r * r == QuadExt(2));
    CHECK((r * r).is_rational());
}

TEST_CASE("powers of 3 - 2 sqrt2") {
    const QuadExt x(3, -2);
    CHECK(x.pow(0) == QuadExt(1));
    CHECK(x.pow(1) == x);
    CHECK(x.pow(2) == QuadExt(17, -12));
    CHECK(x.pow(3) == QuadExt(99, -70));
    // (3 - 2 sqrt2)(3 + 2 sqrt2) = 1
    CHECK(x * x.conjugate() == QuadExt(1));
    CHECK(x.norm() == 1);
}

TEST_CASE("reciprocal") {
    const QuadExt x(-2, 2);
    CHECK(x.reciprocal() == QuadExt(Rational(1, 2), Rational(1, 2)));
    CHECK(QuadExt(2, 2) / QuadExt(-2, 2) == QuadExt(3, 2));
    CHECK_THROWS_AS(QuadExt(0).reciprocal(), DegenerateInputError);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 300; ++i) {
        const QuadExt a = random_element(rng);
        const QuadExt b = random_element(rng);
        const QuadExt c = random_element(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b - b == a);
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
            CHECK(b * b.reciprocal() == QuadExt(1));
        }
        CHECK(a.pow(5) == a * a * a * a * a);
    }
}

TEST_CASE("components stay in lowest terms") {
    const QuadExt x(Rational(2, 4), Rational(6, 8));
    const QuadExt y = x + QuadExt(Rational(1, 2), Rational(1, 4));
    CHECK(y.rational_part() == 1);
    CHECK(y.rational_part().get_den() == 1);
    CHECK(y.radical_part() == 1);
}
