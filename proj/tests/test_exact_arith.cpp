#include <doctest.h>

#include <random>
#include <vector>

#include "moebius/exact_arith.hpp"

using namespace moebius;

namespace {

bool canonical(const ExtendedRational& x)
{
    if (x.den() == 0) return x.num() == 1;
    if (x.num() == 0) return x.den() == 1;
    return gcd(x.num(), x.den()) == 1;
}

Rational q(long long n, long long d) { return Rational(n, d); }

}  // namespace

TEST_CASE("extended rationals are canonical")
{
    CHECK(ExtendedRational(6, 4) == ExtendedRational(3, 2));
    CHECK(ExtendedRational(6, 4).num() == 3);
    CHECK(ExtendedRational(7, 0) == ExtendedRational::infinity());
    CHECK(ExtendedRational(7, 0).num() == 1);
    CHECK(ExtendedRational(0, 9).den() == 1);
    CHECK_THROWS_AS(ExtendedRational(0, 0), ArithmeticError);
    CHECK_THROWS_AS(ExtendedRational(-1, 2), ArithmeticError);
    CHECK_THROWS_AS(ExtendedRational::from_rational(q(-1, 3)), ArithmeticError);
    CHECK_THROWS_AS(ExtendedRational::infinity().to_rational(), ArithmeticError);
}

TEST_CASE("compare examples")
{
    CHECK(compare(ExtendedRational(1, 2), ExtendedRational(2, 3)) == std::strong_ordering::less);
    CHECK(compare(ExtendedRational(5, 1), ExtendedRational::infinity()) == std::strong_ordering::less);
    CHECK(compare(ExtendedRational(2, 3), ExtendedRational(2, 3)) == std::strong_ordering::equal);
    CHECK(compare(ExtendedRational::infinity(), ExtendedRational::infinity()) == std::strong_ordering::equal);
    CHECK(ExtendedRational::infinity() > ExtendedRational(BigInt("1000000000000000000000000")));
}

TEST_CASE("compare is a total order on small fractions")
{
    std::vector<ExtendedRational> xs{ExtendedRational::infinity()};
    for (long long n = 0; n <= 20; ++n)
        for (long long d = 1; d <= 20; ++d) xs.emplace_back(n, d);
    for (const auto& p : xs) {
        CHECK(canonical(p));
        for (const auto& r : xs) {
            auto pr = compare(p, r);
            // Antisymmetry, and agreement with structural equality.
            CHECK((pr == 0) == (p == r));
            CHECK(compare(r, p) == (0 <=> pr));
        }
    }
    // Transitivity on a subsample, exhaustive over triples would be 10^8.
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int k = 0; k < 20000; ++k) {
        const auto& a = xs[pick(rng)];
        const auto& b = xs[pick(rng)];
        const auto& c = xs[pick(rng)];
        if (a <= b && b <= c) CHECK(a <= c);
    }
}

TEST_CASE("textual grammar")
{
    CHECK(ExtendedRational::parse("3/6").to_string() == "1/2");
    CHECK(ExtendedRational::parse("inf").is_infinite());
    CHECK(ExtendedRational::parse("5").to_string() == "5/1");
    CHECK(ExtendedRational::parse("2/0").to_string() == "inf");
    CHECK_THROWS_AS(ExtendedRational::parse("0/0"), ParseError);
    CHECK_THROWS_AS(ExtendedRational::parse("-1/2"), ParseError);
    CHECK_THROWS_AS(ExtendedRational::parse("x"), ParseError);

    auto z = GaussianRational::parse("3/2+1/1i");
    CHECK(z == GaussianRational(q(3, 2), q(1, 1)));
    CHECK(z.to_string() == "3/2+1/1i");
    CHECK(GaussianRational::parse("-1/2-2/4i").to_string() == "-1/2-1/2i");
    CHECK(GaussianRational::parse("1+2i") == GaussianRational(1, 2));
    CHECK_THROWS_AS(GaussianRational::parse("1/2"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/0+1i"), ParseError);
}

TEST_CASE("gaussian_div examples")
{
    GaussianRational i{0, 1};
    CHECK(gaussian_div({1, 1}, {1, -1}) == i);
    CHECK(gaussian_div({q(1, 2), q(1, 2)}, {q(1, 2), q(-1, 2)}) == i);
    GaussianRational z{q(7, 3), q(-5, 11)};
    CHECK(gaussian_div(z, {1, 0}) == z);
    CHECK_THROWS_AS(gaussian_div(z, {0, 0}), DivisionByZero);
}

TEST_CASE("gaussian_div round trip on random inputs")
{
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    auto random_q = [&] { return q(num(rng), den(rng)); };
    for (int k = 0; k < 2000; ++k) {
        GaussianRational z{random_q(), random_q()};
        GaussianRational w{random_q(), random_q()};
        if (w.is_zero()) continue;
        GaussianRational quotient = z / w;
        CHECK(quotient * w == z);
        CHECK(gcd(numerator(quotient.re), denominator(quotient.re)) == 1);
    }
}
