#include "semialg/spectral.hpp"
#include "support.hpp"

#include <numbers>

using namespace semialg;
using namespace semialg::test;

namespace {

LaurentElement laurent(std::map<std::int64_t, Rational> c)
{
    return LaurentElement::from(std::move(c));
}

}  // namespace

TEST_CASE("exact inversion in Q[Z/m]")
{
    const auto Z1 = algebra("cyclic:1");
    CHECK(cyclic_invert(el(Z1, "e")) == AlgebraElement::unit(Z1));
    const auto Z2 = algebra("cyclic:2");
    CHECK_FALSE(cyclic_invert(el(Z2, "g0 + g1")));
    const auto Z3 = algebra("cyclic:3");
    const auto g = cyclic_invert(el(Z3, "2 g0 + g1"));
    REQUIRE(g);
    CHECK(*g == el(Z3, "4/9 g0 - 2/9 g1 + 1/9 g2"));
    CHECK_FALSE(cyclic_invert(AlgebraElement(Z3)));
    CHECK_THROWS_AS(cyclic_invert(el(algebra("bc"), "e")), EngineMismatch);
    const auto Z5 = algebra("cyclic:5");
    const auto h = cyclic_invert(el(Z5, "1/2 g0 - 1/3 g2"));
    REQUIRE(h);
    CHECK(el(Z5, "1/2 g0 - 1/3 g2") * *h == AlgebraElement::unit(Z5));
}

TEST_CASE("discrete Fourier transform")
{
    for (auto v : cyclic_dft(el(algebra("cyclic:4"), "g0"))) CHECK(std::abs(v - 1.0) < 1e-15);
    const auto two = cyclic_dft(el(algebra("cyclic:2"), "g0 + g1"));
    CHECK(std::abs(two[0] - 2.0) < 1e-15);
    CHECK(std::abs(two[1]) < 1e-15);
    const auto three = cyclic_dft(el(algebra("cyclic:3"), "2 g0 + g1"));
    for (std::size_t k = 0; k < 3; ++k) {
        const auto omega = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / 3.0);
        CHECK(std::abs(three[k] - (2.0 + omega)) < 1e-12);
    }
}

TEST_CASE("exact and Fourier verdicts agree on random integer elements")
{
    std::mt19937_64 rng(42);
    std::size_t singular = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t m = 1 + rng() % 24;
        const auto ctx = algebra("cyclic:" + std::to_string(m));
        AlgebraElement f(ctx);
        for (std::uint64_t j = 0; j < m; ++j) {
            if (rng() % 2 == 0) {
                f += AlgebraElement::delta(ctx, make_cyclic(j, m), static_cast<long>(rng() % 5) - 2);
            }
        }
        if (trial % 4 == 0 && m > 1) f = f * (AlgebraElement::unit(ctx) - AlgebraElement::delta(ctx, make_cyclic(1, m)));
        double least = std::numeric_limits<double>::infinity();
        for (auto v : cyclic_dft(f)) least = std::min(least, std::abs(v));
        const auto g = cyclic_invert(f);
        REQUIRE(g.has_value() == (least > 1e-9));
        if (g) {
            REQUIRE(f * *g == AlgebraElement::unit(ctx));
            REQUIRE(cyclic_invert(f) == g);
        } else {
            ++singular;
        }
    }
    CHECK(singular > 75);
}

TEST_CASE("Laurent elements")
{
    const auto f = laurent({{-1, 1}, {0, -2}, {1, 1}});
    CHECK(f.norm() == 4);
    CHECK(std::abs(f.symbol({1, 0})) < 1e-15);
    CHECK(to_string(f) == "1*z^-1 + -2*z^0 + 1*z^1");
    CHECK(f * laurent({{0, 1}}) == f);
    CHECK((f - f).is_zero());
    CHECK(laurent({{3, 0}}).is_zero());
}

TEST_CASE("unit-circle root verdicts")
{
    const CircleRootReport unit = laurent_circle_roots(laurent({{0, 1}, {1, -1}}));
    CHECK(unit.verdict == LaurentVerdict::not_invertible);
    CHECK(unit.on_band == 1);
    const CircleRootReport outside = laurent_circle_roots(laurent({{0, 1}, {1, frac(-1, 2)}}));
    CHECK(outside.verdict == LaurentVerdict::invertible);
    CHECK(outside.outside == 1);
    CHECK(std::abs(std::abs(outside.roots.at(0)) - 2.0) < 1e-12);
    const CircleRootReport constant = laurent_circle_roots(laurent({{0, 1}}));
    CHECK(constant.verdict == LaurentVerdict::invertible);
    CHECK(constant.roots.empty());
    CHECK(laurent_circle_roots(laurent({{-1, 1}, {0, -2}, {1, 1}})).verdict == LaurentVerdict::not_invertible);
    // A root within 1e-9 of the circle but off it: the exact gcd test still certifies.
    const CircleRootReport close = laurent_circle_roots(laurent({{0, 1}, {1, frac(-1000000001, 1000000000)}}));
    CHECK(close.on_band == 1);
    CHECK(close.reciprocal_gcd_degree == 0);
    CHECK(close.verdict == LaurentVerdict::invertible);
    // Reciprocal pair 2, 1/2 off the circle.
    const CircleRootReport pair = laurent_circle_roots(laurent({{0, 1}, {1, frac(-5, 2)}, {2, 1}}));
    CHECK(pair.reciprocal_gcd_degree == 2);
    CHECK(pair.verdict == LaurentVerdict::invertible);
    CHECK_THROWS_AS(laurent_circle_roots(LaurentElement{}), PreconditionError);
}

TEST_CASE("nudging onto the invertibles")
{
    const auto f = laurent({{0, 1}, {1, -1}});
    const NudgeResult r = sr1_nudge(f, frac(1, 10));
    CHECK(r.rho == frac(9, 10));
    CHECK(r.g == laurent({{0, 1}, {1, frac(-9, 10)}}));
    CHECK(r.distance == frac(1, 10));
    CHECK(r.roots.verdict == LaurentVerdict::invertible);
    CHECK(r.inverse_norm_lower == doctest::Approx(10.0));

    const auto inv = laurent({{0, 1}, {1, frac(-1, 2)}});
    const NudgeResult same = sr1_nudge(inv, frac(1, 10));
    CHECK(same.g == inv);
    CHECK(same.distance == 0);
    CHECK(inverse_norm_estimate(inv) == doctest::Approx(2.0));

    const NudgeResult zero = sr1_nudge(LaurentElement{}, frac(1, 100));
    CHECK(zero.g == laurent({{0, frac(1, 100)}}));
    CHECK(zero.distance == frac(1, 100));
    CHECK_THROWS_AS(sr1_nudge(f, 0), PreconditionError);

    // Two-sided support: both z and z^-1 coefficients move.
    const auto two_sided = laurent({{-1, 1}, {0, -2}, {1, 1}});
    for (const Rational& eps : {frac(1, 10), frac(1, 100)}) {
        const NudgeResult t = sr1_nudge(two_sided, eps);
        CHECK(t.distance <= eps);
        CHECK(t.distance == (t.g - two_sided).norm());
        CHECK(t.roots.verdict == LaurentVerdict::invertible);
    }
}
