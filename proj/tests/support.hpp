#pragma once

#include "semialg/literal.hpp"

#include <doctest.h>

#include <random>

namespace semialg::test {

inline ContextPtr algebra(std::string_view spec)
{
    return parse_algebra_spec(spec);
}

inline AlgebraElement el(const ContextPtr& ctx, std::string_view expr)
{
    return parse_expression(ctx, expr);
}

inline Rational frac(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Random element with `terms` monomials drawn from `support` and small rational coefficients.
inline AlgebraElement random_element(const ContextPtr& ctx, const std::vector<Element>& support, std::size_t terms,
                                     std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    AlgebraElement f(ctx);
    for (std::size_t i = 0; i < terms; ++i) f += AlgebraElement::delta(ctx, support[pick(rng)], frac(num(rng), den(rng)));
    return f;
}

}  // namespace semialg::test
