#pragma once

// Finitely supported elements of l1(S, w) with rational coefficients, and of
// the quotient algebra l1(S \ {zero}, mu) whose product drops monomials that
// land on the zero element.

#include "semialg/monoids.hpp"
#include "semialg/weight.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>

namespace semialg {

struct AlgebraContext {
    Engine engine;
    Weight weight;
    bool quotient_zero = false;

    bool operator==(const AlgebraContext&) const = default;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// Validates that quotient_zero is only requested for an engine with a zero.
ContextPtr make_context(const Engine& engine, Weight weight, bool quotient_zero = false);

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AlgebraElement {
public:
    using Terms = std::map<Element, Rational>;

    explicit AlgebraElement(ContextPtr context);
    AlgebraElement(ContextPtr context, Terms terms);

    static AlgebraElement delta(ContextPtr context, const Element& s, const Rational& coefficient = 1);
    static AlgebraElement unit(ContextPtr context);

    const ContextPtr& context() const { return context_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Rational coefficient(const Element& s) const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& scalar);

    friend AlgebraElement operator+(AlgebraElement f, const AlgebraElement& g) { return f += g; }
    friend AlgebraElement operator-(AlgebraElement f, const AlgebraElement& g) { return f -= g; }
    friend AlgebraElement operator*(AlgebraElement f, const Rational& c) { return f *= c; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement f) { return f *= c; }
    friend AlgebraElement operator-(AlgebraElement f) { return f *= Rational(-1); }
    friend AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g);

    /// Scalar multiple of the unit added in place; convenient for p - 1/2 and friends.
    AlgebraElement plus_unit(const Rational& c) const;

    bool operator==(const AlgebraElement& other) const;

private:
    void check_same_context(const AlgebraElement& other) const;
    void add_term(const Element& s, const Rational& c);

    ContextPtr context_;
    Terms terms_;
};

AlgebraElement linear_combine(std::span<const std::pair<Rational, AlgebraElement>> terms);

AlgebraElement conv(const AlgebraElement& f, const AlgebraElement& g);

/// Weighted l1 norm, exact.
Rational norm(const AlgebraElement& f);

bool is_idempotent(const AlgebraElement& f);

AlgebraElement restrict(const AlgebraElement& f, const std::function<bool(const Element&)>& keep);

/// f^n by repeated squaring (n = 0 gives the unit).
AlgebraElement power(const AlgebraElement& f, std::uint64_t n);

AlgebraElement commutator(const AlgebraElement& f, const AlgebraElement& g);

/// When f^2 = c f for a rational c (f != 0), returns c.
std::optional<Rational> square_ratio(const AlgebraElement& f, const AlgebraElement& f_squared);

}  // namespace semialg
