#include "semialg/l1.hpp"

namespace semialg {

ContextPtr make_context(const Engine& engine, Weight weight, bool quotient_zero)
{
    if (quotient_zero && !engine.has_zero()) {
        throw PreconditionError("quotient by the zero element requires an engine with a zero (" + to_string(engine) + ")");
    }
    return std::make_shared<const AlgebraContext>(AlgebraContext{engine, std::move(weight), quotient_zero});
}

AlgebraElement::AlgebraElement(ContextPtr context) : context_(std::move(context))
{
    if (!context_) throw PreconditionError("algebra element needs a context");
}

AlgebraElement::AlgebraElement(ContextPtr context, Terms terms) : AlgebraElement(std::move(context))
{
    for (const auto& [s, c] : terms) {
        if (engine_of(s) != context_->engine) {
            throw EngineMismatch("monomial " + to_string(s) + " does not belong to " + to_string(context_->engine));
        }
        if (context_->quotient_zero && semialg::is_zero(s)) {
            throw PreconditionError("the zero element is not a basis vector of the quotient algebra");
        }
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    terms_ = std::move(terms);
}

AlgebraElement AlgebraElement::delta(ContextPtr context, const Element& s, const Rational& coefficient)
{
    AlgebraElement f(std::move(context));
    f.add_term(s, coefficient);
    return f;
}

AlgebraElement AlgebraElement::unit(ContextPtr context)
{
    Element e = identity(context->engine);
    return delta(std::move(context), e);
}

Rational AlgebraElement::coefficient(const Element& s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Element& s, const Rational& c)
{
    if (engine_of(s) != context_->engine) {
        throw EngineMismatch("monomial " + to_string(s) + " does not belong to " + to_string(context_->engine));
    }
    if (context_->quotient_zero && semialg::is_zero(s)) {
        throw PreconditionError("the zero element is not a basis vector of the quotient algebra");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void AlgebraElement::check_same_context(const AlgebraElement& other) const
{
    if (context_ != other.context_ && !(*context_ == *other.context_)) {
        throw ContextMismatch("algebra elements live in different algebras");
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    check_same_context(other);
    for (const auto& [s, c] : other.terms_) add_term(s, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    check_same_context(other);
    for (const auto& [s, c] : other.terms_) add_term(s, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= scalar;
    return *this;
}

AlgebraElement AlgebraElement::plus_unit(const Rational& c) const
{
    AlgebraElement r = *this;
    r.add_term(identity(context_->engine), c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const
{
    check_same_context(other);
    return terms_ == other.terms_;
}

AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g)
{
    return conv(f, g);
}

AlgebraElement linear_combine(std::span<const std::pair<Rational, AlgebraElement>> terms)
{
    if (terms.empty()) throw PreconditionError("linear_combine needs at least one term");
    AlgebraElement out(terms.front().second.context());
    for (const auto& [c, f] : terms) out += c * f;
    return out;
}

AlgebraElement conv(const AlgebraElement& f, const AlgebraElement& g)
{
    if (f.context() != g.context() && !(*f.context() == *g.context())) {
        throw ContextMismatch("convolution of elements from different algebras");
    }
    const bool drop_zero = f.context()->quotient_zero;
    AlgebraElement::Terms acc;
    Rational prod;
    for (const auto& [s, a] : f.terms()) {
        for (const auto& [t, b] : g.terms()) {
            Element st = multiply(s, t);
            if (drop_zero && is_zero(st)) continue;
            prod = a * b;
            auto [it, inserted] = acc.try_emplace(std::move(st), prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return AlgebraElement(f.context(), std::move(acc));
}

Rational norm(const AlgebraElement& f)
{
    const Weight& w = f.context()->weight;
    Rational total = 0;
    for (const auto& [s, c] : f.terms()) {
        total += abs(c) * (is_zero(s) ? w.zero_value() : w(s));
    }
    return total;
}

bool is_idempotent(const AlgebraElement& f)
{
    return conv(f, f) == f;
}

AlgebraElement restrict(const AlgebraElement& f, const std::function<bool(const Element&)>& keep)
{
    AlgebraElement::Terms kept;
    for (const auto& [s, c] : f.terms()) {
        if (keep(s)) kept.emplace(s, c);
    }
    return AlgebraElement(f.context(), std::move(kept));
}

AlgebraElement power(const AlgebraElement& f, std::uint64_t n)
{
    AlgebraElement acc = AlgebraElement::unit(f.context());
    AlgebraElement base = f;
    while (n > 0) {
        if (n & 1U) acc = conv(acc, base);
        n >>= 1U;
        if (n > 0) base = conv(base, base);
    }
    return acc;
}

AlgebraElement commutator(const AlgebraElement& f, const AlgebraElement& g)
{
    return conv(f, g) - conv(g, f);
}

std::optional<Rational> square_ratio(const AlgebraElement& f, const AlgebraElement& f_squared)
{
    if (f.is_zero()) return std::nullopt;
    const auto& [s, c] = *f.terms().begin();
    Rational ratio = f_squared.coefficient(s) / c;
    if (ratio * f == f_squared) return ratio;
    return std::nullopt;
}

}  // namespace semialg
